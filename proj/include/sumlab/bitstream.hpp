#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumlab/types.hpp"

namespace sumlab {

// MSB-first bit accumulator. finish() pads the last byte with zero bits.
class BitWriter {
public:
    void put_bit(int b) {
        if (bit_ == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bit_));
        bit_ = (bit_ + 1) & 7;
        ++count_;
    }

    // width low bits of x, most significant first.
    void put_int(const Int& x, unsigned width) {
        for (unsigned i = width; i-- > 0;)
            put_bit(boost::multiprecision::bit_test(x, i) ? 1 : 0);
    }

    void put_unary(unsigned k) {  // k ones then a zero
        for (unsigned i = 0; i < k; ++i) put_bit(1);
        put_bit(0);
    }

    // Elias gamma: floor(log2 x) zeros, then x in binary. x >= 1.
    void put_gamma(const Int& x) {
        if (x < 1) throw Error("gamma code: value must be >= 1");
        unsigned len = bit_length(x);
        for (unsigned i = 1; i < len; ++i) put_bit(0);
        put_int(x, len);
    }

    std::size_t bit_count() const { return count_; }
    std::vector<std::uint8_t> finish() const { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    unsigned bit_ = 0;
    std::size_t count_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

    int get_bit() {
        if (pos_ >= data_.size() * 8) throw Error("truncated bit stream");
        int b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
        ++pos_;
        return b;
    }

    Int get_int(unsigned width) {
        Int x = 0;
        for (unsigned i = 0; i < width; ++i) x = (x << 1) | get_bit();
        return x;
    }

    unsigned get_unary() {
        unsigned k = 0;
        while (get_bit() == 1) ++k;
        return k;
    }

    Int get_gamma() {
        unsigned zeros = 0;
        while (get_bit() == 0) ++zeros;
        Int x = 1;
        for (unsigned i = 0; i < zeros; ++i) x = (x << 1) | get_bit();
        return x;
    }

    std::size_t position() const { return pos_; }

    // The remainder of the stream must be zero padding within the final byte.
    void expect_zero_padding() const {
        std::size_t total = data_.size() * 8;
        if (total - pos_ >= 8) throw Error("trailing data after end of stream");
        for (std::size_t p = pos_; p < total; ++p)
            if ((data_[p >> 3] >> (7 - (p & 7))) & 1) throw Error("nonzero padding bits");
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace sumlab
