#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sumlab {

// Labels are unbounded non-negative integers. The closed-form schemes grow
// exponentially and leave the 64-bit range around n = 120, so everything
// label-valued goes through cpp_int.
using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant breaks (exhausted repair budget,
// a finished labelling failing its own validity check, ...). These are
// bugs, not bad inputs.
class InternalError : public Error {
public:
    using Error::Error;
};

// Number of bits in the binary expansion of x; bit_length(0) == 0.
inline unsigned bit_length(const Int& x) {
    if (x <= 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
}

// ceil(log2(x)) for x >= 1, with ceil_log2(1) == 0.
inline unsigned ceil_log2(const Int& x) {
    if (x < 1) throw Error("ceil_log2: argument must be >= 1");
    if (x == 1) return 0;
    return bit_length(x - 1);
}

inline Int pow2(unsigned k) {
    return Int(1) << k;
}

}  // namespace sumlab
