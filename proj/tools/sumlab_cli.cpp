#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumlab/codec.hpp"
#include "sumlab/labeller.hpp"
#include "sumlab/metrics.hpp"
#include "sumlab/oracle.hpp"
#include "sumlab/schemes.hpp"

using namespace sumlab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::uint8_t> read_binary(const std::string& path) {
    std::string s = read_file(path);
    return {s.begin(), s.end()};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

void write_binary(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

SumLabelling load_labelling(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return labelling_from_json(text);
    return labelling_from_text(text);
}

// Accepts a labelling (text or JSON) or a bare label list.
SumEncoding load_encoding(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(path + " is empty");
    if (text[first] == '{') return encoding_from_labelling(labelling_from_json(text));
    if (text.compare(first, 8, "vertices") == 0)
        return encoding_from_labelling(labelling_from_text(text));
    return encoding_from_text(text);
}

VertexOrdering make_ordering(const Graph& g, const std::string& choice) {
    if (choice == "identity") return VertexOrdering::identity(g.vertex_count());
    if (choice == "degeneracy") return degeneracy_ordering(g).ordering;
    VertexOrdering o;
    std::istringstream in(choice);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            o.order.push_back(std::stoi(tok));
        } catch (...) {
            throw Error("bad ordering entry '" + tok + "'");
        }
    }
    o.validate(g.vertex_count());
    return o;
}

std::string labelling_output(const SumLabelling& l, bool json) {
    return json ? to_json(l) : to_text(l);
}

std::string render_bounds_text(const BoundReport& b) {
    std::ostringstream out;
    auto line = [&](const char* name, bool ok) {
        out << name << "  " << (ok ? "ok" : "exceeded") << '\n';
    };
    out << "vertex label limit  " << b.vertex_label_limit << '\n';
    line("vertex labels      ", b.vertex_labels_ok);
    out << "isolate label limit " << b.isolate_label_limit << '\n';
    line("isolate labels     ", b.isolate_labels_ok);
    out << "storage limit       " << b.storage_limit << '\n';
    line("fixed-width storage", b.storage_ok);
    out << "isolates/edges      " << b.isolate_count << "/" << b.edge_count << '\n';
    line("isolate budget     ", b.isolate_count_ok);
    return out.str();
}

constexpr std::uint8_t kTagGamma = 0x01;
constexpr std::uint8_t kTagIncidence = 0x02;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-labelling toolkit: encode graphs as integer sets"};
    app.require_subcommand(1);
    int rc = 0;

    // label
    std::string lab_graph, lab_order = "identity", lab_out;
    bool lab_unique = false, lab_json = false, lab_stats = false;
    auto* label_cmd = app.add_subcommand("label", "label a graph incrementally");
    label_cmd->add_option("--graph", lab_graph, "edge list file")->required();
    label_cmd->add_option("--order", lab_order, "identity, degeneracy, or i,j,k,...");
    label_cmd->add_flag("--unique", lab_unique, "one isolate per edge, no sharing");
    label_cmd->add_flag("--json", lab_json, "JSON output");
    label_cmd->add_flag("--stats", lab_stats, "per-step work on stderr");
    label_cmd->add_option("--out", lab_out, "output file (default stdout)");
    label_cmd->callback([&] {
        Graph g = parse_edge_list(read_file(lab_graph));
        LabellerOptions opts;
        opts.unique_isolates = lab_unique;
        std::vector<StepStats> stats;
        SumLabelling l = sum_label(g, make_ordering(g, lab_order), opts, &stats);
        if (lab_stats)
            for (const auto& s : stats)
                std::cerr << "step " << s.prefix_size + 1 << ": new edges " << s.new_neighbours
                          << ", increments " << s.increments << '\n';
        write_output(lab_out, labelling_output(l, lab_json));
    });

    // verify
    std::string ver_file;
    bool ver_exclusive = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a labelling decodes to its graph");
    verify_cmd->add_option("--labelling", ver_file, "labelling file")->required();
    verify_cmd->add_flag("--exclusive", ver_exclusive, "also require edge sums on isolates only");
    verify_cmd->callback([&] {
        SumLabelling l = load_labelling(ver_file);
        ValidityReport r = check_valid(l);
        if (!r.ok) {
            for (const auto& v : r.violations) std::cout << to_string(v) << '\n';
            rc = 1;
            return;
        }
        std::cout << "valid: " << l.base_graph.vertex_count() << " vertices, "
                  << l.base_graph.edge_count() << " edges, " << l.isolate_labels.size()
                  << " isolates\n";
        if (ver_exclusive) {
            if (is_exclusive(l)) {
                std::cout << "exclusive\n";
            } else {
                std::cout << "not exclusive\n";
                rc = 1;
            }
        }
    });

    // decode
    std::string dec_file, dec_out;
    auto* decode_cmd = app.add_subcommand("decode", "recover the graph from labels alone");
    decode_cmd->add_option("--encoding", dec_file, "label list or labelling file")->required();
    decode_cmd->add_option("--out", dec_out, "output file (default stdout)");
    decode_cmd->callback([&] {
        DecodeResult r = decode(load_encoding(dec_file));
        std::ostringstream out;
        out << serialize_edge_list(r.graph);
        out << "# isolated positions:";
        for (int p : r.isolate_positions) out << ' ' << p;
        out << '\n';
        write_output(dec_out, out.str());
    });

    // query
    std::string qry_file;
    int qry_i = 0, qry_j = 0;
    auto* query_cmd = app.add_subcommand("query", "adjacency of two label positions");
    query_cmd->add_option("--encoding", qry_file, "label list or labelling file")->required();
    query_cmd->add_option("i", qry_i, "first position, 1-based")->required();
    query_cmd->add_option("j", qry_j, "second position, 1-based")->required();
    query_cmd->callback([&] {
        SumEncoding enc = load_encoding(qry_file);
        std::cout << (adjacent(enc, qry_i, qry_j) ? "adjacent\n" : "not adjacent\n");
    });

    // metrics
    std::string met_file, met_out;
    int met_degeneracy = 0;
    bool met_json = false;
    auto* metrics_cmd = app.add_subcommand("metrics", "storage accounting for a labelling");
    metrics_cmd->add_option("--labelling", met_file, "labelling file")->required();
    metrics_cmd->add_option("--degeneracy", met_degeneracy,
                            "check bounds for a d-degenerate input");
    metrics_cmd->add_flag("--json", met_json, "JSON output");
    metrics_cmd->add_option("--out", met_out, "output file (default stdout)");
    metrics_cmd->callback([&] {
        SumLabelling l = load_labelling(met_file);
        StorageReport rep = storage_report(l);
        BoundReport bounds = met_degeneracy > 0 ? bound_report(l, met_degeneracy)
                                                : bound_report(l);
        if (met_json) {
            nlohmann::json j = nlohmann::json::parse(to_json(rep));
            j["bounds"] = {{"vertex_label_limit", bounds.vertex_label_limit.str()},
                           {"vertex_labels_ok", bounds.vertex_labels_ok},
                           {"isolate_label_limit", bounds.isolate_label_limit.str()},
                           {"isolate_labels_ok", bounds.isolate_labels_ok},
                           {"storage_limit", bounds.storage_limit},
                           {"storage_ok", bounds.storage_ok},
                           {"isolate_count_ok", bounds.isolate_count_ok}};
            write_output(met_out, j.dump(2) + "\n");
        } else {
            write_output(met_out, to_text(rep) + render_bounds_text(bounds));
        }
    });

    // scheme
    std::string sch_name, sch_graph, sch_out;
    int sch_n = 0, sch_d = 0;
    bool sch_json = false;
    auto* scheme_cmd = app.add_subcommand("scheme", "closed-form labellings for graph families");
    scheme_cmd
        ->add_option("--name", sch_name,
                     "path, matching-linear, matching-exponential, block-union, complete, "
                     "incidence")
        ->required();
    scheme_cmd->add_option("--n", sch_n, "vertex count");
    scheme_cmd->add_option("--d", sch_d, "levels for block-union");
    scheme_cmd->add_option("--graph", sch_graph, "edge list file (incidence only)");
    scheme_cmd->add_flag("--json", sch_json, "JSON output");
    scheme_cmd->add_option("--out", sch_out, "output file (default stdout)");
    scheme_cmd->callback([&] {
        SumLabelling l;
        if (sch_name == "path") {
            if (sch_n < 1) throw Error("path needs --n");
            l = sum_label(path_graph(sch_n), path_optimal_ordering(sch_n));
        } else if (sch_name == "matching-linear") {
            l = matching_linear(sch_n);
        } else if (sch_name == "matching-exponential") {
            l = matching_exponential(sch_n);
        } else if (sch_name == "block-union") {
            l = matching_block_union(sch_d);
        } else if (sch_name == "complete") {
            l = complete_graph_labelling(sch_n);
        } else if (sch_name == "incidence") {
            if (sch_graph.empty()) throw Error("incidence needs --graph");
            l = incidence_scheme(parse_edge_list(read_file(sch_graph)));
        } else {
            throw Error("unknown scheme '" + sch_name + "'");
        }
        write_output(sch_out, labelling_output(l, sch_json));
    });

    // serialize
    std::string ser_enc, ser_graph, ser_format = "gamma", ser_out;
    auto* ser_cmd = app.add_subcommand("serialize", "pack labels or an edge list into bits");
    ser_cmd->add_option("--encoding", ser_enc, "label list or labelling file");
    ser_cmd->add_option("--graph", ser_graph, "edge list file (incidence format)");
    ser_cmd->add_option("--format", ser_format, "gamma or incidence");
    ser_cmd->add_option("--out", ser_out, "output file")->required();
    ser_cmd->callback([&] {
        std::vector<std::uint8_t> bytes;
        if (ser_format == "gamma") {
            if (ser_enc.empty()) throw Error("gamma format needs --encoding");
            bytes = serialize_gamma(load_encoding(ser_enc));
            bytes.insert(bytes.begin(), kTagGamma);
        } else if (ser_format == "incidence") {
            if (ser_graph.empty()) throw Error("incidence format needs --graph");
            bytes = serialize_incidence(parse_edge_list(read_file(ser_graph)));
            bytes.insert(bytes.begin(), kTagIncidence);
        } else {
            throw Error("unknown format '" + ser_format + "'");
        }
        write_binary(ser_out, bytes);
    });

    // deserialize
    std::string des_in, des_out;
    auto* des_cmd = app.add_subcommand("deserialize", "unpack a serialized container");
    des_cmd->add_option("--in", des_in, "container file")->required();
    des_cmd->add_option("--out", des_out, "output file (default stdout)");
    des_cmd->callback([&] {
        std::vector<std::uint8_t> bytes = read_binary(des_in);
        if (bytes.empty()) throw Error("empty container");
        std::span<const std::uint8_t> body(bytes.data() + 1, bytes.size() - 1);
        if (bytes[0] == kTagGamma) {
            write_output(des_out, encoding_to_text(parse_gamma(body)));
        } else if (bytes[0] == kTagIncidence) {
            write_output(des_out, serialize_edge_list(parse_incidence(body)));
        } else {
            throw Error("unknown container tag");
        }
    });

    // bench
    int ben_n = 0, ben_m = -1, ben_d = 0, ben_queries = 1000;
    unsigned ben_seed = 1;
    std::string ben_order = "degeneracy";
    auto* ben_cmd = app.add_subcommand("bench", "label a random graph and time the pieces");
    ben_cmd->add_option("--n", ben_n, "vertex count")->required();
    ben_cmd->add_option("--m", ben_m, "edge count (default 2n)");
    ben_cmd->add_option("--d", ben_d, "build a d-degenerate graph instead");
    ben_cmd->add_option("--seed", ben_seed, "PRNG seed");
    ben_cmd->add_option("--order", ben_order, "identity, degeneracy, or i,j,k,...");
    ben_cmd->add_option("--queries", ben_queries, "random adjacency probes");
    ben_cmd->callback([&] {
        using clock = std::chrono::steady_clock;
        Graph g = ben_d > 0 ? random_degenerate_graph(ben_n, ben_d, ben_seed)
                            : random_graph(ben_n, ben_m < 0 ? 2 * ben_n : ben_m, ben_seed);
        auto t0 = clock::now();
        SumLabelling l = sum_label(g, make_ordering(g, ben_order));
        auto t1 = clock::now();
        SumEncoding enc = encoding_from_labelling(l);
        std::mt19937 gen(ben_seed + 1);
        int hits = 0;
        for (int q = 0; q < ben_queries; ++q) {
            int i = static_cast<int>(gen() % static_cast<unsigned>(enc.size())) + 1;
            int j = static_cast<int>(gen() % static_cast<unsigned>(enc.size())) + 1;
            if (i != j && adjacent(enc, i, j)) ++hits;
        }
        auto t2 = clock::now();
        auto ms = [](auto d) {
            return std::chrono::duration_cast<std::chrono::microseconds>(d).count() / 1000.0;
        };
        std::cout << to_text(storage_report(l));
        std::cout << "label time ms       " << ms(t1 - t0) << '\n'
                  << "query time ms       " << ms(t2 - t1) << '\n'
                  << "queries             " << ben_queries << '\n'
                  << "adjacent pairs      " << hits << '\n'
                  << "searches            " << enc.searches << '\n';
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "slow reference computations");
    oracle_cmd->require_subcommand(1);
    std::string sig_graph;
    int sig_smax = 6, sig_limit = 64;
    auto* sigma_cmd = oracle_cmd->add_subcommand(
        "sigma", "minimum isolates over all labellings, exhaustive");
    sigma_cmd->add_option("--graph", sig_graph, "edge list file")->required();
    sigma_cmd->add_option("--s-max", sig_smax, "give up above this many isolates");
    sigma_cmd->add_option("--limit", sig_limit, "largest vertex label tried");
    sigma_cmd->callback([&] {
        Graph g = parse_edge_list(read_file(sig_graph));
        std::cout << brute_force_sum_number(g, sig_smax, sig_limit) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
