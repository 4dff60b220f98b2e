#include "sumlab/labelling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sumlab {

namespace {

struct Entity {
    EntityRef ref;
    Int label;
};

std::vector<Entity> collect_entities(const SumLabelling& l) {
    int n = l.base_graph.vertex_count();
    if (static_cast<int>(l.vertex_labels.size()) != n)
        throw Error("labelling has " + std::to_string(l.vertex_labels.size()) +
                    " vertex labels for a graph on " + std::to_string(n) + " vertices");
    std::vector<Entity> es;
    es.reserve(l.vertex_labels.size() + l.isolate_labels.size());
    for (int v = 1; v <= n; ++v) {
        if (l.label_of(v) < 1) throw Error("labels must be positive");
        es.push_back({{false, v}, l.label_of(v)});
    }
    for (size_t k = 0; k < l.isolate_labels.size(); ++k) {
        if (l.isolate_labels[k] < 1) throw Error("labels must be positive");
        es.push_back({{true, static_cast<int>(k) + 1}, l.isolate_labels[k]});
    }
    return es;
}

std::string entity_str(const EntityRef& r, const Int& label) {
    std::ostringstream out;
    out << (r.is_isolate ? "isolate#" : "v") << r.index << "(" << label << ")";
    return out.str();
}

}  // namespace

std::string to_string(const Violation& v) {
    std::ostringstream out;
    switch (v.kind) {
        case Violation::Kind::pair:
            out << "pair: " << entity_str(v.a, v.label_a) << " and "
                << entity_str(v.b, v.label_b) << " share a label";
            break;
        case Violation::Kind::triple:
            out << "triple: " << v.label_a << " + " << v.label_b << " = " << v.sum
                << " carried by " << entity_str(v.witness, v.sum) << " but ("
                << entity_str(v.a, v.label_a) << "," << entity_str(v.b, v.label_b)
                << ") is not an edge";
            break;
        case Violation::Kind::missing:
            out << "missing witness: edge (" << entity_str(v.a, v.label_a) << ","
                << entity_str(v.b, v.label_b) << ") needs a vertex labelled " << v.sum;
            break;
    }
    return out.str();
}

std::vector<Violation> find_violations(const SumLabelling& l, bool during_construction) {
    auto entities = collect_entities(l);
    std::vector<Violation> out;

    // Duplicate labels. Two isolates may coincide while a labelling is still
    // being built; any other clash (and, once finalized, any clash at all)
    // is a violation.
    std::map<Int, std::vector<size_t>> by_label;
    for (size_t i = 0; i < entities.size(); ++i) by_label[entities[i].label].push_back(i);
    for (const auto& [label, idxs] : by_label) {
        for (size_t k = 1; k < idxs.size(); ++k) {
            const Entity& a = entities[idxs[k - 1]];
            const Entity& b = entities[idxs[k]];
            if (during_construction && a.ref.is_isolate && b.ref.is_isolate) continue;
            Violation v;
            v.kind = Violation::Kind::pair;
            v.a = a.ref;
            v.b = b.ref;
            v.label_a = a.label;
            v.label_b = b.label;
            out.push_back(std::move(v));
        }
    }

    // Decoded relation vs. declared edges, over every entity pair. Isolates
    // must stay isolated, so any witnessed sum touching one is a violation.
    for (size_t i = 0; i < entities.size(); ++i) {
        for (size_t j = i + 1; j < entities.size(); ++j) {
            const Entity& a = entities[i];
            const Entity& b = entities[j];
            Int sum = a.label + b.label;
            auto wit = by_label.find(sum);
            bool edge = !a.ref.is_isolate && !b.ref.is_isolate &&
                        l.base_graph.has_edge(a.ref.index, b.ref.index);
            if (wit != by_label.end() && !edge) {
                Violation v;
                v.kind = Violation::Kind::triple;
                bool swap = a.label > b.label;
                v.a = swap ? b.ref : a.ref;
                v.b = swap ? a.ref : b.ref;
                v.label_a = swap ? b.label : a.label;
                v.label_b = swap ? a.label : b.label;
                v.witness = entities[wit->second.front()].ref;
                v.sum = sum;
                out.push_back(std::move(v));
            } else if (wit == by_label.end() && edge) {
                Violation v;
                v.kind = Violation::Kind::missing;
                v.a = a.ref;
                v.b = b.ref;
                v.label_a = a.label;
                v.label_b = b.label;
                v.sum = sum;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

ValidityReport check_valid(const SumLabelling& l, bool during_construction) {
    ValidityReport r;
    r.violations = find_violations(l, during_construction);
    r.ok = r.violations.empty();
    return r;
}

bool is_exclusive(const SumLabelling& l) {
    std::set<Int> isolates(l.isolate_labels.begin(), l.isolate_labels.end());
    for (auto [u, w] : l.base_graph.edges())
        if (!isolates.count(l.label_of(u) + l.label_of(w))) return false;
    return true;
}

SumLabelling exclusive_lift(const std::vector<Int>& graph_labels,
                            const std::vector<Int>& extra_labels) {
    if (graph_labels.empty()) throw Error("exclusive_lift: no graph vertices");
    std::set<Int> all;
    for (const Int& x : graph_labels) {
        if (x < 1) throw Error("exclusive_lift: labels must be positive");
        if (!all.insert(x).second) throw Error("exclusive_lift: duplicate label");
    }
    for (const Int& x : extra_labels) {
        if (x < 1) throw Error("exclusive_lift: labels must be positive");
        if (!all.insert(x).second) throw Error("exclusive_lift: duplicate label");
    }

    int n = static_cast<int>(graph_labels.size());
    std::vector<Edge> edges;
    std::set<Int> lifted_isolates;
    for (const Int& x : extra_labels) lifted_isolates.insert(4 * x + 2);
    for (int u = 1; u <= n; ++u) {
        for (int w = u + 1; w <= n; ++w) {
            Int sum = graph_labels[static_cast<size_t>(u) - 1] +
                      graph_labels[static_cast<size_t>(w) - 1];
            if (all.count(sum)) {
                edges.emplace_back(u, w);
                // Keeps the edge decodable even when its only witness in the
                // input was a working vertex, which 4x+1 would strand.
                lifted_isolates.insert(4 * sum + 2);
            }
        }
    }

    SumLabelling out;
    out.base_graph = Graph(n, std::move(edges));
    out.vertex_labels.reserve(graph_labels.size());
    for (const Int& x : graph_labels) out.vertex_labels.push_back(4 * x + 1);
    out.isolate_labels.assign(lifted_isolates.begin(), lifted_isolates.end());
    return out;
}

namespace {

// Base graph implied by the labels alone: vertex pairs whose sum appears
// anywhere in the combined label set.
Graph implied_graph(const std::vector<Int>& vertex_labels,
                    const std::vector<Int>& isolate_labels) {
    std::set<Int> all(vertex_labels.begin(), vertex_labels.end());
    all.insert(isolate_labels.begin(), isolate_labels.end());
    int n = static_cast<int>(vertex_labels.size());
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int w = u + 1; w <= n; ++w)
            if (all.count(vertex_labels[static_cast<size_t>(u) - 1] +
                          vertex_labels[static_cast<size_t>(w) - 1]))
                edges.emplace_back(u, w);
    return Graph(n, std::move(edges));
}

Int parse_label(const std::string& tok, const char* where) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(std::string(where) + ": bad label '" + tok + "'");
    Int x(tok);
    if (x < 1) throw Error(std::string(where) + ": labels must be positive");
    return x;
}

}  // namespace

std::string to_text(const SumLabelling& l) {
    std::ostringstream out;
    out << "vertices\n";
    for (int v = 1; v <= l.base_graph.vertex_count(); ++v)
        out << v << ' ' << l.label_of(v) << '\n';
    out << "isolates\n";
    for (const Int& x : l.isolate_labels) out << x << '\n';
    return out.str();
}

SumLabelling labelling_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    enum class Section { none, vertices, isolates } section = Section::none;
    std::map<int, Int> vertex_labels;
    std::vector<Int> isolates;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        std::string where = "line " + std::to_string(line_no);
        if (tok == "vertices") {
            section = Section::vertices;
            continue;
        }
        if (tok == "isolates") {
            section = Section::isolates;
            continue;
        }
        if (section == Section::vertices) {
            std::string lab, extra;
            if (!(ls >> lab) || (ls >> extra)) throw Error(where + ": expected '<id> <label>'");
            int id = 0;
            try {
                id = std::stoi(tok);
            } catch (...) {
                throw Error(where + ": bad vertex id '" + tok + "'");
            }
            if (id < 1) throw Error(where + ": vertex id below 1");
            if (!vertex_labels.emplace(id, parse_label(lab, where.c_str())).second)
                throw Error(where + ": vertex " + std::to_string(id) + " listed twice");
        } else if (section == Section::isolates) {
            std::string extra;
            if (ls >> extra) throw Error(where + ": expected one label per line");
            isolates.push_back(parse_label(tok, where.c_str()));
        } else {
            throw Error(where + ": content before a 'vertices' or 'isolates' section");
        }
    }

    if (vertex_labels.empty()) throw Error("labelling has no vertices");
    int n = vertex_labels.rbegin()->first;
    if (static_cast<int>(vertex_labels.size()) != n)
        throw Error("vertex ids must cover 1.." + std::to_string(n) + " without gaps");

    SumLabelling l;
    l.vertex_labels.reserve(static_cast<size_t>(n));
    for (const auto& [id, lab] : vertex_labels) l.vertex_labels.push_back(lab);
    l.isolate_labels = std::move(isolates);
    l.base_graph = implied_graph(l.vertex_labels, l.isolate_labels);
    return l;
}

std::string to_json(const SumLabelling& l) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 1; v <= l.base_graph.vertex_count(); ++v)
        j["vertices"].push_back({{"id", v}, {"label", l.label_of(v).str()}});
    j["isolates"] = nlohmann::json::array();
    for (const Int& x : l.isolate_labels) j["isolates"].push_back(x.str());
    return j.dump(2) + "\n";
}

SumLabelling labelling_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad labelling JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("isolates"))
        throw Error("labelling JSON needs 'vertices' and 'isolates'");

    auto read_label = [](const nlohmann::json& v) -> Int {
        if (v.is_number_integer()) {
            Int x(v.get<std::int64_t>());
            if (x < 1) throw Error("labels must be positive");
            return x;
        }
        if (v.is_string()) return parse_label(v.get<std::string>(), "label");
        throw Error("labels must be strings or positive integers");
    };

    std::map<int, Int> vertex_labels;
    for (const auto& entry : j["vertices"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("label"))
            throw Error("each vertex entry needs 'id' and 'label'");
        int id = entry["id"].get<int>();
        if (id < 1) throw Error("vertex id below 1");
        if (!vertex_labels.emplace(id, read_label(entry["label"])).second)
            throw Error("vertex " + std::to_string(id) + " listed twice");
    }
    if (vertex_labels.empty()) throw Error("labelling has no vertices");
    int n = vertex_labels.rbegin()->first;
    if (static_cast<int>(vertex_labels.size()) != n)
        throw Error("vertex ids must cover 1.." + std::to_string(n) + " without gaps");

    SumLabelling l;
    for (const auto& [id, lab] : vertex_labels) l.vertex_labels.push_back(lab);
    for (const auto& entry : j["isolates"]) l.isolate_labels.push_back(read_label(entry));
    l.base_graph = implied_graph(l.vertex_labels, l.isolate_labels);
    return l;
}

}  // namespace sumlab
