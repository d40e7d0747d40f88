/**
 * Text, JSON, CSV and DOT formats.
 *
 * Edge lists: one "u v" pair per line ('#' starts a comment, a line with a
 * single token declares an isolated vertex). Labels are arbitrary tokens;
 * they are numbered in numeric order when all of them are integers and in
 * string order otherwise, so the line order never changes vertex ids. For
 * digraphs "u v" means u -> v.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "direction.hpp"
#include "dynamics.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "refinement.hpp"
#include "rng.hpp"
#include "version.hpp"

namespace dircomplex {

using Json = nlohmann::ordered_json;

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;
};

struct LabeledDigraph {
    Digraph digraph;
    std::vector<std::string> labels;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline std::optional<std::int64_t> parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

/// Sorted label list and the pairs translated to ids.
struct Interned {
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

inline Interned intern(const std::string& text) {
    std::vector<std::string> seen;
    std::vector<std::pair<std::string, std::string>> raw;
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto t = tokens(line);
        if (t.empty()) continue;
        if (t.size() > 2) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        for (const auto& s : t) seen.push_back(s);
        if (t.size() == 2) {
            if (t[0] == t[1]) throw ParseError("line " + std::to_string(lineno) + ": loop at " + t[0]);
            raw.emplace_back(t[0], t[1]);
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    bool numeric = std::all_of(seen.begin(), seen.end(), [](const std::string& s) { return parse_int(s).has_value(); });
    if (numeric)
        std::sort(seen.begin(), seen.end(),
                  [](const std::string& a, const std::string& b) { return *parse_int(a) < *parse_int(b); });
    Interned out;
    std::map<std::string, VertexId> id;
    for (const auto& s : seen) {
        id.emplace(s, static_cast<VertexId>(out.labels.size()));
        out.labels.push_back(s);
    }
    for (const auto& [a, b] : raw) out.pairs.emplace_back(id.at(a), id.at(b));
    return out;
}

inline std::string label_of(const std::vector<std::string>& labels, VertexId v) {
    return v < labels.size() ? labels[v] : std::to_string(v);
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

inline LabeledGraph parse_edge_list(const std::string& text) {
    detail::Interned in = detail::intern(text);
    return LabeledGraph{Graph(in.labels.size(), in.pairs), std::move(in.labels)};
}

inline LabeledDigraph parse_digraph(const std::string& text) {
    detail::Interned in = detail::intern(text);
    try {
        return LabeledDigraph{Digraph::from_arcs(in.labels.size(), in.pairs), std::move(in.labels)};
    } catch (const BadParameter& e) {
        throw ParseError(e.what());
    }
}

inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < n; ++v) out.push_back(std::to_string(v));
    return out;
}

inline std::string write_edge_list(const Graph& g, const std::vector<std::string>& labels = {}) {
    std::string out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out += detail::label_of(labels, v) + "\n";
    for (const Edge& e : g.edges()) out += detail::label_of(labels, e.u) + " " + detail::label_of(labels, e.v) + "\n";
    return out;
}

inline std::string write_digraph(const Digraph& d, const std::vector<std::string>& labels = {}) {
    std::string out;
    for (VertexId v = 0; v < d.vertex_count(); ++v)
        if (d.base().degree(v) == 0) out += detail::label_of(labels, v) + "\n";
    for (auto [t, h] : d.arcs()) out += detail::label_of(labels, t) + " " + detail::label_of(labels, h) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Complexes
// ---------------------------------------------------------------------------

struct ComplexInput {
    Complex complex;
    EnergyFunction energy;
    bool has_energy = false;
};

inline Simplex parse_simplex_key(const std::string& key) {
    Json j;
    try {
        j = Json::parse(key);
    } catch (const std::exception&) {
        throw ParseError("bad simplex key " + key);
    }
    if (!j.is_array() || j.empty()) throw ParseError("bad simplex key " + key);
    std::vector<VertexId> vs;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw ParseError("bad vertex in " + key);
        vs.push_back(v.get<VertexId>());
    }
    return Simplex(vs);
}

/// {"vertices":[...], "simplices":[[...],...], "energy":{"[1,2]":-1}}. Listed
/// vertices become 0-simplices. Without `close` the family must already be
/// downward closed. Energy entries override omega on the listed simplices.
inline ComplexInput parse_complex_json(const std::string& text, bool close,
                                       std::size_t max_simplex_size = kDefaultMaxSimplexSize) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("simplices")) throw ParseError("complex JSON needs a \"simplices\" array");
    std::vector<Simplex> sets;
    try {
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices")) sets.push_back(Simplex{v.get<VertexId>()});
        for (const auto& s : j.at("simplices")) sets.push_back(Simplex(s.get<std::vector<VertexId>>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad complex JSON: ") + e.what());
    }
    ComplexInput out{build_complex(sets, close, max_simplex_size), {}, false};
    if (j.contains("energy")) {
        out.has_energy = true;
        for (const auto& [key, value] : j.at("energy").items()) {
            if (!value.is_number_integer()) throw ParseError("energy of " + key + " is not an integer");
            Simplex x = parse_simplex_key(key);
            if (!out.complex.contains(x)) throw NotASimplex(x.to_string() + " is not in the complex");
            out.energy.set(x, value.get<std::int64_t>());
        }
    }
    return out;
}

inline Json complex_to_json(const Complex& c, const EnergyFunction* energy = nullptr) {
    Json j;
    j["vertices"] = c.vertices();
    Json simplices = Json::array();
    for (const Simplex& x : c.simplices()) simplices.push_back(x.as_vector());
    j["simplices"] = std::move(simplices);
    if (energy) {
        Json e = Json::object();
        std::vector<std::int64_t> values = energy->on(c);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (values[i] != omega(c[i])) e[c[i].to_string()] = values[i];
        j["energy"] = std::move(e);
    }
    return j;
}

/// Graph as complex JSON input: its Whitney complex, vertices relabelled by id.
inline Json graph_to_json(const Graph& g, const std::vector<std::string>& labels = {}) {
    Json j;
    Json vs = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back(detail::label_of(labels, v));
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const Edge& e : g.edges()) es.push_back({detail::label_of(labels, e.u), detail::label_of(labels, e.v)});
    j["edges"] = std::move(es);
    return j;
}

inline Json digraph_to_json(const Digraph& d, const std::vector<std::string>& labels = {}) {
    Json j;
    Json vs = Json::array();
    for (VertexId v = 0; v < d.vertex_count(); ++v) vs.push_back(detail::label_of(labels, v));
    j["vertices"] = std::move(vs);
    Json as = Json::array();
    for (auto [t, h] : d.arcs()) as.push_back({detail::label_of(labels, t), detail::label_of(labels, h)});
    j["arcs"] = std::move(as);
    return j;
}

// ---------------------------------------------------------------------------
// Point clouds and vertex functions
// ---------------------------------------------------------------------------

/// One point per line, coordinates separated by commas.
inline PointCloud parse_point_cloud_csv(const std::string& text) {
    std::istringstream in(text);
    std::size_t dim = 0;
    std::vector<double> coords;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        std::vector<double> row;
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, ',');) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad number \"" + cell + "\"");
            }
        }
        if (dim == 0) dim = row.size();
        if (row.size() != dim) throw ParseError("line " + std::to_string(lineno) + ": wrong number of coordinates");
        coords.insert(coords.end(), row.begin(), row.end());
    }
    if (dim == 0) throw ParseError("empty point cloud");
    return PointCloud(dim, std::move(coords));
}

inline std::string write_point_cloud_csv(const PointCloud& pc) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < pc.size(); ++i) {
        auto p = pc.point(i);
        for (std::size_t k = 0; k < p.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", p[k]);
            out += (k ? "," : "");
            out += buf;
        }
        out += "\n";
    }
    return out;
}

/// "label value" lines; every label must be known, every vertex covered.
inline VertexFunction parse_vertex_function(const std::string& text, const std::vector<std::string>& labels) {
    std::map<std::string, VertexId> id;
    for (std::size_t v = 0; v < labels.size(); ++v) id.emplace(labels[v], static_cast<VertexId>(v));
    VertexFunction out(labels.size(), 0);
    std::vector<bool> seen(labels.size(), false);
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto t = detail::tokens(line);
        if (t.empty()) continue;
        auto value = t.size() == 2 ? detail::parse_int(t[1]) : std::nullopt;
        if (!value) throw ParseError("line " + std::to_string(lineno) + ": expected \"label integer\"");
        auto it = id.find(t[0]);
        if (it == id.end()) throw ParseError("line " + std::to_string(lineno) + ": unknown vertex " + t[0]);
        out[it->second] = *value;
        seen[it->second] = true;
    }
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (!seen[v]) throw ParseError("no value for vertex " + labels[v]);
    return out;
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

inline Json index_to_json(const IndexVector& index, const std::vector<std::string>& labels = {}) {
    Json j = Json::object();
    for (const auto& [v, i] : index) j[detail::label_of(labels, v)] = i;
    return j;
}

inline Json rational_map_to_json(const std::map<VertexId, Rational>& values,
                                 const std::vector<std::string>& labels = {}) {
    Json j = Json::object();
    for (const auto& [v, r] : values) j[detail::label_of(labels, v)] = to_string(r);
    return j;
}

template <typename State, typename Render>
Json orbit_to_json(const Orbit<State>& o, Render render) {
    Json states = Json::array();
    for (const State& s : o.states) states.push_back(render(s));
    return Json{{"states", std::move(states)}, {"tail_start", o.tail_start}, {"period", o.period}};
}

inline Json refined_to_json(const RefinedGraph& r) {
    Json j;
    j["nodes"] = r.graph.vertex_count();
    Json es = Json::array();
    for (const Edge& e : r.graph.edges()) es.push_back({e.u, e.v});
    j["edges"] = std::move(es);
    Json origin = Json::object();
    for (std::size_t i = 0; i < r.origin.size(); ++i) origin[std::to_string(i)] = r.origin[i].as_vector();
    j["origin"] = std::move(origin);
    return j;
}

// ---------------------------------------------------------------------------
// DOT
// ---------------------------------------------------------------------------

namespace detail {

inline std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {}) {
    std::string out = "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out += "  " + detail::dot_id(detail::label_of(labels, v)) + ";\n";
    for (const Edge& e : g.edges())
        out += "  " + detail::dot_id(detail::label_of(labels, e.u)) + " -- " +
               detail::dot_id(detail::label_of(labels, e.v)) + ";\n";
    return out + "}\n";
}

inline std::string to_dot(const Digraph& d, const std::vector<std::string>& labels = {}) {
    std::string out = "digraph G {\n";
    for (VertexId v = 0; v < d.vertex_count(); ++v) out += "  " + detail::dot_id(detail::label_of(labels, v)) + ";\n";
    for (auto [t, h] : d.arcs())
        out += "  " + detail::dot_id(detail::label_of(labels, t)) + " -> " +
               detail::dot_id(detail::label_of(labels, h)) + ";\n";
    return out + "}\n";
}

/// Functional graph of a map on a finite state set: one arc s -> step(s) each.
template <typename State, typename Step, typename Render>
std::string functional_graph_dot(const std::vector<State>& states, Step step, Render render) {
    std::string out = "digraph T {\n";
    for (const State& s : states)
        out += "  " + detail::dot_id(render(s)) + " -> " + detail::dot_id(render(step(s))) + ";\n";
    return out + "}\n";
}

// ---------------------------------------------------------------------------
// Report metadata
// ---------------------------------------------------------------------------

inline std::string hash_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(Rng::fnv1a(data)));
    return buf;
}

struct ReportMeta {
    std::string input_hash;
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> caps;
};

inline Json meta_to_json(const ReportMeta& m) {
    Json caps = Json::object();
    for (const auto& [k, v] : m.caps) caps[k] = v;
    return Json{{"version", kVersion}, {"input_hash", m.input_hash}, {"seed", m.seed}, {"caps", std::move(caps)}};
}

}  // namespace dircomplex
