// Command-line driver: dircomplex gen|index|refine|check|dynamics|topology.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 input error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "dircomplex.hpp"

using namespace dircomplex;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::size_t max_clique = kDefaultMaxSimplexSize;
    std::size_t budget = 200000;
    bool close = false;
    bool digraph = false;
    std::string gradient;
    bool random_field = false;
};

/// Everything a command may need about its input, with dense vertex ids.
struct Input {
    std::string raw;
    std::vector<std::string> labels;
    Complex complex;
    EnergyFunction energy;
    std::optional<Graph> graph;
    std::optional<Digraph> digraph;
    /// False for a complex JSON that is not the Whitney complex of its 1-skeleton.
    bool flag = true;
};

Input load_raw(const Options& o);

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Labels of the loaded input, for naming witnesses in error messages.
std::vector<std::string> loaded_labels;

Input load(const Options& o) {
    Input in = load_raw(o);
    loaded_labels = in.labels;
    return in;
}

Input load_raw(const Options& o) {
    Input in;
    in.raw = read_file(o.input);
    WhitneyOptions wopt;
    wopt.max_simplex_size = o.max_clique;
    if (ends_with(o.input, ".json")) {
        if (o.digraph) throw UsageError("--digraph expects an edge-list file");
        ComplexInput ci = parse_complex_json(in.raw, o.close, o.max_clique);
        std::map<VertexId, VertexId> dense;
        for (VertexId v : ci.complex.vertices()) {
            dense.emplace(v, static_cast<VertexId>(in.labels.size()));
            in.labels.push_back(std::to_string(v));
        }
        std::vector<Simplex> sets;
        for (const Simplex& x : ci.complex.simplices()) {
            std::vector<VertexId> vs;
            for (VertexId v : x) vs.push_back(dense.at(v));
            Simplex y(vs);
            if (auto it = ci.energy.stored().find(x); it != ci.energy.stored().end()) in.energy.set(y, it->second);
            sets.push_back(std::move(y));
        }
        in.complex = build_complex(sets, false, static_cast<std::size_t>(-1));
        in.graph = one_skeleton_graph(in.complex);
        in.flag = whitney_complex(*in.graph, WhitneyOptions{std::nullopt, static_cast<std::size_t>(-1)}) == in.complex;
        return in;
    }
    if (o.digraph) {
        LabeledDigraph ld = parse_digraph(in.raw);
        in.labels = std::move(ld.labels);
        in.graph = ld.digraph.base();
        in.digraph = std::move(ld.digraph);
    } else {
        LabeledGraph lg = parse_edge_list(in.raw);
        in.labels = std::move(lg.labels);
        in.graph = std::move(lg.graph);
    }
    in.complex = whitney_complex(*in.graph, wopt);
    return in;
}

std::string label(const Input& in, VertexId v) { return v < in.labels.size() ? in.labels[v] : std::to_string(v); }

std::string simplex_label(const std::vector<std::string>& labels, const Simplex& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += (i ? "," : "");
        s += x[i] < labels.size() ? labels[x[i]] : std::to_string(x[i]);
    }
    return s + "]";
}

ReportMeta meta(const Options& o, const Input* in) {
    ReportMeta m;
    m.input_hash = in ? hash_hex(in->raw) : hash_hex("");
    m.seed = o.seed;
    m.caps = {{"budget", static_cast<std::int64_t>(o.budget)},
              {"max_clique", static_cast<std::int64_t>(o.max_clique)},
              {"samples", static_cast<std::int64_t>(o.samples)}};
    return m;
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) std::cout << text;
    else write_file(o.output, text);
}

void text_meta(std::ostringstream& out, const ReportMeta& m, const std::string& command) {
    out << "# dircomplex " << kVersion << " " << command << "\n";
    out << "input_hash: " << m.input_hash << "\nseed: " << m.seed << "\n";
    for (const auto& [k, v] : m.caps) out << "cap." << k << ": " << v << "\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format " + o.format + " is not available for this command");
}

VertexFunction load_gradient(const Options& o, const Input& in) {
    return parse_vertex_function(read_file(o.gradient), in.labels);
}

enum class FieldKind { gradient, digraph, random };

FieldKind field_kind(const Options& o) {
    int given = (o.gradient.empty() ? 0 : 1) + (o.digraph ? 1 : 0) + (o.random_field ? 1 : 0);
    if (given != 1) throw UsageError("give exactly one field: --gradient FILE, --digraph or --random");
    if (o.gradient.size()) return FieldKind::gradient;
    return o.digraph ? FieldKind::digraph : FieldKind::random;
}

const Graph& need_graph(const Input& in, const std::string& what) {
    if (!in.graph || !in.flag) throw UsageError(what + " needs a graph (or a Whitney complex) as input");
    return *in.graph;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int cmd_gen(const Options& o, const std::string& kind, const std::vector<std::string>& params,
            const std::string& orient, const std::string& points_out) {
    require_format(o, {"text", "json", "dot"});
    auto num = [&](std::size_t i) -> double {
        if (i >= params.size()) throw UsageError("gen " + kind + " needs more parameters");
        try {
            return std::stod(params[i]);
        } catch (const std::exception&) {
            throw UsageError("not a number: " + params[i]);
        }
    };
    auto count = [&](std::size_t i) -> std::size_t {
        double x = num(i);
        if (x < 0 || x != static_cast<double>(static_cast<std::size_t>(x))) throw UsageError("not a count: " + params[i]);
        return static_cast<std::size_t>(x);
    };
    Graph g;
    std::optional<PointCloud> cloud;
    if (kind == "cycle") g = gen::cycle(count(0));
    else if (kind == "complete") g = gen::complete(count(0));
    else if (kind == "wheel") g = gen::wheel(count(0));
    else if (kind == "star") g = gen::star(count(0));
    else if (kind == "octahedron") g = gen::octahedron();
    else if (kind == "random") g = gen::random_graph(count(0), num(1), o.seed);
    else if (kind == "rips-circle" || kind == "rips-sphere") {
        cloud = kind == "rips-circle" ? gen::circle_points(count(0)) : gen::sphere_points(count(0), o.seed);
        g = rips_graph(*cloud, num(1)).graph;
    } else {
        throw UsageError("unknown kind " + kind);
    }
    if (cloud && !points_out.empty()) write_file(points_out, write_point_cloud_csv(*cloud));

    std::optional<Digraph> d;
    if (orient == "random") {
        d = gen::random_orientation(g, o.seed);
    } else if (orient == "irrotational") {
        d = gen::random_irrotational_orientation(g, o.seed);
        if (!d) throw BudgetExceeded("no irrotational orientation found in 10000 attempts");
    } else if (!orient.empty()) {
        throw UsageError("--orient must be random or irrotational");
    }
    if (o.format == "json") emit(o, (d ? digraph_to_json(*d) : graph_to_json(g)).dump(2) + "\n");
    else if (o.format == "dot") emit(o, d ? to_dot(*d) : to_dot(g));
    else emit(o, d ? write_digraph(*d) : write_edge_list(g));
    return 0;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

int cmd_index(const Options& o, const std::string& mode) {
    require_format(o, {"text", "json"});
    Input in = load(o);
    FieldKind kind = field_kind(o);
    const std::int64_t chi = euler_characteristic(in.complex);
    const std::int64_t energy = total_energy(in.complex, in.energy);
    IndexVector index;
    std::map<VertexId, Rational> sym;
    bool symmetric = false;

    if (mode == "transport") {
        DirectionMap f;
        if (kind == FieldKind::gradient) f = gradient_direction(in.complex, load_gradient(o, in));
        else if (kind == FieldKind::digraph) f = digraph_direction(*in.digraph, {std::nullopt, o.max_clique}).direction;
        else f = random_direction(in.complex, o.seed);
        index = index_transport(in.complex, in.energy, f);
    } else if (mode == "sphere") {
        if (kind == FieldKind::gradient) index = sphere_indices(need_graph(in, "sphere mode"), load_gradient(o, in));
        else if (kind == FieldKind::digraph) index = sphere_indices(*in.digraph);
        else throw UsageError("sphere mode needs --gradient or --digraph");
    } else if (mode == "symmetric") {
        symmetric = true;
        BiDirection b;
        if (kind == FieldKind::gradient) b = gradient_bidirection(in.complex, load_gradient(o, in)).fields;
        else if (kind == FieldKind::digraph) b = digraph_bidirection(*in.digraph, {std::nullopt, o.max_clique}).fields;
        else b = BiDirection{random_direction(in.complex, o.seed), random_direction(in.complex, Rng::derive(o.seed, "backward", 0))};
        sym = symmetric_index(in.complex, b, in.energy);
    } else {
        throw UsageError("mode must be transport, sphere or symmetric");
    }

    const std::int64_t expected = mode == "sphere" ? chi : energy;
    Rational sum = 0;
    if (symmetric)
        for (const auto& [v, x] : sym) sum += x;
    else
        sum = index_sum(index);
    const bool pass = sum == expected;

    ReportMeta m = meta(o, &in);
    if (o.format == "json") {
        Json j;
        j["meta"] = meta_to_json(m);
        j["mode"] = mode;
        j["index"] = symmetric ? rational_map_to_json(sym, in.labels) : index_to_json(index, in.labels);
        j["chi"] = chi;
        j["total_energy"] = energy;
        j["sum"] = to_string(sum);
        j["conservation"] = pass ? "PASS" : "FAIL";
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        text_meta(out, m, "index");
        out << "mode: " << mode << "\nvertex index\n";
        if (symmetric)
            for (const auto& [v, x] : sym) out << label(in, v) << " " << to_string(x) << "\n";
        else
            for (const auto& [v, x] : index) out << label(in, v) << " " << x << "\n";
        out << "chi: " << chi << "\ntotal_energy: " << energy << "\nsum: " << to_string(sum) << "\n";
        out << "conservation: " << (pass ? "PASS" : "FAIL") << "\n";
        emit(o, out.str());
    }
    return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// refine
// ---------------------------------------------------------------------------

Simplex parse_simplex_labels(const std::string& text, const Input& in) {
    std::map<std::string, VertexId> id;
    for (std::size_t v = 0; v < in.labels.size(); ++v) id.emplace(in.labels[v], static_cast<VertexId>(v));
    std::vector<VertexId> vs;
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
               body.end());
    std::istringstream ss(body);
    for (std::string tok; std::getline(ss, tok, ',');) {
        auto it = id.find(tok);
        if (it == id.end()) throw NotASimplex("unknown vertex " + tok);
        vs.push_back(it->second);
    }
    if (vs.empty()) throw NotASimplex("empty simplex");
    return Simplex(vs);
}

int cmd_refine(const Options& o, const std::string& strategy, const std::string& simplex_arg, bool drop) {
    require_format(o, {"text", "json", "dot"});
    Input in = load(o);
    const std::int64_t chi_before = euler_characteristic(in.complex);
    ReportMeta m = meta(o, &in);
    Json report;
    report["meta"] = meta_to_json(m);
    report["strategy"] = strategy;
    report["chi_before"] = chi_before;
    std::string structure_text, structure_dot;
    Json structure;

    if (strategy == "barycentric") {
        if (in.digraph) {
            RefinedField rf = refine_field(*in.digraph);
            std::vector<std::string> names;
            for (const Simplex& x : rf.refined.origin) names.push_back(simplex_label(in.labels, x));
            report["chi_after"] = whitney_euler(rf.refined.graph);
            report["irrotational"] = is_irrotational(rf.digraph);
            report["acyclic"] = is_acyclic(rf.digraph);
            if (auto cyc = find_directed_cycle(rf.digraph)) {
                Json c = Json::array();
                for (VertexId v : *cyc) c.push_back(names[v]);
                report["directed_cycle"] = std::move(c);
            }
            IndexVector idx = sphere_indices(rf.digraph);
            report["index_sum"] = index_sum(idx);
            structure = refined_to_json(rf.refined);
            structure["arcs"] = digraph_to_json(rf.digraph)["arcs"];
            structure_text = write_digraph(rf.digraph, names);
            structure_dot = to_dot(rf.digraph, names);
        } else {
            RefinedGraph r = barycentric(in.complex);
            std::vector<std::string> names;
            for (const Simplex& x : r.origin) names.push_back(simplex_label(in.labels, x));
            report["chi_after"] = whitney_euler(r.graph);
            structure = refined_to_json(r);
            structure_text = write_edge_list(r.graph, names);
            structure_dot = to_dot(r.graph, names);
        }
    } else if (strategy == "break-triangles") {
        if (!in.digraph) throw UsageError("break-triangles needs --digraph input");
        TriangleBreak tb = break_cyclic_triangles(*in.digraph);
        std::vector<std::string> names = in.labels;
        for (const auto& [v, t] : tb.origin) {
            names.resize(std::max<std::size_t>(names.size(), v + 1));
            names[v] = simplex_label(in.labels, t);
        }
        report["chi_after"] = euler_characteristic(tb.complex);
        report["new_vertices"] = tb.origin.size();
        report["cyclic_triangles_left"] = cyclic_triangles(tb.complex, tb.digraph).size();
        report["index"] = index_to_json(tb.index, names);
        report["index_sum"] = index_sum(tb.index);
        structure = complex_to_json(tb.complex);
        structure["arcs"] = digraph_to_json(tb.digraph, names)["arcs"];
        structure_text = write_digraph(tb.digraph, names);
        structure_dot = to_dot(tb.digraph, names);
    } else if (strategy == "local") {
        if (simplex_arg.empty()) throw UsageError("local refinement needs --simplex");
        const Graph& g = need_graph(in, "local refinement");
        Simplex x = parse_simplex_labels(simplex_arg, in);
        Graph h = local_refine(g, x, drop);
        std::vector<std::string> names = in.labels;
        names.push_back(simplex_label(in.labels, x));
        report["chi_after"] = whitney_euler(h);
        structure = graph_to_json(h, names);
        structure_text = write_edge_list(h, names);
        structure_dot = to_dot(h, names);
    } else {
        throw UsageError("strategy must be barycentric, break-triangles or local");
    }
    report["chi_preserved"] = report["chi_after"] == report["chi_before"];

    if (o.format == "dot") {
        emit(o, structure_dot);
        return 0;
    }
    if (o.format == "json") {
        report["structure"] = std::move(structure);
        emit(o, report.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    text_meta(out, m, "refine");
    for (const auto& [k, v] : report.items()) {
        if (k == "meta") continue;
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (o.output.empty()) {
        std::cout << out.str();
    } else {
        write_file(o.output, structure_text);
        std::cout << out.str() << "structure: " << o.output << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckLine {
    std::string name;
    std::string status;  // PASS, FAIL or SKIP
    std::string detail;
};

VertexFunction seeded_order(std::size_t n, std::uint64_t seed) {
    VertexFunction g(n);
    std::iota(g.begin(), g.end(), 0);
    Rng rng = Rng::stream(seed, "check_order");
    rng.shuffle(g);
    return g;
}

int cmd_check(const Options& o, const std::string& which) {
    require_format(o, {"text", "json"});
    static const std::vector<std::string> all{"ph", "gauss-bonnet", "parametrized", "functional", "euler-poincare"};
    std::vector<std::string> selected;
    if (which == "all") selected = all;
    else if (std::find(all.begin(), all.end(), which) != all.end()) selected = {which};
    else throw UsageError("unknown check " + which);

    Input in = load(o);
    const std::int64_t chi = euler_characteristic(in.complex);
    std::vector<CheckLine> lines;
    auto str = [](auto x) {
        std::ostringstream s;
        s << x;
        return s.str();
    };
    for (const std::string& name : selected) {
        CheckLine line{name, "PASS", ""};
        if (name == "ph") {
            DirectionMap f = random_direction(in.complex, o.seed);
            std::int64_t s = index_sum(index_transport(in.complex, in.energy, f));
            std::int64_t e = total_energy(in.complex, in.energy);
            line.detail = "sum=" + str(s) + " total_energy=" + str(e);
            if (s != e) line.status = "FAIL";
        } else if (name == "euler-poincare") {
            BettiVector b2 = betti(in.complex, 2), b0 = betti(in.complex, 0);
            std::string bs;
            for (auto x : b2.b) bs += (bs.empty() ? "" : ",") + str(x);
            line.detail = "betti2=(" + bs + ") chi=" + str(chi);
            if (b2.euler() != chi || b0.euler() != chi) line.status = "FAIL";
        } else if (!in.flag) {
            line.status = "SKIP";
            line.detail = "input is not a Whitney complex";
        } else if (name == "gauss-bonnet") {
            const Graph& g = *in.graph;
            auto K = curvatures(g);
            Rational total = 0;
            for (const auto& k : K) total += k;
            bool ok = total == chi;
            line.detail = "curvature_sum=" + to_string(total) + " chi=" + str(chi);
            if (g.vertex_count() <= kMaxExactVertices) {
                bool exact = index_expectation_exact(g) == K;
                ok = ok && exact;
                line.detail += std::string(" expectation=") + (exact ? "exact" : "mismatch");
            } else {
                MonteCarloExpectation mc = index_expectation_mc(g, o.samples, o.seed);
                double dev = 0;
                for (std::size_t v = 0; v < K.size(); ++v)
                    dev = std::max(dev, std::abs(to_double(mc.mean[v] - K[v])));
                ok = ok && mc.conservation_held;
                char buf[64];
                std::snprintf(buf, sizeof buf, " mc_max_deviation=%.4f", dev);
                line.detail += buf;
            }
            if (!ok) line.status = "FAIL";
        } else if (name == "parametrized") {
            auto rep = parametrized_ph_check(*in.graph, seeded_order(in.graph->vertex_count(), o.seed));
            line.detail = "f(-1)=" + to_string(rep.lhs_at_minus_one);
            if (!rep.holds || rep.lhs_at_minus_one != 1 - chi) line.status = "FAIL";
        } else if (name == "functional") {
            auto rep = gb_functional_check(*in.graph);
            line.detail = "f(-1)=" + to_string(rep.lhs_at_minus_one);
            if (!rep.holds || rep.lhs_at_minus_one != 1 - chi) line.status = "FAIL";
        }
        lines.push_back(std::move(line));
    }
    bool ok = std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == "FAIL"; });

    ReportMeta m = meta(o, &in);
    if (o.format == "json") {
        Json j;
        j["meta"] = meta_to_json(m);
        j["chi"] = chi;
        Json arr = Json::array();
        for (const auto& l : lines) arr.push_back({{"check", l.name}, {"status", l.status}, {"detail", l.detail}});
        j["checks"] = std::move(arr);
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        text_meta(out, m, "check");
        for (const auto& l : lines) out << l.status << " " << l.name << " " << l.detail << "\n";
        emit(o, out.str());
    }
    return ok ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// dynamics
// ---------------------------------------------------------------------------

int cmd_dynamics(const Options& o, const std::string& start, std::size_t steps, std::string section_kind) {
    require_format(o, {"text", "json", "dot"});
    Input in = load(o);
    FieldKind kind = field_kind(o);
    DirectionMap f;
    VertexFunction values;
    if (kind == FieldKind::gradient) {
        values = load_gradient(o, in);
        f = gradient_direction(in.complex, values);
    } else if (kind == FieldKind::digraph) {
        f = digraph_direction(*in.digraph, {std::nullopt, o.max_clique}).direction;
    } else {
        f = random_direction(in.complex, o.seed);
    }
    if (section_kind.empty())
        section_kind = kind == FieldKind::gradient ? "upper" : kind == FieldKind::digraph ? "out-edge" : "random";
    Section s;
    if (section_kind == "singletons") s = Section::singletons(in.complex);
    else if (section_kind == "maximal") s = Section::maximal(in.complex);
    else if (section_kind == "random") s = Section::random(in.complex, o.seed);
    else if (section_kind == "upper") {
        if (kind != FieldKind::gradient) throw UsageError("the upper section needs --gradient");
        s = Section::upper(in.complex, values);
    } else if (section_kind == "out-edge") {
        if (kind != FieldKind::digraph) throw UsageError("the out-edge section needs --digraph");
        s = Section::out_edge(in.complex, *in.digraph);
    } else {
        throw UsageError("section must be singletons, maximal, upper, out-edge or random");
    }
    VectorField field{in.complex, f, s};
    auto render = [&](VertexId v) { return label(in, v); };

    if (o.format == "dot") {
        emit(o, functional_graph_dot(in.complex.vertices(), [&](VertexId v) { return step_v(field, v); }, render));
        return 0;
    }
    auto it = std::find(in.labels.begin(), in.labels.end(), start);
    if (it == in.labels.end()) throw BadParameter("unknown start vertex " + start);
    auto v0 = static_cast<VertexId>(it - in.labels.begin());
    if (steps == 0) steps = in.complex.vertices().size() + 1;
    Orbit<VertexId> orbit = orbit_v(field, v0, steps);
    bool valid = true;
    for (std::size_t i = 0; i < orbit.states.size(); ++i) {
        VertexId a = orbit.states[i];
        VertexId b = i + 1 < orbit.states.size() ? orbit.states[i + 1] : orbit.states[orbit.tail_start];
        valid = valid && in.complex[s(a)].contains(b);
    }
    EventualImage<VertexId> image = eventual_image_v(field);
    std::vector<VertexId> loops = degenerate_loops(field);

    ReportMeta m = meta(o, &in);
    if (o.format == "json") {
        Json j;
        j["meta"] = meta_to_json(m);
        j["section"] = section_kind;
        j["orbit"] = orbit_to_json(orbit, render);
        j["intersection_valid"] = valid;
        Json img = Json::array();
        for (VertexId v : image.states) img.push_back(render(v));
        j["eventual_image"] = std::move(img);
        j["permutation"] = image.is_permutation;
        j["cycle_lengths"] = image.cycle_lengths;
        Json lint = Json::array();
        for (VertexId v : loops) lint.push_back(render(v));
        j["degenerate_loops"] = std::move(lint);
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        text_meta(out, m, "dynamics");
        out << "section: " << section_kind << "\norbit:";
        for (VertexId v : orbit.states) out << " " << render(v);
        out << "\ntail_start: " << orbit.tail_start << "\nperiod: " << orbit.period << "\n";
        out << "intersection: " << (valid ? "PASS" : "FAIL") << "\neventual_image:";
        for (VertexId v : image.states) out << " " << render(v);
        out << "\npermutation: " << (image.is_permutation ? "yes" : "no") << "\n";
        if (!loops.empty()) {
            out << "warning: degenerate two-step loops at";
            for (VertexId v : loops) out << " " << render(v);
            out << "\n";
        }
        emit(o, out.str());
    }
    return valid ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

std::string verdict_text(const HomotopyVerdict& v) {
    switch (v.kind) {
        case Homotopy::contractible: return "contractible";
        case Homotopy::sphere: return "sphere(" + std::to_string(v.dimension) + ")";
        case Homotopy::other: return "other";
        case Homotopy::unknown: return "unknown";
    }
    return "unknown";
}

int cmd_topology(const Options& o, std::optional<int> dim) {
    require_format(o, {"text", "json"});
    Input in = load(o);
    const Graph& g = need_graph(in, "topology");
    Recognizer r(RecognitionOptions{o.budget, 14});
    HomotopyVerdict c = is_contractible(g, r);
    std::optional<HomotopyVerdict> s;
    if (dim) s = is_sphere(g, *dim, r);
    BettiVector b = betti(in.complex, 2);

    ReportMeta m = meta(o, &in);
    if (o.format == "json") {
        Json j;
        j["meta"] = meta_to_json(m);
        j["chi"] = euler_characteristic(in.complex);
        j["contractible"] = verdict_text(c);
        if (s) j["sphere"] = verdict_text(*s);
        j["betti"] = b.b;
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        text_meta(out, m, "topology");
        out << "chi: " << euler_characteristic(in.complex) << "\ncontractible: " << verdict_text(c) << "\n";
        if (s) out << "sphere(d=" << *dim << "): " << verdict_text(*s) << "\n";
        out << "betti:";
        for (auto x : b.b) out << " " << x;
        out << "\n";
        emit(o, out.str());
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& o, bool input = true) {
    if (input) cmd->add_option("input", o.input, "Edge list, digraph or complex JSON")->required();
    cmd->add_option("--seed", o.seed, "64-bit seed for every random choice");
    cmd->add_option("--samples", o.samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--max-clique", o.max_clique, "Largest clique allowed in a Whitney complex")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "Recursion budget for sphere recognition")->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("-o,--output", o.output, "Write the result to this file");
    cmd->add_flag("--close", o.close, "Close a complex JSON under taking faces");
}

void add_field(CLI::App* cmd, Options& o) {
    cmd->add_option("--gradient", o.gradient, "File of \"vertex value\" lines");
    cmd->add_flag("--digraph", o.digraph, "Input is a digraph; \"u v\" means u -> v");
    cmd->add_flag("--random", o.random_field, "Random direction map drawn from --seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed simplicial complexes: indices, curvature, refinement and flows"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    std::string kind, orient, points_out;
    std::vector<std::string> params;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph, digraph or Rips graph");
    gen_cmd->add_option("kind", kind, "cycle|complete|wheel|star|octahedron|random|rips-circle|rips-sphere")
        ->required();
    gen_cmd->add_option("params", params, "Size, then probability or eps");
    gen_cmd->add_option("--orient", orient, "Emit a random or irrotational orientation");
    gen_cmd->add_option("--points", points_out, "Also write the Rips point cloud as CSV");
    add_common(gen_cmd, o, false);

    std::string mode = "transport";
    auto* index_cmd = app.add_subcommand("index", "Poincare-Hopf indices of a field");
    add_common(index_cmd, o);
    add_field(index_cmd, o);
    index_cmd->add_option("--mode", mode, "transport, sphere or symmetric");

    std::string strategy = "barycentric", simplex_arg;
    bool drop = false;
    auto* refine_cmd = app.add_subcommand("refine", "Barycentric, local or cyclic-triangle refinement");
    add_common(refine_cmd, o);
    refine_cmd->add_flag("--digraph", o.digraph, "Input is a digraph; \"u v\" means u -> v");
    refine_cmd->add_option("--strategy", strategy, "barycentric, break-triangles or local");
    refine_cmd->add_option("--simplex", simplex_arg, "Clique to refine, e.g. 1,2");
    refine_cmd->add_flag("--drop", drop, "Remove the refined edge (edge subdivision)");

    std::string which = "all";
    auto* check_cmd = app.add_subcommand("check", "Verify the index and curvature identities");
    add_common(check_cmd, o);
    check_cmd->add_option("--which", which, "ph, gauss-bonnet, parametrized, functional, euler-poincare or all");

    std::string start, section_kind;
    std::size_t steps = 0;
    auto* dyn_cmd = app.add_subcommand("dynamics", "Orbit of T = F o section");
    add_common(dyn_cmd, o);
    add_field(dyn_cmd, o);
    dyn_cmd->add_option("--start", start, "Starting vertex")->required();
    dyn_cmd->add_option("--steps", steps, "Step budget (default: vertex count + 1)");
    dyn_cmd->add_option("--section", section_kind, "singletons, maximal, upper, out-edge or random");

    std::optional<int> dim;
    auto* topo_cmd = app.add_subcommand("topology", "Contractibility, sphere test and Betti numbers");
    add_common(topo_cmd, o);
    topo_cmd->add_option("--dim", dim, "Also test for a sphere of this dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(o, kind, params, orient, points_out);
        if (index_cmd->parsed()) return cmd_index(o, mode);
        if (refine_cmd->parsed()) return cmd_refine(o, strategy, simplex_arg, drop);
        if (check_cmd->parsed()) return cmd_check(o, which);
        if (dyn_cmd->parsed()) return cmd_dynamics(o, start, steps, section_kind);
        if (topo_cmd->parsed()) return cmd_topology(o, dim);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CyclicTriangle& e) {
        std::cerr << "error: cyclic triangle " << simplex_label(loaded_labels, Simplex(e.triangle))
                  << " has no total order\n";
        std::cerr << "hint: run `dircomplex refine " << o.input
                  << " --digraph --strategy break-triangles` to remove cyclic triangles\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
