/**
 * Direction maps F: G -> V with F(x) in x, and the Poincare-Hopf index.
 *
 * Two independent routes to the index are provided:
 *
 *   - index_transport moves the energy H(x) of every simplex to the vertex
 *     F(x). The vertex sums always add up to the total energy, whatever F is.
 *   - index_sphere evaluates 1 - chi(S^-(v)) on the in-neighbour part of the
 *     unit sphere. It needs a gradient or an irrotational digraph; in those
 *     cases it agrees with transport under the induced direction.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace dircomplex {

/// F(x) for every simplex x, aligned with the simplex order of the complex it
/// was built for.
class DirectionMap {
public:
    DirectionMap() = default;

    DirectionMap(const Complex& c, std::vector<VertexId> targets) : targets_(std::move(targets)) {
        if (targets_.size() != c.size()) throw BadParameter("direction map must cover every simplex");
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].contains(targets_[i]))
                throw BadParameter("direction of " + c[i].to_string() + " points outside it");
    }

    VertexId operator[](std::size_t simplex_index) const { return targets_[simplex_index]; }
    std::size_t size() const { return targets_.size(); }
    const std::vector<VertexId>& targets() const { return targets_; }

    friend bool operator==(const DirectionMap&, const DirectionMap&) = default;

private:
    std::vector<VertexId> targets_;
};

struct DirectedComplex {
    Complex complex;
    DirectionMap direction;
};

/// F+ (end of each simplex) and F- (beginning) on one complex.
struct BiDirection {
    DirectionMap forward;
    DirectionMap backward;
};

struct BiDirectedComplex {
    Complex complex;
    BiDirection fields;
};

/// Vertex -> integer index. Every vertex of the complex appears, zeros included.
using IndexVector = std::map<VertexId, std::int64_t>;

/// g(v) for vertex ids 0..size()-1.
using VertexFunction = std::vector<std::int64_t>;

inline std::int64_t index_sum(const IndexVector& i) {
    std::int64_t s = 0;
    for (const auto& [v, x] : i) s += x;
    return s;
}

namespace detail {

template <typename Better>
DirectionMap extremal_direction(const Complex& c, std::span<const std::int64_t> g, Better better) {
    std::vector<VertexId> t;
    t.reserve(c.size());
    for (const Simplex& x : c.simplices()) {
        std::vector<std::int64_t> seen;
        seen.reserve(x.size());
        VertexId best = x[0];
        for (VertexId v : x) {
            if (v >= g.size()) throw UnknownVertex(v);
            seen.push_back(g[v]);
            if (better(g[v], g[best])) best = v;
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw NotLocallyInjective(x.as_vector(), "function is not injective on " + x.to_string());
        t.push_back(best);
    }
    return DirectionMap(c, std::move(t));
}

}  // namespace detail

/// F(x) = argmax of g on x. Throws NotLocallyInjective on a tie inside a simplex.
inline DirectionMap gradient_direction(const Complex& c, std::span<const std::int64_t> g) {
    return detail::extremal_direction(c, g, [](std::int64_t a, std::int64_t b) { return a > b; });
}

/// F(x) = argmin of g on x; the backward field of the gradient flow.
inline DirectionMap gradient_direction_min(const Complex& c, std::span<const std::int64_t> g) {
    return detail::extremal_direction(c, g, [](std::int64_t a, std::int64_t b) { return a < b; });
}

/// The vertex of x that every other vertex of x points to, if any. The edges of
/// x must be edges of d.
inline std::optional<VertexId> tournament_sink(const Digraph& d, const Simplex& x) {
    for (VertexId v : x) {
        bool sink = true;
        for (VertexId w : x)
            if (w != v && !d.points(w, v)) {
                sink = false;
                break;
            }
        if (sink) return v;
    }
    return std::nullopt;
}

inline std::optional<VertexId> tournament_source(const Digraph& d, const Simplex& x) {
    for (VertexId v : x) {
        bool source = true;
        for (VertexId w : x)
            if (w != v && !d.points(v, w)) {
                source = false;
                break;
            }
        if (source) return v;
    }
    return std::nullopt;
}

/// F(x) = sink of the orientation restricted to x, for any complex whose edges
/// are oriented by d. Throws CyclicTriangle when some simplex has no sink.
inline DirectionMap sink_direction(const Complex& c, const Digraph& d) {
    std::vector<VertexId> t;
    t.reserve(c.size());
    for (const Simplex& x : c.simplices()) {
        auto s = tournament_sink(d, x);
        if (!s) {
            // A tournament without a sink on its own vertex set always has a
            // 3-cycle; find one to report.
            for (VertexId a : x)
                for (VertexId b : x)
                    for (VertexId e : x)
                        if (a < b && b < e && is_cyclic_triangle(d, a, b, e))
                            throw CyclicTriangle({a, b, e}, "cyclic triangle " + Simplex{a, b, e}.to_string());
            throw CyclicTriangle(x.as_vector(), "simplex " + x.to_string() + " has no sink");
        }
        t.push_back(*s);
    }
    return DirectionMap(c, std::move(t));
}

/// Direction on the Whitney complex of an irrotational digraph: every clique
/// is a transitive tournament and F(x) is its sink. The order is computed once
/// per maximal clique and restricted to its faces.
inline DirectedComplex digraph_direction(const Digraph& d, const WhitneyOptions& opt = {}) {
    if (auto cyc = cyclic_triangles(d); !cyc.empty())
        throw CyclicTriangle(cyc.front().as_vector(),
                             "cyclic triangle " + cyc.front().to_string() +
                                 ": no total order on it; refine the field first");
    Complex c = whitney_complex(d.base(), opt);
    std::vector<VertexId> t(c.size(), 0);
    std::vector<char> done(c.size(), 0);
    std::size_t remaining = c.size();
    for (const Simplex& m : maximal_cliques(d.base())) {
        if (remaining == 0) break;
        // rank = in-degree inside the clique; distinct in a transitive tournament.
        std::map<VertexId, std::size_t> rank;
        for (VertexId v : m) {
            std::size_t r = 0;
            for (VertexId w : m)
                if (w != v && d.points(w, v)) ++r;
            rank[v] = r;
        }
        auto visit = [&](const Simplex& face) {
            auto idx = c.index_of(face);
            if (!idx || done[*idx]) return;
            VertexId best = face[0];
            for (VertexId v : face)
                if (rank[v] > rank[best]) best = v;
            t[*idx] = best;
            done[*idx] = 1;
            --remaining;
        };
        if (opt.max_dim && m.dim() > *opt.max_dim) {
            for_each_clique(induced_subgraph(d.base(), m.as_vector()).graph,
                            static_cast<std::size_t>(*opt.max_dim) + 1, [&](const std::vector<VertexId>& local) {
                                std::vector<VertexId> face;
                                for (VertexId i : local) face.push_back(m[i]);
                                visit(Simplex::from_sorted(std::move(face)));
                            });
        } else {
            for_each_face(m, visit);
        }
    }
    DirectionMap f(c, std::move(t));
#ifndef NDEBUG
    if (!(f == sink_direction(c, d))) throw Error("maximal-clique sink disagrees with per-face sink");
#endif
    return DirectedComplex{std::move(c), std::move(f)};
}

/// i(v) = sum of H(x) over simplices x with F(x) = v.
inline IndexVector index_transport(const Complex& c, const EnergyFunction& h, const DirectionMap& f) {
    if (f.size() != c.size()) throw BadParameter("direction map does not match complex");
    IndexVector out;
    for (VertexId v : c.vertices()) out[v] = 0;
    std::vector<std::int64_t> values = h.on(c);
    for (std::size_t i = 0; i < c.size(); ++i) out[f[i]] += values[i];
    return out;
}

namespace detail {

inline void require_irrotational_ball(const Digraph& d, VertexId v) {
    const Graph& g = d.base();
    auto nb = g.neighbors(v);
    std::vector<VertexId> ball(nb.begin(), nb.end());
    ball.insert(std::lower_bound(ball.begin(), ball.end(), v), v);
    for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t j = i + 1; j < ball.size(); ++j) {
            if (!g.has_edge(ball[i], ball[j])) continue;
            for (std::size_t k = j + 1; k < ball.size(); ++k)
                if (g.has_edge(ball[i], ball[k]) && g.has_edge(ball[j], ball[k]) &&
                    is_cyclic_triangle(d, ball[i], ball[j], ball[k]))
                    throw CyclicTriangle({ball[i], ball[j], ball[k]},
                                         "cyclic triangle " + Simplex{ball[i], ball[j], ball[k]}.to_string() +
                                             " in the unit ball of " + std::to_string(v));
        }
}

}  // namespace detail

/// 1 - chi(S^-(v)) for a digraph that is irrotational on the unit ball of v.
inline std::int64_t index_sphere(const Digraph& d, VertexId v) {
    d.base().check(v);
    detail::require_irrotational_ball(d, v);
    return 1 - whitney_euler(minus_sphere(d, v).graph);
}

/// 1 - chi(S^-_g(v)), S^-_g(v) = neighbours with smaller g. g must separate the
/// endpoints of every edge in the unit ball of v.
inline std::int64_t index_sphere(const Graph& g, std::span<const std::int64_t> values, VertexId v) {
    g.check(v);
    if (values.size() < g.vertex_count()) throw UnknownVertex(static_cast<VertexId>(values.size()));
    std::vector<VertexId> lower;
    for (VertexId w : g.neighbors(v)) {
        if (values[w] == values[v])
            throw NotLocallyInjective({std::min(v, w), std::max(v, w)},
                                      "function takes equal values on edge " + Simplex{v, w}.to_string());
        if (values[w] < values[v]) lower.push_back(w);
    }
    for (VertexId a : g.neighbors(v))
        for (VertexId b : g.neighbors(v))
            if (a < b && values[a] == values[b] && g.has_edge(a, b))
                throw NotLocallyInjective({a, b}, "function takes equal values on edge " + Simplex{a, b}.to_string());
    return 1 - whitney_euler(induced_subgraph(g, std::move(lower)).graph);
}

/// index_sphere at every vertex; checks irrotationality once.
inline IndexVector sphere_indices(const Digraph& d) {
    if (auto cyc = cyclic_triangles(d); !cyc.empty())
        throw CyclicTriangle(cyc.front().as_vector(), "cyclic triangle " + cyc.front().to_string());
    IndexVector out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) out[v] = 1 - whitney_euler(minus_sphere(d, v).graph);
    return out;
}

inline IndexVector sphere_indices(const Graph& g, std::span<const std::int64_t> values) {
    IndexVector out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = index_sphere(g, values, v);
    return out;
}

/// i(v) = 1 - chi(L^-(v)) on an arbitrary complex whose edges are oriented by d.
/// L^-(v) is the part of the link of v spanned by in-neighbours. For Whitney
/// complexes this is index_sphere.
inline IndexVector lower_link_index(const Complex& c, const Digraph& d) {
    IndexVector out;
    for (VertexId v : c.vertices()) out[v] = 1;
    for (const Simplex& y : c.simplices()) {
        if (y.size() < 2) continue;
        for (VertexId v : y) {
            bool lower = true;
            for (VertexId w : y)
                if (w != v && !d.points(w, v)) {
                    lower = false;
                    break;
                }
            // y \ {v} is a link simplex inside L^-(v); subtract its omega.
            if (lower) out[v] -= (y.size() % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

/// [i+(v) + i-(v)] / 2 as exact half-integers.
inline std::map<VertexId, Rational> symmetric_index(const Complex& c, const BiDirection& b,
                                                    const EnergyFunction& h = {}) {
    IndexVector plus = index_transport(c, h, b.forward);
    IndexVector minus = index_transport(c, h, b.backward);
    std::map<VertexId, Rational> out;
    for (const auto& [v, ip] : plus) out[v] = make_rational(ip + minus.at(v), 2);
    return out;
}

inline BiDirectedComplex gradient_bidirection(const Complex& c, std::span<const std::int64_t> g) {
    return BiDirectedComplex{c, BiDirection{gradient_direction(c, g), gradient_direction_min(c, g)}};
}

/// F+ = sink, F- = source of every clique of an irrotational digraph.
inline BiDirectedComplex digraph_bidirection(const Digraph& d, const WhitneyOptions& opt = {}) {
    DirectedComplex fwd = digraph_direction(d, opt);
    std::vector<VertexId> src;
    src.reserve(fwd.complex.size());
    for (const Simplex& x : fwd.complex.simplices()) src.push_back(*tournament_source(d, x));
    DirectionMap back(fwd.complex, std::move(src));
    return BiDirectedComplex{fwd.complex, BiDirection{std::move(fwd.direction), std::move(back)}};
}

/// Uniform independent choice of F(x) in x for every simplex, in canonical order.
inline DirectionMap random_direction(const Complex& c, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "random_direction");
    std::vector<VertexId> t;
    t.reserve(c.size());
    for (const Simplex& x : c.simplices()) t.push_back(x.size() == 1 ? x[0] : x[rng.below(x.size())]);
    return DirectionMap(c, std::move(t));
}

}  // namespace dircomplex
