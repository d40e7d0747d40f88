/**
 * Simple graphs, digraphs, unit spheres, clique enumeration, generators and
 * Rips graphs.
 *
 * Graph vertices are the dense range 0..n-1. Arbitrary labels are interned at
 * the I/O boundary (see io.hpp). Induced subgraphs are relabelled densely and
 * carry a `parent` map back to the vertices they came from.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rng.hpp"
#include "simplex.hpp"

namespace dircomplex {

struct Edge {
    VertexId u;  // u < v
    VertexId v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Loops are rejected; repeated edges (in either direction) are merged.
    Graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) : adj_(n) {
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a >= n || b >= n)
                throw BadParameter("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                   "} outside vertex range " + std::to_string(n));
            if (a == b) throw BadParameter("loop at vertex " + std::to_string(a));
            edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const Edge& e : edges_) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(VertexId v) const { return v < adj_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        check(v);
        return adj_[v];
    }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_edge(VertexId a, VertexId b) const {
        if (!contains(a) || !contains(b)) return false;
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const {
        Edge e{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    std::vector<std::pair<VertexId, VertexId>> edge_pairs() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
        return out;
    }

    void check(VertexId v) const {
        if (!contains(v)) throw UnknownVertex(v);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
};

/// An induced subgraph together with the parent vertex of each of its vertices.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> parent;
};

/// Induced subgraph on `vertices` (any order; duplicates ignored), relabelled
/// 0..k-1 in increasing parent order.
inline Subgraph induced_subgraph(const Graph& g, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (VertexId v : vertices) g.check(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (VertexId w : g.neighbors(vertices[i])) {
            if (w <= vertices[i]) continue;
            auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            if (it != vertices.end() && *it == w)
                edges.emplace_back(static_cast<VertexId>(i),
                                   static_cast<VertexId>(it - vertices.begin()));
        }
    return Subgraph{Graph(vertices.size(), edges), std::move(vertices)};
}

/// G - v, relabelled densely.
inline Subgraph remove_vertex(const Graph& g, VertexId v) {
    g.check(v);
    std::vector<VertexId> keep;
    keep.reserve(g.vertex_count() - 1);
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(g, std::move(keep));
}

inline Subgraph unit_sphere(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    return induced_subgraph(g, std::vector<VertexId>(nb.begin(), nb.end()));
}

/// Join: disjoint union of a and b plus every edge between them. Vertices of b
/// are shifted by a.vertex_count().
inline Graph graph_join(const Graph& a, const Graph& b) {
    const auto na = static_cast<VertexId>(a.vertex_count());
    auto edges = a.edge_pairs();
    for (auto [u, v] : b.edge_pairs()) edges.emplace_back(u + na, v + na);
    for (VertexId u = 0; u < na; ++u)
        for (VertexId v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + na);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

inline bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// ---------------------------------------------------------------------------
// Cliques
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<VertexId> intersect_sorted(std::span<const VertexId> a,
                                              std::span<const VertexId> b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline void bron_kerbosch(const Graph& g, std::vector<VertexId>& r, std::vector<VertexId> p,
                          std::vector<VertexId> x,
                          const std::function<void(const std::vector<VertexId>&)>& emit) {
    if (p.empty()) {
        if (x.empty()) emit(r);
        return;
    }
    // Tomita pivot: the vertex of P u X with the most neighbours in P.
    VertexId pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
        for (VertexId u : *set) {
            std::size_t c = intersect_sorted(g.neighbors(u), p).size();
            if (c > best || (c == best && u < pivot)) {
                best = c;
                pivot = u;
            }
        }
    std::vector<VertexId> candidates;
    auto pn = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
    for (VertexId v : candidates) {
        r.push_back(v);
        bron_kerbosch(g, r, intersect_sorted(p, g.neighbors(v)), intersect_sorted(x, g.neighbors(v)),
                      emit);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

template <typename Fn>
void extend_cliques(const Graph& g, std::vector<VertexId>& clique,
                    const std::vector<VertexId>& candidates, std::size_t max_size, Fn& fn) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        VertexId v = candidates[i];
        clique.push_back(v);
        fn(static_cast<const std::vector<VertexId>&>(clique));
        if (clique.size() < max_size) {
            std::vector<VertexId> next;
            auto nb = g.neighbors(v);
            std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                  candidates.end(), nb.begin(), nb.end(),
                                  std::back_inserter(next));
            if (!next.empty()) extend_cliques(g, clique, next, max_size, fn);
        }
        clique.pop_back();
    }
}

}  // namespace detail

/// All maximal cliques (pivoting Bron-Kerbosch), each sorted, in canonical order.
inline std::vector<Simplex> maximal_cliques(const Graph& g) {
    std::vector<Simplex> out;
    std::vector<VertexId> r;
    std::vector<VertexId> p(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) p[v] = v;
    detail::bron_kerbosch(g, r, std::move(p), {}, [&](const std::vector<VertexId>& c) {
        out.emplace_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const Simplex& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

/// Calls fn(clique) exactly once per non-empty clique of size <= max_size.
/// Each clique arrives sorted; enumeration order is depth-first by smallest vertex.
template <typename Fn>
void for_each_clique(const Graph& g, std::size_t max_size, Fn&& fn) {
    if (max_size == 0) return;
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::vector<VertexId> clique;
    detail::extend_cliques(g, clique, all, max_size, fn);
}

/// counts[k] = number of cliques with k+1 vertices (the Whitney f-vector).
inline std::vector<std::int64_t> clique_counts(const Graph& g,
                                               std::size_t max_size = static_cast<std::size_t>(-1)) {
    std::vector<std::int64_t> counts;
    for_each_clique(g, max_size, [&](const std::vector<VertexId>& c) {
        if (counts.size() < c.size()) counts.resize(c.size(), 0);
        ++counts[c.size() - 1];
    });
    return counts;
}

/// Euler characteristic of the Whitney complex, by signed clique count.
inline std::int64_t whitney_euler(const Graph& g) {
    std::int64_t chi = 0;
    for_each_clique(g, static_cast<std::size_t>(-1),
                    [&](const std::vector<VertexId>& c) { chi += (c.size() % 2 == 1) ? 1 : -1; });
    return chi;
}

// ---------------------------------------------------------------------------
// Digraphs
// ---------------------------------------------------------------------------

/// A simple graph with every edge oriented exactly once. Orientation is stored
/// per edge index, so reversal touches each edge once.
class Digraph {
public:
    Digraph() = default;

    /// forward[k] != 0 means edge k = {u < v} is oriented u -> v.
    Digraph(Graph base, std::vector<std::uint8_t> forward)
        : base_(std::move(base)), forward_(std::move(forward)) {
        if (forward_.size() != base_.edge_count())
            throw BadParameter("orientation must cover every edge exactly once");
    }

    /// Builds from arcs (tail, head). Opposite arcs on one edge are rejected.
    static Digraph from_arcs(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
        Graph base(n, arcs);
        std::vector<int> orient(base.edge_count(), -1);
        for (auto [t, h] : arcs) {
            std::size_t k = *base.edge_index(t, h);
            int f = t < h ? 1 : 0;
            if (orient[k] != -1 && orient[k] != f)
                throw BadParameter("edge {" + std::to_string(t) + "," + std::to_string(h) +
                                   "} oriented both ways");
            orient[k] = f;
        }
        return Digraph(std::move(base), std::vector<std::uint8_t>(orient.begin(), orient.end()));
    }

    const Graph& base() const { return base_; }
    std::size_t vertex_count() const { return base_.vertex_count(); }
    const std::vector<std::uint8_t>& orientation() const { return forward_; }

    VertexId tail(std::size_t k) const {
        const Edge& e = base_.edges()[k];
        return forward_[k] ? e.u : e.v;
    }
    VertexId head(std::size_t k) const {
        const Edge& e = base_.edges()[k];
        return forward_[k] ? e.v : e.u;
    }

    /// True iff {a,b} is an edge oriented a -> b.
    bool points(VertexId a, VertexId b) const {
        auto k = base_.edge_index(a, b);
        return k && tail(*k) == a;
    }

    std::vector<VertexId> in_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (VertexId w : base_.neighbors(v))
            if (points(w, v)) out.push_back(w);
        return out;
    }
    std::vector<VertexId> out_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (VertexId w : base_.neighbors(v))
            if (points(v, w)) out.push_back(w);
        return out;
    }

    std::vector<std::pair<VertexId, VertexId>> arcs() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(forward_.size());
        for (std::size_t k = 0; k < forward_.size(); ++k) out.emplace_back(tail(k), head(k));
        return out;
    }

    Digraph reversed() const {
        std::vector<std::uint8_t> f(forward_);
        for (auto& b : f) b = !b;
        return Digraph(base_, std::move(f));
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    Graph base_;
    std::vector<std::uint8_t> forward_;
};

/// S^-(v): the unit sphere restricted to in-neighbours (arcs w -> v).
inline Subgraph minus_sphere(const Digraph& d, VertexId v) {
    d.base().check(v);
    return induced_subgraph(d.base(), d.in_neighbors(v));
}

/// S^+(v): the unit sphere restricted to out-neighbours (arcs v -> w).
inline Subgraph plus_sphere(const Digraph& d, VertexId v) {
    d.base().check(v);
    return induced_subgraph(d.base(), d.out_neighbors(v));
}

/// Orientation of a gradient: w -> v whenever g(w) < g(v). Ties on an edge throw.
inline Digraph gradient_digraph(const Graph& g, std::span<const std::int64_t> values) {
    if (values.size() < g.vertex_count()) throw UnknownVertex(static_cast<VertexId>(values.size()));
    std::vector<std::uint8_t> f(g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const Edge& e = g.edges()[k];
        if (values[e.u] == values[e.v])
            throw NotLocallyInjective({e.u, e.v}, "function takes equal values on edge " +
                                                      Simplex{e.u, e.v}.to_string());
        f[k] = values[e.u] < values[e.v];
    }
    return Digraph(g, std::move(f));
}

inline bool is_cyclic_triangle(const Digraph& d, VertexId a, VertexId b, VertexId c) {
    return (d.points(a, b) && d.points(b, c) && d.points(c, a)) ||
           (d.points(b, a) && d.points(c, b) && d.points(a, c));
}

/// Every 3-clique whose edges form a directed cycle, in canonical order.
inline std::vector<Simplex> cyclic_triangles(const Digraph& d) {
    std::vector<Simplex> out;
    const Graph& g = d.base();
    for (const Edge& e : g.edges())
        for (VertexId w : detail::intersect_sorted(g.neighbors(e.u), g.neighbors(e.v)))
            if (w > e.v && is_cyclic_triangle(d, e.u, e.v, w)) out.push_back(Simplex{e.u, e.v, w});
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_irrotational(const Digraph& d) { return cyclic_triangles(d).empty(); }

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace gen {

inline Graph cycle(std::size_t n) {
    if (n < 3) throw BadParameter("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

/// Hub 0 joined to the rim cycle 1..n.
inline Graph wheel(std::size_t n) {
    if (n < 4) throw BadParameter("wheel needs a rim of n >= 4 vertices");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, static_cast<VertexId>(i % n + 1));
    }
    return Graph(n + 1, e);
}

/// Centre 0 with n leaves.
inline Graph star(std::size_t n) {
    if (n < 1) throw BadParameter("star needs n >= 1 leaves");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 1; i <= n; ++i) e.emplace_back(0, i);
    return Graph(n + 1, e);
}

/// Antipodal pairs are (0,1), (2,3), (4,5); every other pair is an edge.
inline Graph octahedron() {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 6; ++i)
        for (VertexId j = i + 1; j < 6; ++j)
            if (j != (i ^ 1u)) e.emplace_back(i, j);
    return Graph(6, e);
}

/// Erdos-Renyi G(n, p); pairs are visited in lexicographic order.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw BadParameter("edge probability must lie in [0,1]");
    Rng rng = Rng::stream(seed, "random_graph");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) e.emplace_back(i, j);
    return Graph(n, e);
}

/// One fair bit per edge, in edge order.
inline Digraph random_orientation(const Graph& g, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "random_orientation");
    std::vector<std::uint8_t> f(g.edge_count());
    for (auto& b : f) b = static_cast<std::uint8_t>(rng.next() >> 63);
    return Digraph(g, std::move(f));
}

/// Resamples random_orientation until no cyclic triangle remains.
inline std::optional<Digraph> random_irrotational_orientation(const Graph& g, std::uint64_t seed,
                                                              std::size_t max_attempts = 10000) {
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Digraph d = random_orientation(g, Rng::derive(seed, "irrotational", attempt));
        if (is_irrotational(d)) return d;
    }
    return std::nullopt;
}

}  // namespace gen

// ---------------------------------------------------------------------------
// Point clouds and Rips graphs
// ---------------------------------------------------------------------------

class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
        if (dim_ == 0) throw BadParameter("point dimension must be positive");
        if (coords_.size() % dim_ != 0) throw BadParameter("coordinates not a multiple of dimension");
    }
    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return dim_ ? coords_.size() / dim_ : 0; }
    std::span<const double> point(std::size_t i) const {
        return std::span<const double>(coords_).subspan(i * dim_, dim_);
    }
    const std::vector<double>& coordinates() const { return coords_; }

    double distance(std::size_t i, std::size_t j) const {
        double s = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) {
            double t = coords_[i * dim_ + k] - coords_[j * dim_ + k];
            s += t * t;
        }
        return std::sqrt(s);
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

struct RipsGraph {
    Graph graph;
    /// Pairs of coincident points. They stay as separate (non-adjacent) vertices.
    std::vector<std::pair<VertexId, VertexId>> duplicates;
};

enum class RipsRule { strict, inclusive };

/// Edge iff 0 < |a - b| < eps (or <= eps with RipsRule::inclusive).
inline RipsGraph rips_graph(const PointCloud& pc, double eps, RipsRule rule = RipsRule::strict) {
    if (!(eps > 0.0)) throw BadParameter("eps must be positive");
    RipsGraph out;
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < pc.size(); ++i)
        for (VertexId j = i + 1; j < pc.size(); ++j) {
            double d = pc.distance(i, j);
            if (d == 0.0) {
                out.duplicates.emplace_back(i, j);
                continue;
            }
            if (rule == RipsRule::strict ? d < eps : d <= eps) e.emplace_back(i, j);
        }
    out.graph = Graph(pc.size(), e);
    return out;
}

namespace gen {

/// n points equally spaced on the unit circle, starting at angle 0.
inline PointCloud circle_points(std::size_t n) {
    std::vector<double> c;
    c.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        c.push_back(std::cos(t));
        c.push_back(std::sin(t));
    }
    return PointCloud(2, std::move(c));
}

/// n points uniform on the unit 2-sphere (normalised Gaussian vectors).
inline PointCloud sphere_points(std::size_t n, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "sphere_points");
    std::vector<double> c;
    c.reserve(3 * n);
    while (c.size() < 3 * n) {
        double x = rng.normal(), y = rng.normal(), z = rng.normal();
        double r = std::sqrt(x * x + y * y + z * z);
        if (r < 1e-12) continue;
        c.push_back(x / r);
        c.push_back(y / r);
        c.push_back(z / r);
    }
    return PointCloud(3, std::move(c));
}

}  // namespace gen

}  // namespace dircomplex
