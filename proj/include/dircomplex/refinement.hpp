/**
 * Barycentric refinement (global and local), refined fields and the removal of
 * cyclic triangles.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "complex.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace dircomplex {

/// Graph whose node i stands for the simplex origin[i]; nodes are adjacent iff
/// one origin strictly contains the other.
struct RefinedGraph {
    Graph graph;
    std::vector<Simplex> origin;
};

/// Orientation on a refined graph.
struct RefinedField {
    RefinedGraph refined;
    Digraph digraph;
};

/// Node i of the result is c[i].
inline RefinedGraph barycentric(const Complex& c) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Simplex& y = c[i];
        if (y.size() < 2) continue;
        for_each_face(y, [&](const Simplex& x) {
            if (x.size() == y.size()) return;
            edges.emplace_back(static_cast<VertexId>(*c.index_of(x)), static_cast<VertexId>(i));
        });
    }
    std::vector<Simplex> origin(c.simplices().begin(), c.simplices().end());
    return RefinedGraph{Graph(c.size(), edges), std::move(origin)};
}

/// Every Whitney simplex of a refined graph is a chain; F sends it to the node
/// with the largest origin.
inline DirectedComplex maximal_simplex_direction(const RefinedGraph& r) {
    Complex c = whitney_complex(r.graph);
    std::vector<VertexId> t;
    t.reserve(c.size());
    for (const Simplex& chain : c.simplices()) {
        VertexId top = chain[0];
        for (VertexId node : chain)
            if (r.origin[node].size() > r.origin[top].size()) top = node;
        t.push_back(top);
    }
    DirectionMap f(c, std::move(t));
    return DirectedComplex{std::move(c), std::move(f)};
}

/// Refines the Whitney complex of d. An original arc a -> b becomes
/// a -> m -> b through the edge node m; every other containment x < y is
/// oriented y -> x, toward the lower-dimensional simplex.
///
/// The result never has a cyclic triangle: every refined triangle is a chain
/// whose top node has dimension >= 2 and is a source. It can still have
/// directed cycles, one for each directed cycle of d.
inline RefinedField refine_field(const Digraph& d) {
    Complex c = whitney_complex(d.base());
    RefinedGraph r = barycentric(c);
    std::vector<std::uint8_t> f(r.graph.edge_count());
    for (std::size_t k = 0; k < r.graph.edge_count(); ++k) {
        const Edge& e = r.graph.edges()[k];
        // Nodes follow canonical order, so origin[e.u] is the smaller simplex.
        const Simplex& low = r.origin[e.u];
        const Simplex& high = r.origin[e.v];
        bool low_to_high = false;
        if (high.size() == 2 && low.size() == 1) {
            VertexId tail = d.points(high[0], high[1]) ? high[0] : high[1];
            low_to_high = (low[0] == tail);
        }
        f[k] = low_to_high;
    }
    Digraph out(r.graph, std::move(f));
    return RefinedField{std::move(r), std::move(out)};
}

/// True iff d has no directed cycle (iterative depth-first search).
inline bool is_acyclic(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::vector<VertexId>> out(n);
    for (auto [t, h] : d.arcs()) out[t].push_back(h);
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> color(n, white);
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (color[s] != white) continue;
        stack.emplace_back(s, 0);
        color[s] = grey;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                VertexId w = out[v][next++];
                if (color[w] == grey) return false;
                if (color[w] == white) {
                    color[w] = grey;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = black;
                stack.pop_back();
            }
        }
    }
    return true;
}

/// A directed cycle of d as a vertex sequence (first vertex not repeated), if any.
inline std::optional<std::vector<VertexId>> find_directed_cycle(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::vector<VertexId>> out(n);
    for (auto [t, h] : d.arcs()) out[t].push_back(h);
    std::vector<std::uint8_t> color(n, 0);
    std::vector<VertexId> parent(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (color[s]) continue;
        std::vector<std::pair<VertexId, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                VertexId w = out[v][next++];
                if (color[w] == 1) {
                    std::vector<VertexId> cyc{v};
                    for (VertexId u = v; u != w;) {
                        u = parent[u];
                        cyc.push_back(u);
                    }
                    std::reverse(cyc.begin(), cyc.end());
                    return cyc;
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

inline void require_clique(const Graph& g, const Simplex& x) {
    for (VertexId v : x)
        if (!g.contains(v)) throw NotASimplex("vertex " + std::to_string(v) + " not in graph");
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.has_edge(x[i], x[j])) throw NotASimplex(x.to_string() + " is not a clique");
}

/// Adds vertex n = vertex_count() joined to every vertex of the clique x and
/// to every common neighbour of x. With drop_original (edges only) the edge x
/// is removed, giving an edge subdivision.
inline Graph local_refine(const Graph& g, const Simplex& x, bool drop_original = false) {
    require_clique(g, x);
    if (drop_original && x.size() != 2)
        throw BadParameter("a graph can only drop an edge; use stellar_subdivide for larger simplices");
    const auto fresh = static_cast<VertexId>(g.vertex_count());
    std::vector<VertexId> common(g.neighbors(x[0]).begin(), g.neighbors(x[0]).end());
    for (std::size_t i = 1; i < x.size(); ++i) common = detail::intersect_sorted(common, g.neighbors(x[i]));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto e : g.edge_pairs()) {
        if (drop_original && e.first == x[0] && e.second == x[1]) continue;
        edges.push_back(e);
    }
    for (VertexId v : x) edges.emplace_back(fresh, v);
    for (VertexId w : common) edges.emplace_back(fresh, w);
    return Graph(g.vertex_count() + 1, edges);
}

/// Edge subdivision of {a,b}: local_refine with the edge removed.
inline Graph edge_refine(const Graph& g, VertexId a, VertexId b) {
    return local_refine(g, Simplex{a, b}, true);
}

/// Complex view of the local refinement: every simplex y containing x is
/// replaced by the cone from `fresh` over y minus each vertex of x. Dimension
/// and Euler characteristic are preserved.
inline Complex stellar_subdivide(const Complex& c, const Simplex& x, VertexId fresh) {
    if (!c.contains(x)) throw NotASimplex(x.to_string() + " is not a simplex of the complex");
    if (c.has_vertex(fresh)) throw BadParameter("vertex " + std::to_string(fresh) + " already in use");
    std::vector<Simplex> sets;
    for (const Simplex& y : c.simplices()) {
        if (!x.is_face_of(y)) {
            sets.push_back(y);
            continue;
        }
        for (VertexId v : x) {
            Simplex cone = y.size() == 1 ? Simplex{fresh} : y.without(v).with(fresh);
            sets.push_back(cone);
        }
    }
    return build_complex(sets, true, static_cast<std::size_t>(-1));
}

/// Result of removing every cyclic triangle.
struct TriangleBreak {
    /// Whitney complex of the input with each cyclic triangle stellar-subdivided.
    Complex complex;
    /// Orientation of the 1-skeleton of `complex`; new vertices are sources.
    Digraph digraph;
    /// 1 - chi of the in-neighbour part of each link in `complex`.
    IndexVector index;
    /// New vertex -> the cyclic triangle it replaced.
    std::map<VertexId, Simplex> origin;
};

/// 2-simplices of c whose edges, oriented by d, form a directed 3-cycle.
inline std::vector<Simplex> cyclic_triangles(const Complex& c, const Digraph& d) {
    std::vector<Simplex> out;
    for (const Simplex& x : c.simplices()) {
        if (x.size() < 3) continue;
        if (x.size() > 3) break;
        if (is_cyclic_triangle(d, x[0], x[1], x[2])) out.push_back(x);
    }
    return out;
}

/// Subdivides every cyclic triangle of d, in canonical order unless `order`
/// lists them differently, and orients every edge at a new vertex away from
/// it. Afterwards no 2-simplex is cyclic and the index sums to chi.
///
/// The subdivision happens in the complex: the three original edges of a
/// cyclic triangle survive, so the 1-skeleton graph still contains the 3-clique
/// but the complex no longer contains the triangle.
inline TriangleBreak break_cyclic_triangles(const Digraph& d,
                                            std::optional<std::vector<Simplex>> order = std::nullopt) {
    std::vector<Simplex> cyclic = cyclic_triangles(d);
    if (order) {
        std::vector<Simplex> a = *order, b = cyclic;
        std::sort(a.begin(), a.end());
        if (a != b) throw BadParameter("order must list exactly the cyclic triangles");
        cyclic = *order;
    }
    TriangleBreak out;
    out.complex = whitney_complex(d.base());
    auto arcs = d.arcs();
    VertexId fresh = static_cast<VertexId>(d.vertex_count());
    for (const Simplex& t : cyclic) {
        out.complex = stellar_subdivide(out.complex, t, fresh);
        for (const Simplex& e : out.complex.simplices()) {
            if (e.size() < 2) continue;
            if (e.size() > 2) break;
            if (e[1] == fresh) arcs.emplace_back(fresh, e[0]);
        }
        out.origin.emplace(fresh, t);
        ++fresh;
    }
    out.digraph = Digraph::from_arcs(std::max<std::size_t>(fresh, d.vertex_count()), arcs);
    out.index = lower_link_index(out.complex, out.digraph);
    return out;
}

}  // namespace dircomplex
