#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dircomplex;

namespace {

Graph corpus_graph(std::uint64_t k, std::size_t max_n = 9) {
    Rng rng = Rng::stream(31, "refinement_corpus", k);
    auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n)));
    double p = std::vector<double>{0.3, 0.5, 0.8}[rng.below(3)];
    return gen::random_graph(n, p, rng.next());
}

Digraph cyclic_triangle() { return Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Sink of every simplex of c (which must have no cyclic 2-simplex).
DirectionMap sinks(const Complex& c, const Digraph& d) {
    std::vector<VertexId> t;
    for (const Simplex& x : c.simplices()) {
        std::optional<VertexId> sink;
        for (VertexId v : x) {
            bool all_in = true;
            for (VertexId w : x)
                if (w != v && !d.points(w, v)) all_in = false;
            if (all_in) sink = v;
        }
        REQUIRE(sink.has_value());
        t.push_back(*sink);
    }
    return DirectionMap(c, std::move(t));
}

}  // namespace

TEST_CASE("barycentric refinement of the triangle") {
    Complex c = whitney_complex(gen::complete(3));
    RefinedGraph r = barycentric(c);
    std::size_t containments = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j && c[i].is_face_of(c[j])) ++containments;
    CHECK(r.graph.vertex_count() == 7);
    CHECK(r.graph.edge_count() == containments);
    CHECK(r.graph.edge_count() == 12);
    CHECK(clique_counts(r.graph) == std::vector<std::int64_t>{7, 12, 6});
    CHECK(whitney_euler(r.graph) == 1);
    CHECK(r.origin[6] == Simplex{0, 1, 2});
}

TEST_CASE("barycentric refinement preserves chi") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        Graph g = corpus_graph(k, 7);
        CHECK(whitney_euler(barycentric(whitney_complex(g)).graph) == oracle::euler(g));
    }
}

TEST_CASE("maximal simplex direction gives omega of the origin") {
    // Chains topped by x are the cone over the refined boundary of x, so the
    // index at node x is 1 - chi(boundary) = omega(x).
    Complex c = whitney_complex(gen::wheel(4));
    RefinedGraph r = barycentric(c);
    DirectedComplex dc = maximal_simplex_direction(r);
    IndexVector i = index_transport(dc.complex, {}, dc.direction);
    for (VertexId node = 0; node < r.origin.size(); ++node) CHECK(i.at(node) == omega(r.origin[node]));
    CHECK(index_sum(i) == 1);
}

TEST_CASE("refined field of the cyclic triangle") {
    RefinedField rf = refine_field(cyclic_triangle());
    CHECK(rf.digraph.vertex_count() == 7);
    CHECK(is_irrotational(rf.digraph));
    // The boundary cycle 0 -> 1 -> 2 -> 0 survives as 0 -> m01 -> 1 -> m12 -> 2 -> m02 -> 0.
    CHECK_FALSE(is_acyclic(rf.digraph));
    auto cyc = find_directed_cycle(rf.digraph);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 6);
    for (std::size_t k = 0; k < cyc->size(); ++k)
        CHECK(rf.digraph.points((*cyc)[k], (*cyc)[(k + 1) % cyc->size()]));
    IndexVector i = sphere_indices(rf.digraph);
    CHECK(index_sum(i) == 1);
}

TEST_CASE("refined fields are irrotational, acyclic exactly when the input is") {
    for (std::uint64_t k = 0; k < 80; ++k) {
        Graph g = corpus_graph(k, 7);
        Digraph d = gen::random_orientation(g, k);
        RefinedField rf = refine_field(d);
        CHECK(is_irrotational(rf.digraph));
        CHECK(is_acyclic(rf.digraph) == is_acyclic(d));
        CHECK(index_sum(sphere_indices(rf.digraph)) == oracle::euler(g));
    }
}

TEST_CASE("refined directed wheel has indices summing to one") {
    // Rim cycle plus alternating spokes: triangles {0,1,2} and {0,3,4} are cyclic.
    Digraph d = Digraph::from_arcs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {2, 0}, {0, 3}, {4, 0}});
    CHECK_FALSE(is_irrotational(d));
    RefinedField rf = refine_field(d);
    CHECK(is_irrotational(rf.digraph));
    CHECK(index_sum(sphere_indices(rf.digraph)) == 1);
}

TEST_CASE("acyclicity") {
    CHECK_FALSE(is_acyclic(Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
    for (std::uint64_t k = 0; k < 30; ++k) {
        Graph g = corpus_graph(k);
        VertexFunction f(g.vertex_count());
        std::iota(f.begin(), f.end(), 0);
        Rng rng(k);
        rng.shuffle(f);
        Digraph d = gradient_digraph(g, f);
        CHECK(is_acyclic(d));
        CHECK_FALSE(find_directed_cycle(d).has_value());
    }
}

TEST_CASE("local refinement preserves chi for every clique") {
    for (std::uint64_t k = 0; k < 25; ++k) {
        Graph g = corpus_graph(k, 7);
        std::int64_t chi = oracle::euler(g);
        for (const auto& c : oracle::cliques(g)) {
            Graph h = local_refine(g, Simplex::from_sorted(c));
            CHECK(h.vertex_count() == g.vertex_count() + 1);
            CHECK(oracle::euler(h) == chi);
        }
    }
}

TEST_CASE("local refinement of an octahedron face") {
    Graph h = local_refine(gen::octahedron(), Simplex{0, 2, 4});
    CHECK(whitney_euler(h) == 2);
    CHECK(h.degree(6) == 3);
}

TEST_CASE("edge refinement") {
    Graph h = edge_refine(gen::complete(3), 0, 1);
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK(h.has_edge(3, 2));
    CHECK(whitney_euler(h) == 1);
    for (std::uint64_t k = 0; k < 30; ++k) {
        Graph g = corpus_graph(k);
        for (auto [a, b] : g.edge_pairs()) CHECK(whitney_euler(edge_refine(g, a, b)) == oracle::euler(g));
    }
    CHECK_THROWS_AS(local_refine(gen::complete(3), Simplex{0, 1, 2}, true), BadParameter);
    CHECK_THROWS_AS(local_refine(gen::cycle(4), Simplex{0, 2}), NotASimplex);
}

TEST_CASE("stellar subdivision preserves chi and dimension") {
    Complex c = whitney_complex(gen::octahedron());
    Complex s = stellar_subdivide(c, Simplex{0, 2, 4}, 6);
    CHECK_FALSE(s.contains(Simplex{0, 2, 4}));
    CHECK(s.contains(Simplex{0, 2, 6}));
    CHECK(s.dimension() == 2);
    CHECK(euler_characteristic(s) == 2);
    CHECK_THROWS_AS(stellar_subdivide(c, Simplex{0, 1}, 6), NotASimplex);
    CHECK_THROWS_AS(stellar_subdivide(c, Simplex{0, 2}, 3), BadParameter);
}

TEST_CASE("breaking the cyclic triangle") {
    TriangleBreak tb = break_cyclic_triangles(cyclic_triangle());
    CHECK(tb.origin.size() == 1);
    CHECK(tb.origin.at(3) == Simplex{0, 1, 2});
    CHECK(tb.index == IndexVector{{0, 0}, {1, 0}, {2, 0}, {3, 1}});
    CHECK(tb.digraph.in_neighbors(3).empty());
    CHECK(cyclic_triangles(tb.complex, tb.digraph).empty());
    CHECK(euler_characteristic(tb.complex) == 1);
}

TEST_CASE("breaking leaves irrotational digraphs alone") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    TriangleBreak tb = break_cyclic_triangles(d);
    CHECK(tb.origin.empty());
    CHECK(tb.complex == whitney_complex(d.base()));
    CHECK(tb.digraph == d);
    CHECK(tb.index == sphere_indices(d));
}

TEST_CASE("breaking two edge-sharing cyclic triangles") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
    REQUIRE(cyclic_triangles(d).size() == 2);
    TriangleBreak tb = break_cyclic_triangles(d);
    CHECK(tb.origin.size() == 2);
    for (const auto& [v, t] : tb.origin) CHECK(tb.digraph.in_neighbors(v).empty());
    CHECK(cyclic_triangles(tb.complex, tb.digraph).empty());
    IndexVector transport = index_transport(tb.complex, {}, sinks(tb.complex, tb.digraph));
    CHECK(transport == tb.index);
    CHECK(index_sum(tb.index) == euler_characteristic(tb.complex));

    std::vector<Simplex> reversed{Simplex{0, 1, 3}, Simplex{0, 1, 2}};
    TriangleBreak other = break_cyclic_triangles(d, reversed);
    CHECK(index_sum(other.index) == euler_characteristic(other.complex));
    CHECK_THROWS_AS(break_cyclic_triangles(d, std::vector<Simplex>{Simplex{0, 1, 2}}), BadParameter);
}

TEST_CASE("breaking random digraphs") {
    for (std::uint64_t k = 0; k < 40; ++k) {
        Graph g = corpus_graph(k);
        Digraph d = gen::random_orientation(g, k);
        TriangleBreak tb = break_cyclic_triangles(d);
        CHECK(cyclic_triangles(tb.complex, tb.digraph).empty());
        CHECK(euler_characteristic(tb.complex) == oracle::euler(g));
        CHECK(index_sum(tb.index) == euler_characteristic(tb.complex));
        CHECK(index_transport(tb.complex, {}, sinks(tb.complex, tb.digraph)) == tb.index);
    }
}
