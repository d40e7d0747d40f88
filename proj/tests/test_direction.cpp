#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dircomplex;

namespace {

Graph corpus_graph(std::uint64_t k) {
    Rng rng = Rng::stream(21, "direction_corpus", k);
    auto n = static_cast<std::size_t>(rng.between(1, 10));
    double p = std::vector<double>{0.3, 0.5, 0.8}[rng.below(3)];
    return gen::random_graph(n, p, rng.next());
}

VertexFunction random_injective(std::size_t n, std::uint64_t seed) {
    VertexFunction g(n);
    std::iota(g.begin(), g.end(), -static_cast<std::int64_t>(n) / 2);
    Rng rng(seed);
    rng.shuffle(g);
    return g;
}

}  // namespace

TEST_CASE("gradient index on the triangle is 1 at the minimum") {
    Complex c = whitney_complex(gen::complete(3));
    VertexFunction g{1, 2, 3};
    IndexVector i = index_transport(c, {}, gradient_direction(c, g));
    CHECK(i == IndexVector{{0, 1}, {1, 0}, {2, 0}});
    CHECK(sphere_indices(gen::complete(3), g) == i);
}

TEST_CASE("gradient direction needs local injectivity") {
    Complex c = whitney_complex(gen::complete(3));
    VertexFunction g{1, 2, 1};
    CHECK_THROWS_AS(gradient_direction(c, g), NotLocallyInjective);
    VertexFunction short_g{1, 2};
    CHECK_THROWS_AS(gradient_direction(c, short_g), UnknownVertex);
}

TEST_CASE("cyclic square: directions follow heads and every index is zero") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DirectedComplex dc = digraph_direction(d);
    for (std::size_t i = 0; i < dc.complex.size(); ++i) {
        const Simplex& x = dc.complex[i];
        if (x.size() == 1) CHECK(dc.direction[i] == x[0]);
        else CHECK(d.points(x[0], x[1]) == (dc.direction[i] == x[1]));
    }
    IndexVector zero{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(index_transport(dc.complex, {}, dc.direction) == zero);
    CHECK(sphere_indices(d) == zero);
    for (VertexId v = 0; v < 4; ++v) CHECK(index_sphere(d, v) == 0);
}

TEST_CASE("cyclic triangle has no digraph direction") {
    Digraph d = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    try {
        digraph_direction(d);
        FAIL("expected CyclicTriangle");
    } catch (const CyclicTriangle& e) {
        CHECK(e.triangle == std::vector<VertexId>{0, 1, 2});
    }
    CHECK_THROWS_AS(index_sphere(d, 0), CyclicTriangle);
    CHECK_THROWS_AS(sphere_indices(d), CyclicTriangle);
}

TEST_CASE("cyclic triangle admits no vertex-symmetric integer index") {
    // A symmetric integer vector (a,a,a) sums to 3a, never to chi = 1.
    std::int64_t chi = whitney_euler(gen::complete(3));
    CHECK(chi == 1);
    CHECK(chi % 3 != 0);
}

TEST_CASE("minus sphere of the top vertex of the increasing triangle") {
    VertexFunction g{1, 2, 3};
    CHECK(index_sphere(gen::complete(3), g, 2) == 0);
    CHECK(index_sphere(gen::complete(3), g, 0) == 1);
}

TEST_CASE("transport conserves total energy") {
    for (std::uint64_t k = 0; k < 150; ++k) {
        Graph g = corpus_graph(k);
        Complex c = whitney_complex(g);
        Rng rng = Rng::stream(k, "energy");
        EnergyFunction h;
        std::vector<std::int64_t> values;
        for (const Simplex& x : c.simplices()) {
            values.push_back(rng.between(-5, 5));
            h.set(x, values.back());
        }
        DirectionMap f = random_direction(c, k);
        IndexVector i = index_transport(c, h, f);
        std::vector<Simplex> simplices(c.simplices().begin(), c.simplices().end());
        auto expected = oracle::transport(simplices, values, f.targets());
        CHECK(i == IndexVector(expected.begin(), expected.end()));
        CHECK(index_sum(i) == std::accumulate(values.begin(), values.end(), std::int64_t{0}));
    }
}

TEST_CASE("gradient transport equals the sphere formula") {
    for (std::uint64_t k = 0; k < 150; ++k) {
        Graph g = corpus_graph(k);
        VertexFunction f = random_injective(g.vertex_count(), k);
        Complex c = whitney_complex(g);
        IndexVector i = index_transport(c, {}, gradient_direction(c, f));
        oracle::Adj a = oracle::adjacency(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(i.at(v) == oracle::lower_index(a, v, [&](VertexId w) { return f[w] < f[v]; }));
        CHECK(i == sphere_indices(g, f));
    }
}

TEST_CASE("irrotational digraphs: sphere index equals transport and sums to chi") {
    std::size_t tested = 0;
    for (std::uint64_t k = 0; k < 200 && tested < 80; ++k) {
        Graph g = corpus_graph(k);
        auto d = gen::random_irrotational_orientation(g, k, 2000);
        if (!d) continue;
        ++tested;
        DirectedComplex dc = digraph_direction(*d);
        CHECK(dc.direction == sink_direction(dc.complex, *d));
        IndexVector transport = index_transport(dc.complex, {}, dc.direction);
        IndexVector sphere = sphere_indices(*d);
        CHECK(transport == sphere);
        CHECK(index_sum(sphere) == oracle::euler(g));
        CHECK(lower_link_index(dc.complex, *d) == sphere);
    }
    CHECK(tested >= 50);
}

TEST_CASE("symmetric index on the octahedron with a generic height") {
    // Heights of x + 2y + 4z at the vertices +-e1, +-e2, +-e3.
    VertexFunction g{1, -1, 2, -2, 4, -4};
    Graph o = gen::octahedron();
    Complex c = whitney_complex(o);
    BiDirectedComplex b = gradient_bidirection(c, g);
    auto sym = symmetric_index(c, b.fields);
    oracle::Adj a = oracle::adjacency(o);
    Rational total = 0;
    for (VertexId v = 0; v < 6; ++v) {
        std::int64_t up = oracle::lower_index(a, v, [&](VertexId w) { return g[w] < g[v]; });
        std::int64_t down = oracle::lower_index(a, v, [&](VertexId w) { return g[w] > g[v]; });
        CHECK(sym.at(v) == Rational(up + down) / 2);
        total += sym.at(v);
    }
    CHECK(total == 2);
    std::map<VertexId, Rational> frozen{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 1}};
    CHECK(sym == frozen);
}

TEST_CASE("reversal swaps the forward and backward indices") {
    for (std::uint64_t k = 0; k < 40; ++k) {
        Graph g = corpus_graph(k);
        auto d = gen::random_irrotational_orientation(g, k + 7, 2000);
        if (!d) continue;
        BiDirectedComplex b = digraph_bidirection(*d);
        BiDirectedComplex r = digraph_bidirection(d->reversed());
        CHECK(index_transport(b.complex, {}, b.fields.forward) == index_transport(r.complex, {}, r.fields.backward));
        CHECK(index_transport(b.complex, {}, b.fields.backward) == index_transport(r.complex, {}, r.fields.forward));
        CHECK(symmetric_index(b.complex, b.fields) == symmetric_index(r.complex, r.fields));
    }
}

TEST_CASE("symmetric index sums to total energy") {
    Graph g = gen::random_graph(8, 0.6, 3);
    VertexFunction f = random_injective(8, 3);
    Complex c = whitney_complex(g);
    auto sym = symmetric_index(c, gradient_bidirection(c, f).fields);
    Rational total = 0;
    for (const auto& [v, x] : sym) total += x;
    CHECK(total == euler_characteristic(c));
}

TEST_CASE("random direction is reproducible and fixes vertices") {
    Complex c = whitney_complex(gen::complete(5));
    DirectionMap a = random_direction(c, 42);
    CHECK(a == random_direction(c, 42));
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].size() == 1) CHECK(a[i] == c[i][0]);
}

TEST_CASE("direction maps must stay inside their simplex") {
    Complex c = whitney_complex(gen::complete(2));
    CHECK_THROWS_AS(DirectionMap(c, {0, 1, 1, 0}), BadParameter);
    CHECK_THROWS_AS(DirectionMap(c, {0, 0, 0}), BadParameter);
}
