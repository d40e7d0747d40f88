#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "oracles.hpp"

using namespace dircomplex;

namespace {

Graph corpus_graph(std::uint64_t k, std::size_t max_n) {
    Rng rng = Rng::stream(41, "curvature_corpus", k);
    auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n)));
    double p = std::vector<double>{0.3, 0.5, 0.8}[rng.below(3)];
    return gen::random_graph(n, p, rng.next());
}

Rational sum(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("curvature of small graphs") {
    CHECK(curvatures(gen::complete(3)) == std::vector<Rational>(3, Rational(1, 3)));
    CHECK(curvatures(gen::octahedron()) == std::vector<Rational>(6, Rational(1, 3)));
    CHECK(curvature(Graph(1, {}), 0) == 1);
    // Triangle-free: K = 1 - deg/2.
    Graph star = gen::star(3);
    CHECK(curvature(star, 0) == Rational(-1, 2));
    CHECK(curvature(star, 1) == Rational(1, 2));
    for (std::size_t n = 4; n <= 7; ++n)
        for (VertexId v = 0; v < n; ++v) CHECK(curvature(gen::cycle(n), v) == 0);
}

TEST_CASE("curvature matches the simplex sum and Gauss-Bonnet holds") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        Graph g = corpus_graph(k, 9);
        auto K = curvatures(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(K[v] == oracle::curvature(g, v));
        CHECK(sum(K) == oracle::euler(g));
    }
}

TEST_CASE("exact expectation on the triangle and an edge") {
    CHECK(index_expectation_exact(gen::complete(3)) == std::vector<Rational>(3, Rational(1, 3)));
    CHECK(index_expectation_exact(gen::complete(2)) == std::vector<Rational>(2, Rational(1, 2)));
    CHECK_THROWS_AS(index_expectation_exact(gen::cycle(11)), TooLarge);
}

TEST_CASE("exact expectation equals curvature") {
    CHECK(index_expectation_exact(gen::wheel(4)) == curvatures(gen::wheel(4)));
    CHECK(index_expectation_exact(gen::wheel(4)) == oracle::expectation_by_orders(gen::wheel(4)));
    CHECK(index_expectation_exact(gen::octahedron()) == std::vector<Rational>(6, Rational(1, 3)));
    for (std::uint64_t k = 0; k < 40; ++k) {
        Graph g = corpus_graph(k, 7);
        CHECK(index_expectation_exact(g) == curvatures(g));
    }
}

TEST_CASE("Monte-Carlo expectation") {
    MonteCarloExpectation mc = index_expectation_mc(gen::octahedron(), 10000, 1);
    CHECK(mc.conservation_held);
    CHECK(mc.per_sample_sum == 2);
    for (const auto& m : mc.mean) CHECK(std::abs(to_double(m) - 1.0 / 3.0) < 0.05);

    MonteCarloExpectation one = index_expectation_mc(gen::octahedron(), 1, 5);
    CHECK(sum(one.mean) == 2);
    for (const auto& m : one.mean) CHECK(denominator(m) == 1);

    MonteCarloExpectation again = index_expectation_mc(gen::octahedron(), 10000, 1);
    CHECK(again.mean == mc.mean);
    CHECK_THROWS_AS(index_expectation_mc(gen::octahedron(), 0, 1), BadParameter);
}

TEST_CASE("Monte-Carlo result does not depend on the thread count") {
    Graph g = gen::random_graph(9, 0.5, 2);
    setenv("DIRCOMPLEX_THREADS", "1", 1);
    auto single = index_expectation_mc(g, 500, 3).mean;
    setenv("DIRCOMPLEX_THREADS", "4", 1);
    auto multi = index_expectation_mc(g, 500, 3).mean;
    unsetenv("DIRCOMPLEX_THREADS");
    CHECK(single == multi);
}

TEST_CASE("uniform base maps average to curvature") {
    for (std::uint64_t k = 0; k < 30; ++k) {
        Graph g = corpus_graph(k, 8);
        Complex c = whitney_complex(g);
        auto e = uniform_direction_expectation(c);
        auto K = curvatures(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(e.at(v) == K[v]);
    }
}

TEST_CASE("uniform base map average by enumeration on the triangle") {
    // All 2*2*2*3 = 24 direction maps on the Whitney complex of K3.
    Complex c = whitney_complex(gen::complete(3));
    std::vector<std::size_t> choice(c.size(), 0);
    std::vector<Rational> acc(3, 0);
    std::int64_t maps = 0;
    for (;;) {
        std::vector<VertexId> t;
        for (std::size_t i = 0; i < c.size(); ++i) t.push_back(c[i][choice[i]]);
        IndexVector idx = index_transport(c, {}, DirectionMap(c, t));
        for (VertexId v = 0; v < 3; ++v) acc[v] += idx.at(v);
        ++maps;
        std::size_t i = 0;
        while (i < c.size() && ++choice[i] == c[i].size()) choice[i++] = 0;
        if (i == c.size()) break;
    }
    CHECK(maps == 24);
    for (VertexId v = 0; v < 3; ++v) CHECK(acc[v] / maps == Rational(1, 3));
}

TEST_CASE("f-polynomials") {
    CHECK(f_polynomial(whitney_complex(gen::cycle(4))).coeffs == std::vector<std::int64_t>{1, 4, 4});
    FPolynomial k3 = f_polynomial(whitney_complex(gen::complete(3)));
    CHECK(k3.coeffs == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(k3.evaluate(-1) == 0);
    CHECK(f_polynomial(Complex()).coeffs == std::vector<std::int64_t>{1});
    CHECK(f_polynomial(gen::octahedron()).coeffs == std::vector<std::int64_t>{1, 6, 12, 8});
    RationalPolynomial F = antiderivative(FPolynomial{{1, 2}});
    CHECK(F == RationalPolynomial{0, 1, 1});
}

TEST_CASE("parametrized Poincare-Hopf identity") {
    VertexFunction g{3, 1, 4, 2};
    auto rep = parametrized_ph_check(gen::cycle(4), g);
    CHECK(rep.holds);
    CHECK(rep.rhs == RationalPolynomial{1, 4, 4});
    CHECK(parametrized_ph_check(Graph(1, {}), VertexFunction{0}).rhs == RationalPolynomial{1, 1});
    for (std::uint64_t k = 0; k < 100; ++k) {
        Graph gr = corpus_graph(k, 9);
        VertexFunction f(gr.vertex_count());
        std::iota(f.begin(), f.end(), 0);
        Rng rng(k);
        rng.shuffle(f);
        auto r = parametrized_ph_check(gr, f);
        CHECK(r.holds);
        CHECK(r.lhs_at_minus_one == 1 - r.euler);
        CHECK_NOTHROW(r.require());
    }
}

TEST_CASE("functional Gauss-Bonnet identity") {
    auto c4 = gb_functional_check(gen::cycle(4));
    CHECK(c4.holds);
    CHECK(c4.rhs == RationalPolynomial{1, 4, 4});
    CHECK(gb_functional_check(Graph(1, {})).rhs == RationalPolynomial{1, 1});
    auto oct = gb_functional_check(gen::octahedron());
    CHECK(oct.holds);
    CHECK(oct.lhs == RationalPolynomial{1, 6, 12, 8});
    for (std::uint64_t k = 0; k < 100; ++k) {
        auto r = gb_functional_check(corpus_graph(k, 9));
        CHECK(r.holds);
        CHECK(r.lhs_at_minus_one == 1 - r.euler);
    }
}

TEST_CASE("identity reports refuse to pass a violated identity") {
    PolynomialIdentityReport rep;
    rep.name = "demo";
    rep.holds = false;
    CHECK_THROWS_AS(rep.require(), IdentityViolated);
}
