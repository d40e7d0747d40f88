#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dircomplex;

namespace {

VectorField gradient_triangle() {
    Complex c = whitney_complex(gen::complete(3));
    VertexFunction g{1, 2, 3};
    DirectionMap f = gradient_direction(c, g);
    return VectorField{c, f, Section::maximal(c)};
}

VectorField cyclic_square() {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DirectedComplex dc = digraph_direction(d);
    Section s = Section::out_edge(dc.complex, d);
    return VectorField{dc.complex, dc.direction, s};
}

VectorField random_field(std::uint64_t k) {
    Rng rng = Rng::stream(51, "dynamics_corpus", k);
    auto n = static_cast<std::size_t>(rng.between(1, 9));
    Graph g = gen::random_graph(n, 0.5, rng.next());
    Complex c = whitney_complex(g);
    return VectorField{c, random_direction(c, rng.next()), Section::random(c, rng.next())};
}

bool intersect(const Simplex& a, const Simplex& b) {
    for (VertexId v : a)
        if (b.contains(v)) return true;
    return false;
}

}  // namespace

TEST_CASE("singleton sections make every vertex a fixed point") {
    Complex c = whitney_complex(gen::wheel(4));
    VectorField f{c, random_direction(c, 1), Section::singletons(c)};
    for (VertexId v : c.vertices()) {
        CHECK(step_v(f, v) == v);
        Orbit<VertexId> o = orbit_v(f, v, 3);
        CHECK(o.period == 1);
        CHECK(o.tail_start == 0);
    }
    EventualImage<VertexId> e = eventual_image_v(f);
    CHECK(e.states == c.vertices());
    CHECK(e.is_permutation);
    CHECK(e.cycle_lengths == std::vector<std::size_t>(5, 1));
}

TEST_CASE("gradient field on the triangle") {
    VectorField f = gradient_triangle();
    CHECK(step_v(f, 0) == 2);
    Orbit<VertexId> o = orbit_v(f, 0, 10);
    CHECK(o.states == std::vector<VertexId>{0, 2});
    CHECK(o.tail_start == 1);
    CHECK(o.period == 1);
    EventualImage<VertexId> e = eventual_image_v(f);
    CHECK(e.states == std::vector<VertexId>{2});
    CHECK(e.is_permutation);
    CHECK(e.cycle_lengths == std::vector<std::size_t>{1});
    CHECK(degenerate_loops(f) == std::vector<VertexId>{2});
}

TEST_CASE("cyclic square field") {
    VectorField f = cyclic_square();
    for (VertexId v = 0; v < 4; ++v) CHECK(step_v(f, v) == (v + 1) % 4);
    Orbit<VertexId> o = orbit_v(f, 2, 10);
    CHECK(o.period == 4);
    CHECK(o.tail_start == 0);
    EventualImage<VertexId> e = eventual_image_v(f);
    CHECK(e.states == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(e.cycle_lengths == std::vector<std::size_t>{4});
    CHECK(degenerate_loops(f).empty());
}

TEST_CASE("orbits respect the step budget") {
    VectorField f = cyclic_square();
    CHECK_THROWS_AS(orbit_v(f, 0, 2), BudgetExceeded);
    CHECK_NOTHROW(orbit_v(f, 0, 4));
    CHECK_THROWS_AS(orbit_v(f, 0, 0), BadParameter);
    CHECK_THROWS_AS(orbit_v(f, 9, 5), UnknownVertex);
}

TEST_CASE("consecutive states intersect") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        VectorField f = random_field(k);
        for (std::size_t x = 0; x < f.complex.size(); ++x) {
            std::size_t y = step_s(f, x);
            CHECK(intersect(f.complex[x], f.complex[y]));
        }
        for (VertexId v : f.complex.vertices()) {
            VertexId w = step_v(f, v);
            CHECK(f.complex[f.section(v)].contains(w));
        }
    }
}

TEST_CASE("orbits end in cycles and the eventual image is permuted") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        VectorField f = random_field(k);
        for (std::size_t x = 0; x < f.complex.size(); ++x) {
            Orbit<std::size_t> o = orbit_s(f, x, f.complex.size() + 1);
            REQUIRE(o.period >= 1);
            CHECK(step_s(f, o.states.back()) == o.states[o.tail_start]);
            for (std::size_t i = 0; i + 1 < o.states.size(); ++i)
                CHECK(intersect(f.complex[o.states[i]], f.complex[o.states[i + 1]]));
        }
        CHECK(eventual_image_s(f).is_permutation);
        CHECK(eventual_image_v(f).is_permutation);
    }
}

TEST_CASE("gradient flows climb off equilibria") {
    for (std::uint64_t k = 0; k < 50; ++k) {
        Graph g = gen::random_graph(8, 0.5, k);
        VertexFunction h(8);
        std::iota(h.begin(), h.end(), 0);
        Rng rng(k);
        rng.shuffle(h);
        Complex c = whitney_complex(g);
        VectorField f{c, gradient_direction(c, h), Section::upper(c, h)};
        for (VertexId v : c.vertices()) {
            VertexId w = step_v(f, v);
            CHECK((w == v || h[w] > h[v]));
        }
    }
}

TEST_CASE("simplex steps by value") {
    VectorField f = gradient_triangle();
    CHECK(step_s(f, Simplex{0, 1}) == Simplex{0, 1, 2});
    CHECK_THROWS_AS(step_s(f, Simplex{0, 5}), NotASimplex);
}

TEST_CASE("equilibria") {
    Complex c = whitney_complex(gen::complete(3));
    VertexFunction g{1, 2, 3};
    auto eq = equilibria(c, gradient_bidirection(c, g).fields);
    CHECK(eq == std::vector<Simplex>{Simplex{0}, Simplex{1}, Simplex{2}});

    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    BiDirectedComplex b = digraph_bidirection(d);
    auto deq = equilibria(b.complex, b.fields);
    CHECK(deq.size() == 4);
    for (const Simplex& x : deq) CHECK(x.size() == 1);

    for (std::uint64_t k = 0; k < 20; ++k) {
        Complex r = whitney_complex(gen::random_graph(7, 0.5, k));
        BiDirection any{random_direction(r, k), random_direction(r, k + 99)};
        auto e = equilibria(r, any);
        for (VertexId v : r.vertices()) CHECK(std::find(e.begin(), e.end(), Simplex{v}) != e.end());
    }
}

TEST_CASE("section validation") {
    Complex c = whitney_complex(gen::complete(3));
    CHECK_THROWS_AS(Section(c, {{0, Simplex{0}}, {1, Simplex{1}}}), BadParameter);
    CHECK_THROWS_AS(Section(c, {{0, Simplex{1}}, {1, Simplex{1}}, {2, Simplex{2}}}), BadParameter);
    CHECK_THROWS_AS(Section(c, {{0, Simplex{0, 7}}, {1, Simplex{1}}, {2, Simplex{2}}}), NotASimplex);
    Section s = Section::random(c, 3);
    for (VertexId v = 0; v < 3; ++v) CHECK(c[s(v)].contains(v));
}
