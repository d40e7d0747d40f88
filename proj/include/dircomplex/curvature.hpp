/**
 * Levitt curvature, index expectation, f-polynomials and the polynomial forms
 * of Poincare-Hopf and Gauss-Bonnet.
 *
 * curvature() works from the f-vector of the unit sphere,
 *
 *     K(v) = 1 + sum_k (-1)^(k+1) f_k(S(v)) / (k+2),
 *
 * which is the same number as sum over Whitney simplices x containing v of
 * omega(x)/|x| (a k-simplex of S(v) is a (k+1)-simplex through v). The
 * expectation routines instead average actual gradient indices, so the two
 * sides of E[i_g] = K are computed independently.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "complex.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace dircomplex {

inline Rational curvature(const Graph& g, VertexId v) {
    g.check(v);
    std::vector<std::int64_t> f = clique_counts(unit_sphere(g, v).graph);
    Rational k = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational term = make_rational(f[i], static_cast<std::int64_t>(i) + 2);
        if (i % 2 == 0) k -= term;
        else k += term;
    }
    return k;
}

inline std::vector<Rational> curvatures(const Graph& g) {
    std::vector<Rational> out;
    out.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(curvature(g, v));
    return out;
}

namespace detail {

/// Cliques with omega, for repeated argmax transport over vertex orders.
struct CliqueTable {
    std::vector<std::vector<VertexId>> cliques;
    std::vector<std::int64_t> weight;

    explicit CliqueTable(const Graph& g) {
        for_each_clique(g, static_cast<std::size_t>(-1), [&](const std::vector<VertexId>& c) {
            cliques.push_back(c);
            weight.push_back(c.size() % 2 == 1 ? 1 : -1);
        });
    }

    /// Gradient index for the order `rank` (rank[v] distinct), accumulated into acc.
    void accumulate(const std::vector<std::int64_t>& rank, std::vector<std::int64_t>& acc) const {
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            const auto& c = cliques[i];
            VertexId best = c[0];
            for (VertexId v : c)
                if (rank[v] > rank[best]) best = v;
            acc[best] += weight[i];
        }
    }
};

inline std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DIRCOMPLEX_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    }
    return n;
}

}  // namespace detail

/// Largest graph index_expectation_exact accepts (|V|! orders).
inline constexpr std::size_t kMaxExactVertices = 10;

/// Average gradient index over all |V|! vertex orders.
inline std::vector<Rational> index_expectation_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxExactVertices)
        throw TooLarge(std::to_string(n) + " vertices is too many for full enumeration; use Monte-Carlo");
    detail::CliqueTable table(g);
    std::vector<std::int64_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::vector<std::int64_t> acc(n, 0);
    std::int64_t orders = 0;
    do {
        table.accumulate(rank, acc);
        ++orders;
    } while (std::next_permutation(rank.begin(), rank.end()));
    std::vector<Rational> out;
    for (std::int64_t a : acc) out.push_back(make_rational(a, orders));
    return out;
}

struct MonteCarloExpectation {
    std::vector<Rational> mean;
    std::size_t samples = 0;
    /// Every individual sample summed to this value (the Euler characteristic).
    std::int64_t per_sample_sum = 0;
    bool conservation_held = true;
};

/// Empirical mean of gradient indices over uniformly random vertex orders.
/// Sample k draws its order from Rng::derive(seed, "mc_order", k), so the
/// result does not depend on the number of worker threads.
inline MonteCarloExpectation index_expectation_mc(const Graph& g, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw BadParameter("samples must be positive");
    const std::size_t n = g.vertex_count();
    detail::CliqueTable table(g);
    const std::int64_t chi = std::accumulate(table.weight.begin(), table.weight.end(), std::int64_t{0});
    const std::size_t workers = std::min(detail::worker_count(), samples);

    std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(n, 0));
    std::vector<char> ok(workers, 1);
    auto run = [&](std::size_t w) {
        std::vector<std::int64_t> rank(n), one(n);
        for (std::size_t k = w; k < samples; k += workers) {
            std::iota(rank.begin(), rank.end(), 0);
            Rng rng = Rng::stream(seed, "mc_order", k);
            rng.shuffle(rank);
            std::fill(one.begin(), one.end(), 0);
            table.accumulate(rank, one);
            std::int64_t s = 0;
            for (std::size_t v = 0; v < n; ++v) {
                partial[w][v] += one[v];
                s += one[v];
            }
            if (s != chi) ok[w] = 0;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    MonteCarloExpectation out;
    out.samples = samples;
    out.per_sample_sum = chi;
    for (std::size_t v = 0; v < n; ++v) {
        std::int64_t total = 0;
        for (std::size_t w = 0; w < workers; ++w) total += partial[w][v];
        out.mean.push_back(make_rational(total, static_cast<std::int64_t>(samples)));
    }
    for (char c : ok) out.conservation_held = out.conservation_held && c;
    return out;
}

/// Expected transport index when F(x) is uniform on x independently for every
/// simplex: sum over x containing v of H(x) / |x|.
inline std::map<VertexId, Rational> uniform_direction_expectation(const Complex& c,
                                                                  const EnergyFunction& h = {}) {
    std::map<VertexId, Rational> out;
    for (VertexId v : c.vertices()) out[v] = 0;
    std::vector<std::int64_t> values = h.on(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational share = make_rational(values[i], static_cast<std::int64_t>(c[i].size()));
        for (VertexId v : c[i]) out[v] += share;
    }
    return out;
}

// ---------------------------------------------------------------------------
// f-polynomials
// ---------------------------------------------------------------------------

/// f(t) = 1 + f_0 t + ... + f_d t^(d+1); coeffs[0] = 1.
struct FPolynomial {
    std::vector<std::int64_t> coeffs{1};

    std::int64_t evaluate(std::int64_t t) const {
        std::int64_t r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + *it;
        return r;
    }
    friend bool operator==(const FPolynomial&, const FPolynomial&) = default;
};

using RationalPolynomial = std::vector<Rational>;

inline FPolynomial f_polynomial(const FVector& f) {
    FPolynomial p;
    p.coeffs.insert(p.coeffs.end(), f.counts.begin(), f.counts.end());
    return p;
}

inline FPolynomial f_polynomial(const Complex& c) { return f_polynomial(f_vector(c)); }

/// f-polynomial of the Whitney complex of g, without building the complex.
inline FPolynomial f_polynomial(const Graph& g) { return f_polynomial(FVector{clique_counts(g)}); }

/// Term-wise antiderivative with zero constant term.
inline RationalPolynomial antiderivative(const FPolynomial& p) {
    RationalPolynomial out{Rational(0)};
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        out.push_back(make_rational(p.coeffs[k], static_cast<std::int64_t>(k) + 1));
    return out;
}

inline RationalPolynomial to_rational(const FPolynomial& p) {
    RationalPolynomial out;
    for (std::int64_t c : p.coeffs) out.push_back(Rational(c));
    return out;
}

inline void add_into(RationalPolynomial& acc, const RationalPolynomial& p, std::size_t shift = 0) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

inline void trim(RationalPolynomial& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Both sides of a polynomial identity, coefficient by coefficient.
struct PolynomialIdentityReport {
    std::string name;
    RationalPolynomial lhs;
    RationalPolynomial rhs;
    bool holds = false;
    /// lhs(-1), which should equal 1 - chi.
    Rational lhs_at_minus_one;
    std::int64_t euler = 0;

    /// Throws IdentityViolated unless the identity held.
    const PolynomialIdentityReport& require() const {
        if (!holds) throw IdentityViolated(name + " does not hold");
        return *this;
    }
};

namespace detail {

inline Rational evaluate(const RationalPolynomial& p, std::int64_t t) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

inline PolynomialIdentityReport finish_report(std::string name, const Graph& g, RationalPolynomial rhs) {
    PolynomialIdentityReport rep;
    rep.name = std::move(name);
    rep.lhs = to_rational(f_polynomial(g));
    rep.rhs = std::move(rhs);
    trim(rep.lhs);
    trim(rep.rhs);
    rep.holds = rep.lhs == rep.rhs;
    rep.lhs_at_minus_one = evaluate(rep.lhs, -1);
    rep.euler = whitney_euler(g);
    return rep;
}

}  // namespace detail

/// f_G(t) = 1 + t * sum_v f_{S^-_g(v)}(t), S^-_g(v) the neighbours below v.
inline PolynomialIdentityReport parametrized_ph_check(const Graph& g, std::span<const std::int64_t> values) {
    if (values.size() < g.vertex_count()) throw UnknownVertex(static_cast<VertexId>(values.size()));
    Digraph d = gradient_digraph(g, values);
    RationalPolynomial rhs{Rational(1)};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        add_into(rhs, to_rational(f_polynomial(minus_sphere(d, v).graph)), 1);
    return detail::finish_report("parametrized Poincare-Hopf", g, std::move(rhs));
}

/// f_G(t) = 1 + sum_v F_{S(v)}(t), F the antiderivative of the f-polynomial.
inline PolynomialIdentityReport gb_functional_check(const Graph& g) {
    RationalPolynomial rhs{Rational(1)};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        add_into(rhs, antiderivative(f_polynomial(unit_sphere(g, v).graph)));
    return detail::finish_report("functional Gauss-Bonnet", g, std::move(rhs));
}

}  // namespace dircomplex
