#include <doctest.h>

#include <complex>
#include <random>

#include "twistknot/twistcore.hpp"

using namespace twistknot;

namespace {

using cplx = std::complex<double>;

// Lemma-style reference computation with explicit radicals, in doubles.
struct RadicalTriple {
    cplx gamma, delta;
};

RadicalTriple radical_formula(int q, cplx u) {
    const cplx tr = u * u + 2.0;
    const cplx disc = std::sqrt(u * u * u * u + 4.0 * u * u);
    const cplx lp = (tr + disc) / 2.0;
    const cplx lm = (tr - disc) / 2.0;
    auto geom = [q](cplx lam) {
        // sum form, stable for both signs of q
        cplx acc(0.0, 0.0);
        if (q > 0) {
            cplx pw(1.0, 0.0);
            for (int i = 0; i < q; ++i) {
                acc += pw;
                pw *= lam;
            }
            return acc;
        }
        cplx pw(1.0, 0.0);
        for (int i = 0; i < -q; ++i) {
            pw /= lam;
            acc += pw;
        }
        return -acc;
    };
    const cplx alpha = geom(lp);
    const cplx beta = geom(lm);
    RadicalTriple t;
    t.gamma = alpha * beta;
    t.delta = alpha + beta - 2.0 * alpha * beta + (lp - lm) / (2.0 + lp + lm) * (alpha - beta);
    return t;
}

}  // namespace

TEST_SUITE("twistcore") {

TEST_CASE("chebyshev-like S sequence") {
    CHECK(chebyshev_s(0) == IntPolynomial::zero());
    CHECK(chebyshev_s(1) == IntPolynomial{1});
    CHECK(chebyshev_s(2) == IntPolynomial{2, 0, 1});
    CHECK(chebyshev_s(-3) == -IntPolynomial{3, 0, 4, 0, 1});
}

TEST_CASE("trace polynomials match the known low cases") {
    CHECK(trace_tau(1) == IntPolynomial{2, 0, 1});
    CHECK(trace_tau(2) == IntPolynomial{2, 0, 4, 0, 1});
    CHECK(trace_tau(-2) == IntPolynomial{2, 0, 4, 0, 1});
    CHECK(trace_tau(3) == IntPolynomial{2, 0, 9, 0, 6, 0, 1});
    CHECK(trace_tau(-3) == trace_tau(3));
    CHECK(trace_tau(0) == IntPolynomial{2});
}

TEST_CASE("riley polynomials match the known low cases") {
    CHECK(riley(1) == IntPolynomial{1, -1});
    CHECK(riley(-1) == IntPolynomial{1, 1, 1});
    CHECK(riley(2) == IntPolynomial{1, -2, 1, -1});
    CHECK(riley(-2) == IntPolynomial{1, 2, 3, 1, 1});
    CHECK(riley(3) == IntPolynomial{1, -3, 3, -4, 1, -1});
    CHECK_THROWS_AS(riley(0), InvalidQ);
}

TEST_CASE("riley degree, leading coefficient, and constant term laws") {
    for (int q = -30; q <= 30; ++q) {
        if (q == 0) continue;
        const IntPolynomial phi = riley(q);
        const int expected = 2 * std::abs(q) - (q > 0 ? 1 : 0);
        CHECK(*phi.degree() == expected);
        CHECK((phi.leading() == 1 || phi.leading() == -1));
        CHECK(phi.coeff(0) == 1);  // u = 0 is never a Riley root
    }
}

TEST_CASE("tau is monic, even, and symmetric in q") {
    for (int q = 1; q <= 30; ++q) {
        const IntPolynomial tau = trace_tau(q);
        CHECK(*tau.degree() == 2 * q);
        CHECK(tau.leading() == 1);
        CHECK(tau == trace_tau(-q));
        for (int i = 1; i <= 2 * q; i += 2) CHECK(tau.coeff(i) == 0);
    }
}

TEST_CASE("twisted Alexander golden values") {
    const TwistedAlexander t1 = twisted_alexander(1);
    CHECK(t1.gamma == IntPolynomial{1});
    CHECK(t1.delta == IntPolynomial::zero());

    const TwistedAlexander tm1 = twisted_alexander(-1);
    CHECK(tm1.gamma == IntPolynomial{1});
    CHECK(tm1.delta == IntPolynomial{-4});

    const TwistedAlexander t2 = twisted_alexander(2);
    CHECK(t2.gamma == IntPolynomial{4, 0, 1});
    CHECK(t2.delta == IntPolynomial{-4});

    const TwistedAlexander tm2 = twisted_alexander(-2);
    CHECK(tm2.gamma == IntPolynomial{4, 0, 1});
    CHECK(tm2.delta == IntPolynomial{-12, 0, -4});

    CHECK_THROWS_AS(twisted_alexander(0), InvalidQ);
}

TEST_CASE("gamma degree and monicity, delta degree law") {
    for (int q = -30; q <= 30; ++q) {
        if (q == 0) continue;
        const TwistedAlexander t = twisted_alexander(q);
        CHECK(*t.gamma.degree() == 2 * std::abs(q) - 2);
        CHECK(t.gamma.leading() == 1);
        if (q >= 2) CHECK(*t.delta.degree() == 2 * q - 4);
    }
    CHECK(twisted_alexander(1).delta == IntPolynomial::zero());
    CHECK(twisted_alexander(-1).delta == IntPolynomial{-4});
}

TEST_CASE("gamma via traces agrees with the closed form") {
    CHECK(gamma_via_trace(1) == IntPolynomial{1});
    CHECK(gamma_via_trace(2) == IntPolynomial{4, 0, 1});
    CHECK(gamma_via_trace(-2) == IntPolynomial{4, 0, 1});
    CHECK(gamma_via_trace(3) == IntPolynomial{9, 0, 6, 0, 1});
    CHECK(gamma_via_trace(-3) == twisted_alexander(3).gamma);
    for (int q = -30; q <= 30; ++q) {
        if (q == 0) continue;
        CHECK(gamma_via_trace(q) == twisted_alexander(q).gamma);
    }
}

TEST_CASE("radical formula agrees with the exact coefficients") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> coord(-1.4, 1.4);
    for (int q = -6; q <= 6; ++q) {
        if (q == 0) continue;
        const TwistedAlexander t = twisted_alexander(q);
        for (int i = 0; i < 20; ++i) {
            const cplx u(coord(rng), coord(rng));
            const RadicalTriple ref = radical_formula(q, u);
            const cplx g = t.gamma.eval_complex(u);
            const cplx d = t.delta.eval_complex(u);
            CHECK(std::abs(g - ref.gamma) / std::max(1.0, std::abs(g)) < 1e-8);
            CHECK(std::abs(d - ref.delta) / std::max(1.0, std::abs(d)) < 1e-8);
        }
    }
}

TEST_CASE("genus bound is attained with genus one") {
    // Delta has exact t-degree 2 = 4g - 2 once gamma is nonzero
    for (int q : {1, -1, 2, -2, 5, -7}) {
        CHECK(!twisted_alexander(q).gamma.is_zero());
        CHECK(knot_facts(q).genus == 1);
    }
}

TEST_CASE("classical Alexander polynomial rows") {
    CHECK(classical_alexander(1) == std::array<long long, 3>{1, -1, 1});
    CHECK(classical_alexander(-1) == std::array<long long, 3>{-1, 3, -1});
    CHECK(classical_alexander(0) == std::array<long long, 3>{0, 1, 0});
}

TEST_CASE("knot facts") {
    CHECK(knot_facts(1).fibered);
    CHECK(!knot_facts(1).hyperbolic);
    CHECK(knot_facts(-1).fibered);
    CHECK(knot_facts(-1).hyperbolic);
    CHECK(!knot_facts(5).fibered);
    CHECK(knot_facts(5).hyperbolic);
    CHECK(knot_facts(2).alexander == std::array<long long, 3>{2, -3, 2});
    CHECK_THROWS_AS(knot_facts(0), InvalidQ);
}

TEST_CASE("knot labels") {
    CHECK(knot_label(1) == "J(2,2)");
    CHECK(knot_label(-1) == "J(2,-2)");
    CHECK(knot_label(2) == "J(2,4)");
}

}  // TEST_SUITE
