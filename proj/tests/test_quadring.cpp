#include <doctest.h>

#include <complex>
#include <random>

#include "twistknot/quadring.hpp"

using namespace twistknot;

namespace {

QuadElement random_quad(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto poly = [&]() {
        std::vector<mpz_class> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        return IntPolynomial(std::move(c));
    };
    return {poly(), poly()};
}

// eigenvalues of the twist-word matrix at a numeric point
std::pair<std::complex<double>, std::complex<double>> eigen_pair(std::complex<double> u) {
    const std::complex<double> tr = u * u + 2.0;
    const std::complex<double> disc = std::sqrt(u * u * u * u + 4.0 * u * u);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

std::complex<double> embed(const QuadElement& s, std::complex<double> u,
                           std::complex<double> lam) {
    return s.a.eval_complex(u) + s.b.eval_complex(u) * lam;
}

}  // namespace

TEST_SUITE("quadring") {

TEST_CASE("defining relation and inverse pair") {
    const QuadElement lam = QuadElement::lambda();
    CHECK(lam * lam == QuadElement(IntPolynomial{-1}, eigen_trace_poly()));
    CHECK(lam * QuadElement::lambda_inverse() == QuadElement::one());
}

TEST_CASE("square of 1 + lambda") {
    const QuadElement s = QuadElement::one() + QuadElement::lambda();
    CHECK(s * s == QuadElement(IntPolynomial::zero(), IntPolynomial{4, 0, 1}));
}

TEST_CASE("powers of lambda") {
    const QuadElement lam = QuadElement::lambda();
    CHECK(pow(lam, 0) == QuadElement::one());
    CHECK(pow(lam, 2) == QuadElement(IntPolynomial{-1}, eigen_trace_poly()));
    CHECK(pow(lam, -1) == QuadElement::lambda_inverse());
    CHECK(pow(lam, 5) * pow(lam, -5) == QuadElement::one());
}

TEST_CASE("negative power of a non-unit throws") {
    const QuadElement s = QuadElement::one() + QuadElement::lambda();  // norm u^2+4
    CHECK_THROWS_AS(pow(s, -2), NonUnit);
}

TEST_CASE("geometric sums") {
    CHECK(geometric_sum(1) == QuadElement::one());
    CHECK(geometric_sum(2) == QuadElement::one() + QuadElement::lambda());
    CHECK(geometric_sum(-1) == QuadElement(IntPolynomial{-2, 0, -1}, IntPolynomial{1}));
    CHECK_THROWS_AS(geometric_sum(0), InvalidQ);
}

TEST_CASE("geometric sum satisfies (lambda - 1) * sum = lambda^q - 1") {
    const QuadElement lam = QuadElement::lambda();
    const QuadElement lam_minus_1 = lam - QuadElement::one();
    for (int q = -12; q <= 12; ++q) {
        if (q == 0) continue;
        CHECK(lam_minus_1 * geometric_sum(q) == pow(lam, q) - QuadElement::one());
    }
}

TEST_CASE("norm and trace golden values") {
    CHECK(norm(QuadElement::one()) == IntPolynomial{1});
    CHECK(norm(QuadElement::lambda()) == IntPolynomial{1});
    CHECK(norm(QuadElement::one() + QuadElement::lambda()) == IntPolynomial{4, 0, 1});
    CHECK(embed_trace(QuadElement::one()) == IntPolynomial{2});
    CHECK(embed_trace(QuadElement::lambda()) == eigen_trace_poly());
    CHECK(embed_trace(QuadElement::one() + QuadElement::lambda()) == IntPolynomial{4, 0, 1});
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(2023);
    for (int i = 0; i < 60; ++i) {
        const QuadElement a = random_quad(rng);
        const QuadElement b = random_quad(rng);
        const QuadElement c = random_quad(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(555);
    for (int i = 0; i < 60; ++i) {
        const QuadElement a = random_quad(rng);
        const QuadElement b = random_quad(rng);
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("numeric embeddings reproduce norm and trace") {
    std::mt19937 rng(8886);
    std::uniform_real_distribution<double> coord(-1.4, 1.4);
    for (int i = 0; i < 40; ++i) {
        const QuadElement s = random_quad(rng);
        const std::complex<double> u(coord(rng), coord(rng));
        const auto [lp, lm] = eigen_pair(u);
        const auto prod = embed(s, u, lp) * embed(s, u, lm);
        const auto sum = embed(s, u, lp) + embed(s, u, lm);
        const auto exact_prod = norm(s).eval_complex(u);
        const auto exact_sum = embed_trace(s).eval_complex(u);
        const double scale_p = std::max(1.0, std::abs(exact_prod));
        const double scale_s = std::max(1.0, std::abs(exact_sum));
        CHECK(std::abs(prod - exact_prod) / scale_p < 1e-9);
        CHECK(std::abs(sum - exact_sum) / scale_s < 1e-9);
    }
}

}  // TEST_SUITE
