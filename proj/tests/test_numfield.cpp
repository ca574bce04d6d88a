#include <doctest.h>

#include <random>

#include "twistknot/numfield.hpp"
#include "twistknot/twistcore.hpp"

using namespace twistknot;

namespace {

AlgebraicNumber random_element(const NumberFieldPtr& field, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<mpq_class> c(static_cast<size_t>(field->degree()));
    for (auto& v : c) {
        v = mpq_class(num(rng), den(rng));
        v.canonicalize();
    }
    return field->element(RatPolynomial(std::move(c)));
}

}  // namespace

TEST_SUITE("numfield") {

TEST_CASE("reduction modulo the field polynomial") {
    const auto field = NumberField::create(RatPolynomial{1, 1, 1});
    const AlgebraicNumber u = field->generator();
    CHECK(u * u == field->element(RatPolynomial{-1, -1}));
    CHECK(u * field->one() == u);
    CHECK((u + (-u)).is_zero());
}

TEST_CASE("inverses") {
    const auto cyclotomic = NumberField::create(RatPolynomial{1, 1, 1});
    CHECK(cyclotomic->one().inverse() == cyclotomic->one());
    CHECK(cyclotomic->generator().inverse() == cyclotomic->element(RatPolynomial{-1, -1}));

    const auto linear = NumberField::create(RatPolynomial{1, -1});  // u = 1
    CHECK(linear->generator().inverse() == linear->one());

    CHECK_THROWS_AS(cyclotomic->zero().inverse(), ZeroInverse);
}

TEST_CASE("zero divisors are surfaced for a reducible modulus") {
    // u^2 - 1 = (u-1)(u+1)
    const auto ring = NumberField::create(RatPolynomial{-1, 0, 1});
    const AlgebraicNumber x = ring->element(RatPolynomial{-1, 1});
    CHECK_THROWS_AS(x.inverse(), ZeroDivisor);
}

TEST_CASE("modulus mismatch is rejected") {
    const auto f1 = NumberField::create(RatPolynomial{1, 1, 1});
    const auto f2 = NumberField::create(RatPolynomial{1, -1});
    CHECK_THROWS_AS(f1->generator() + f2->generator(), ModulusMismatch);
    // equal moduli in distinct field objects are compatible
    const auto f3 = NumberField::create(RatPolynomial{1, 1, 1});
    CHECK(f1->generator() == f3->generator());
}

TEST_CASE("the generator is a root of the defining polynomial") {
    for (int q : {-3, -2, -1, 1, 2, 3}) {
        const auto field = NumberField::create(riley(q));
        const AlgebraicNumber u = field->generator();
        AlgebraicNumber acc = field->zero();
        const IntPolynomial phi = riley(q);
        // Horner evaluation of phi at its own residue class
        for (int i = *phi.degree(); i >= 0; --i) {
            acc = acc * u + field->element(IntPolynomial::constant(phi.coeff(i)));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(1618);
    for (int q : {-3, -2, -1, 1, 2, 3}) {
        const auto field = NumberField::create(riley(q));
        for (int i = 0; i < 25; ++i) {
            const AlgebraicNumber a = random_element(field, rng);
            const AlgebraicNumber b = random_element(field, rng);
            const AlgebraicNumber c = random_element(field, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * (b * c) == (a * b) * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == field->one());
        }
    }
}

}  // TEST_SUITE
