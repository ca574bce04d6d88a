#pragma once

#include "twistknot/exactpoly.hpp"

namespace twistknot {

/*
 * Arithmetic in R = Z[u][L]/(L^2 - (u^2+2)L + 1), the ring generated by the
 * eigenvalues of the parabolic image of the twist word w.  The two roots of
 * the modulus multiply to 1 and add to u^2+2, so L is a unit with inverse
 * (u^2+2) - L and every expression in the eigenvalues stays radical-free.
 */
struct QuadElement {
    IntPolynomial a;  // coefficient of 1
    IntPolynomial b;  // coefficient of L

    QuadElement() = default;
    QuadElement(IntPolynomial a_, IntPolynomial b_) : a(std::move(a_)), b(std::move(b_)) {}

    static QuadElement zero() { return {}; }
    static QuadElement one() { return {IntPolynomial{1}, IntPolynomial::zero()}; }
    static QuadElement lambda() { return {IntPolynomial::zero(), IntPolynomial{1}}; }
    static QuadElement lambda_inverse();  // (u^2+2) - L

    QuadElement operator+(const QuadElement& t) const { return {a + t.a, b + t.b}; }
    QuadElement operator-(const QuadElement& t) const { return {a - t.a, b - t.b}; }
    QuadElement operator-() const { return {-a, -b}; }
    QuadElement operator*(const QuadElement& t) const;

    bool operator==(const QuadElement& t) const { return a == t.a && b == t.b; }
    bool operator!=(const QuadElement& t) const { return !(*this == t); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    // L -> (u^2+2) - L, the map swapping the two eigenvalue embeddings.
    QuadElement conjugate() const;
};

// trace of the twist-word matrix: u^2 + 2
IntPolynomial eigen_trace_poly();

// Binary exponentiation; negative k requires norm(s) = +-1 and throws NonUnit
// otherwise.
QuadElement pow(const QuadElement& s, long k);

// The element satisfying (L - 1) * sum = L^q - 1: for q > 0 the literal sum
// 1 + L + ... + L^{q-1}, for q < 0 the continuation -(L^-1 + ... + L^q).
// Throws InvalidQ for q = 0.
QuadElement geometric_sum(long q);

// (a + b L+)(a + b L-) = a^2 + ab(u^2+2) + b^2, an element of Z[u].
IntPolynomial norm(const QuadElement& s);

// (a + b L+) + (a + b L-) = 2a + b(u^2+2).
IntPolynomial embed_trace(const QuadElement& s);

}  // namespace twistknot
