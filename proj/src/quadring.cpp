#include "twistknot/quadring.hpp"

namespace twistknot {

IntPolynomial eigen_trace_poly() { return IntPolynomial{2, 0, 1}; }

QuadElement QuadElement::lambda_inverse() {
    return {eigen_trace_poly(), IntPolynomial{-1}};
}

QuadElement QuadElement::operator*(const QuadElement& t) const {
    // (a1 + b1 L)(a2 + b2 L) with L^2 = (u^2+2)L - 1
    IntPolynomial ra = a * t.a - b * t.b;
    IntPolynomial rb = a * t.b + t.a * b + eigen_trace_poly() * (b * t.b);
    return {std::move(ra), std::move(rb)};
}

QuadElement QuadElement::conjugate() const {
    return {a + eigen_trace_poly() * b, -b};
}

IntPolynomial norm(const QuadElement& s) {
    return s.a * s.a + s.a * s.b * eigen_trace_poly() + s.b * s.b;
}

IntPolynomial embed_trace(const QuadElement& s) {
    return s.a * IntPolynomial{2} + s.b * eigen_trace_poly();
}

QuadElement pow(const QuadElement& s, long k) {
    QuadElement base = s;
    if (k < 0) {
        IntPolynomial n = norm(s);
        if (n == IntPolynomial{1}) {
            base = s.conjugate();
        } else if (n == IntPolynomial{-1}) {
            base = -s.conjugate();
        } else {
            throw NonUnit();
        }
        k = -k;
    }
    QuadElement acc = QuadElement::one();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

QuadElement geometric_sum(long q) {
    if (q == 0) throw InvalidQ();
    QuadElement acc = QuadElement::zero();
    if (q > 0) {
        QuadElement pw = QuadElement::one();
        for (long i = 0; i < q; ++i) {
            acc = acc + pw;
            pw = pw * QuadElement::lambda();
        }
        return acc;
    }
    const QuadElement linv = QuadElement::lambda_inverse();
    QuadElement pw = QuadElement::one();
    for (long i = 0; i < -q; ++i) {
        pw = pw * linv;
        acc = acc + pw;
    }
    return -acc;
}

}  // namespace twistknot
