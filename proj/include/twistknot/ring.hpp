#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "twistknot/errors.hpp"
#include "twistknot/numfield.hpp"

namespace twistknot {

/*
 * Minimal commutative-ring interface used by the Fox-calculus layer.
 * Exact rings (AlgebraicNumber) compare exactly; complex doubles substitute
 * tolerance-based equality and are only ever used for numeric cross-checks.
 * zero_like/one_like take a sample element so that rings needing a context
 * (a number field) can supply it.
 */
template <class R>
struct ring_traits;

template <>
struct ring_traits<AlgebraicNumber> {
    static AlgebraicNumber zero_like(const AlgebraicNumber& s) { return s.field()->zero(); }
    static AlgebraicNumber one_like(const AlgebraicNumber& s) { return s.field()->one(); }
    static bool is_zero(const AlgebraicNumber& v) { return v.is_zero(); }
    static bool equal(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x == y; }
    static AlgebraicNumber inv(const AlgebraicNumber& v) { return v.inverse(); }
};

template <>
struct ring_traits<std::complex<double>> {
    static constexpr double tol = 1e-8;
    static std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
    static std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& v) { return std::abs(v) <= tol; }
    static bool equal(const std::complex<double>& x, const std::complex<double>& y) {
        return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    }
    static std::complex<double> inv(const std::complex<double>& v) { return 1.0 / v; }
};

template <class R>
class RingMatrix2 {
public:
    R a, b, c, d;  // row-major [[a,b],[c,d]]

    RingMatrix2(R a_, R b_, R c_, R d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static RingMatrix2 identity_like(const R& sample) {
        using T = ring_traits<R>;
        return {T::one_like(sample), T::zero_like(sample), T::zero_like(sample),
                T::one_like(sample)};
    }

    RingMatrix2 operator*(const RingMatrix2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }

    RingMatrix2 operator+(const RingMatrix2& m) const {
        return {a + m.a, b + m.b, c + m.c, d + m.d};
    }

    RingMatrix2 operator-(const RingMatrix2& m) const {
        return {a - m.a, b - m.b, c - m.c, d - m.d};
    }

    RingMatrix2 operator*(const R& s) const { return {a * s, b * s, c * s, d * s}; }

    R determinant() const { return a * d - b * c; }
    R trace() const { return a + d; }

    bool operator==(const RingMatrix2& m) const {
        using T = ring_traits<R>;
        return T::equal(a, m.a) && T::equal(b, m.b) && T::equal(c, m.c) && T::equal(d, m.d);
    }

    bool is_zero() const {
        using T = ring_traits<R>;
        return T::is_zero(a) && T::is_zero(b) && T::is_zero(c) && T::is_zero(d);
    }

    // adjugate / det; throws SingularGenerator when det is not invertible
    RingMatrix2 inverse() const {
        using T = ring_traits<R>;
        R det = determinant();
        if (T::is_zero(det)) throw SingularGenerator();
        R idet = T::inv(det);
        return {d * idet, (-b) * idet, (-c) * idet, a * idet};
    }

    RingMatrix2 pow(long k) const {
        RingMatrix2 base = (k < 0) ? inverse() : *this;
        if (k < 0) k = -k;
        RingMatrix2 acc = identity_like(a);
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    RingMatrix2 operator-() const { return {-a, -b, -c, -d}; }
};

/*
 * Dense Laurent polynomial in t over a ring R: offset (lowest stored power)
 * plus ascending coefficients.  The zero polynomial stores nothing and works
 * with any context-carrying coefficient ring because operations with a zero
 * side never need to fabricate coefficients.
 */
template <class R>
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(int offset, std::vector<R> coeffs) : offset_(offset), c_(std::move(coeffs)) {
        trim();
    }

    static LaurentPoly zero() { return {}; }

    static LaurentPoly monomial(int power, R coeff) {
        LaurentPoly p;
        if (!ring_traits<R>::is_zero(coeff)) {
            p.offset_ = power;
            p.c_.push_back(std::move(coeff));
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int lowest_power() const { return offset_; }   // pre: nonzero
    int highest_power() const { return offset_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }

    bool has_coeff(int power) const {
        return !c_.empty() && power >= offset_ && power <= highest_power();
    }

    // pre: has_coeff(power)
    const R& coeff(int power) const { return c_[static_cast<size_t>(power - offset_)]; }

    LaurentPoly operator+(const LaurentPoly& q) const {
        if (is_zero()) return q;
        if (q.is_zero()) return *this;
        const int lo = std::min(offset_, q.offset_);
        const int hi = std::max(highest_power(), q.highest_power());
        std::vector<R> r;
        r.reserve(static_cast<size_t>(hi - lo + 1));
        for (int k = lo; k <= hi; ++k) {
            if (has_coeff(k) && q.has_coeff(k))
                r.push_back(coeff(k) + q.coeff(k));
            else if (has_coeff(k))
                r.push_back(coeff(k));
            else if (q.has_coeff(k))
                r.push_back(q.coeff(k));
            else
                r.push_back(zero_coeff());
        }
        return LaurentPoly(lo, std::move(r));
    }

    LaurentPoly operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(-v);
        return LaurentPoly(offset_, std::move(r));
    }

    LaurentPoly operator-(const LaurentPoly& q) const { return *this + (-q); }

    LaurentPoly operator*(const LaurentPoly& q) const {
        if (is_zero() || q.is_zero()) return zero();
        std::vector<R> r(c_.size() + q.c_.size() - 1, ring_traits<R>::zero_like(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * q.c_[j];
        return LaurentPoly(offset_ + q.offset_, std::move(r));
    }

    LaurentPoly operator*(const R& s) const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v * s);
        return LaurentPoly(offset_, std::move(r));
    }

    bool operator==(const LaurentPoly& q) const {
        if (is_zero() || q.is_zero()) return is_zero() && q.is_zero();
        if (offset_ != q.offset_ || c_.size() != q.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!ring_traits<R>::equal(c_[i], q.c_[i])) return false;
        return true;
    }

    bool operator!=(const LaurentPoly& q) const { return !(*this == q); }

    // shift so the lowest stored power becomes 0
    LaurentPoly normalized() const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.offset_ = 0;
        return p;
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.offset_ += k;
        return p;
    }

private:
    R zero_coeff() const { return ring_traits<R>::zero_like(c_.front()); }

    void trim() {
        while (!c_.empty() && ring_traits<R>::is_zero(c_.back())) c_.pop_back();
        size_t drop = 0;
        while (drop < c_.size() && ring_traits<R>::is_zero(c_[drop])) ++drop;
        if (drop > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
            offset_ += static_cast<int>(drop);
        }
        if (c_.empty()) offset_ = 0;
    }

    int offset_ = 0;
    std::vector<R> c_;
};

template <class R>
struct ring_traits<LaurentPoly<R>> {
    static LaurentPoly<R> zero_like(const LaurentPoly<R>&) { return LaurentPoly<R>::zero(); }
    static bool is_zero(const LaurentPoly<R>& v) { return v.is_zero(); }
    static bool equal(const LaurentPoly<R>& x, const LaurentPoly<R>& y) { return x == y; }
};

// Exact quotient by a divisor whose leading coefficient is invertible (here
// always t^2 - 2t + 1).  Throws NonExactDivision on a nonzero remainder.
template <class R>
LaurentPoly<R> laurent_divexact(const LaurentPoly<R>& p, const LaurentPoly<R>& d) {
    using T = ring_traits<R>;
    if (d.is_zero()) throw DivisionByZeroPoly();
    if (p.is_zero()) return LaurentPoly<R>::zero();

    const R lead_inv = T::inv(d.coeff(d.highest_power()));
    LaurentPoly<R> rem = p;
    LaurentPoly<R> quot = LaurentPoly<R>::zero();
    while (!rem.is_zero() &&
           rem.highest_power() - rem.lowest_power() >= d.highest_power() - d.lowest_power()) {
        const int k = rem.highest_power() - d.highest_power();
        R c = rem.coeff(rem.highest_power()) * lead_inv;
        LaurentPoly<R> term = LaurentPoly<R>::monomial(k, c);
        quot = quot + term;
        rem = rem - d * term;  // top power cancels, width strictly shrinks
    }
    if (!rem.is_zero()) throw NonExactDivision();
    return quot;
}

}  // namespace twistknot
