#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "twistknot/errors.hpp"

namespace twistknot {

/*
 * Dense univariate polynomials over an exact coefficient type (mpz_class for
 * Z[u], mpq_class for Q[u]).  Coefficients are stored in ascending degree
 * with no trailing zeros, so the zero polynomial is the empty vector and its
 * degree() is disengaged rather than any number.
 */
template <class Coeff>
class DensePolynomial {
public:
    DensePolynomial() = default;

    explicit DensePolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    DensePolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static DensePolynomial zero() { return DensePolynomial(); }

    static DensePolynomial constant(Coeff v) {
        DensePolynomial p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }

    // c * u^deg
    static DensePolynomial monomial(int deg, Coeff c = Coeff(1)) {
        DensePolynomial p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(deg) + 1, Coeff(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    // pre: nonzero
    const Coeff& leading() const { return c_.back(); }

    Coeff coeff(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Coeff(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Coeff>& coeffs() const { return c_; }

    DensePolynomial operator+(const DensePolynomial& q) const {
        const auto& a = c_;
        const auto& b = q.c_;
        std::vector<Coeff> r(std::max(a.size(), b.size()), Coeff(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return DensePolynomial(std::move(r));
    }

    DensePolynomial operator-() const {
        std::vector<Coeff> r(c_);
        for (auto& v : r) v = -v;
        DensePolynomial p;
        p.c_ = std::move(r);
        return p;
    }

    DensePolynomial operator-(const DensePolynomial& q) const { return *this + (-q); }

    DensePolynomial operator*(const DensePolynomial& q) const {
        if (is_zero() || q.is_zero()) return zero();
        std::vector<Coeff> r(c_.size() + q.c_.size() - 1, Coeff(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j)
                r[i + j] += c_[i] * q.c_[j];
        return DensePolynomial(std::move(r));
    }

    DensePolynomial operator*(const Coeff& s) const {
        std::vector<Coeff> r(c_);
        for (auto& v : r) v *= s;
        return DensePolynomial(std::move(r));
    }

    // p(u) * u^k
    DensePolynomial shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Coeff> r(static_cast<size_t>(k), Coeff(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return DensePolynomial(std::move(r));
    }

    bool operator==(const DensePolynomial& q) const { return c_ == q.c_; }
    bool operator!=(const DensePolynomial& q) const { return !(*this == q); }

    std::complex<double> eval_complex(std::complex<double> z) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + std::complex<double>(it->get_d(), 0.0);
        return acc;
    }

    // Ascending-degree rendering, e.g. "1 - 2u + u^2 - u^3".
    std::string to_string(const std::string& var = "u") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPolynomial = DensePolynomial<mpz_class>;
using RatPolynomial = DensePolynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);

// pre: every coefficient has denominator 1
IntPolynomial to_integer(const RatPolynomial& p);

// p = q*d + r with deg r < deg d; throws DivisionByZeroPoly.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& p, const RatPolynomial& d);

// Exact quotient; throws NonExactDivision when the remainder is nonzero.
RatPolynomial divexact(const RatPolynomial& p, const RatPolynomial& d);

// Monic gcd by the Euclidean algorithm; throws BothZero.
RatPolynomial poly_gcd(const RatPolynomial& p, const RatPolynomial& q);

// g = s*p + t*q with g the monic gcd.
struct ExtendedGcd {
    RatPolynomial g, s, t;
};
ExtendedGcd ext_gcd(const RatPolynomial& p, const RatPolynomial& q);

RatPolynomial make_monic(const RatPolynomial& p);

bool is_one(const RatPolynomial& p);

}  // namespace twistknot
