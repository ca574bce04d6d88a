#include "twistknot/exactpoly.hpp"

#include <sstream>

namespace twistknot {

namespace {

template <class Coeff>
std::string render(const std::vector<Coeff>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const bool negative = c[i] < 0;
        Coeff mag = negative ? Coeff(-c[i]) : c[i];
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out << mag;
        } else {
            if (!unit) out << mag;
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace

template <>
std::string IntPolynomial::to_string(const std::string& var) const {
    return render(coeffs(), var);
}

template <>
std::string RatPolynomial::to_string(const std::string& var) const {
    return render(coeffs(), var);
}

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<mpq_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
    std::vector<mpz_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1)
            throw NonExactDivision("coefficient " + v.get_str() + " is not an integer");
        c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& p, const RatPolynomial& d) {
    if (d.is_zero()) throw DivisionByZeroPoly();
    const int dd = *d.degree();
    const mpq_class& lead = d.leading();
    RatPolynomial r = p;
    std::vector<mpq_class> q;
    if (!p.is_zero() && *p.degree() >= dd)
        q.assign(static_cast<size_t>(*p.degree() - dd) + 1, mpq_class(0));
    while (!r.is_zero() && *r.degree() >= dd) {
        const int k = *r.degree() - dd;
        mpq_class c = r.leading() / lead;
        q[static_cast<size_t>(k)] = c;
        r = r - d.shifted(k) * c;
    }
    return {RatPolynomial(std::move(q)), std::move(r)};
}

RatPolynomial divexact(const RatPolynomial& p, const RatPolynomial& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw NonExactDivision();
    return q;
}

RatPolynomial make_monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    mpq_class inv = 1 / p.leading();
    return p * inv;
}

RatPolynomial poly_gcd(const RatPolynomial& p, const RatPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    RatPolynomial a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = divmod(a, b);
        a = std::move(b);
        b = std::move(rem);
    }
    return make_monic(a);
}

ExtendedGcd ext_gcd(const RatPolynomial& p, const RatPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    RatPolynomial r0 = p, r1 = q;
    RatPolynomial s0 = RatPolynomial{1}, s1 = RatPolynomial::zero();
    RatPolynomial t0 = RatPolynomial::zero(), t1 = RatPolynomial{1};
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RatPolynomial s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        RatPolynomial t2 = t0 - quot * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // scale so the gcd comes out monic
    mpq_class inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_one(const RatPolynomial& p) {
    return p.degree() == 0 && p.leading() == 1;
}

}  // namespace twistknot
