#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistknot/numfield.hpp"
#include "twistknot/ring.hpp"
#include "twistknot/twistcore.hpp"

namespace twistknot {

/*
 * Fox free differential calculus on the two-generator presentation
 * <x,y | w^q x w^-q y^-1> with w = y x^-1 y^-1 x, and Wada's determinant
 * quotient evaluated through a parabolic representation.  This route never
 * touches the closed-form coefficients, so it serves as an independent
 * oracle for them.
 */

enum class Gen : unsigned char { x = 0, y = 1 };

struct Letter {
    Gen gen;
    int exp;  // nonzero; adjacent letters always differ in generator

    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    auto operator<=>(const Letter& o) const = default;
};

// Freely reduced word in the free group on {x, y}.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord generator(Gen g, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    // total number of +-1 letters, i.e. sum of |exp|
    size_t letter_count() const;

    int exponent_sum(Gen g) const;
    int exponent_sum() const;  // over both generators

    void append(Gen g, int exp);  // reducing append

    FreeWord operator*(const FreeWord& w) const;
    FreeWord inverse() const;
    FreeWord pow(int k) const;

    bool operator==(const FreeWord& w) const { return letters_ == w.letters_; }
    auto operator<=>(const FreeWord& w) const { return letters_ <=> w.letters_; }

    std::string to_string() const;  // "y x^-1 y^-1 x"

private:
    std::vector<Letter> letters_;
};

// Formal Z-linear combination of free words, the codomain of the Fox
// derivative.  Terms with coefficient zero are removed.
class GroupRingElement {
public:
    GroupRingElement() = default;

    void add(const FreeWord& w, int coeff);

    const std::map<FreeWord, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int coeff(const FreeWord& w) const;

    GroupRingElement operator+(const GroupRingElement& e) const;
    GroupRingElement operator-(const GroupRingElement& e) const;

    // left translation w * (sum of terms)
    GroupRingElement left_mul(const FreeWord& w) const;

    bool operator==(const GroupRingElement& e) const { return terms_ == e.terms_; }

private:
    std::map<FreeWord, int> terms_;
};

// w = y x^-1 y^-1 x, the commutator [y, x^-1] with [a,b] = a b a^-1 b^-1.
FreeWord twist_word();

// Relator w^q x w^-q y^-1, freely reduced.  Throws InvalidQ for q = 0.
FreeWord relator(int q);

// Fox derivative with the rules d(uv) = du + u dv, dg/dg = 1,
// d(g^-1)/dg = -g^-1.
GroupRingElement fox_derivative(const FreeWord& w, Gen g);

/*
 * A representation of the free group into 2x2 matrices over a commutative
 * ring, together with the generator inverses.  Construction inverts the
 * generator images and throws SingularGenerator when one is singular.
 */
template <class R>
struct Rep2 {
    RingMatrix2<R> x, y, x_inv, y_inv;

    Rep2(const RingMatrix2<R>& mx, const RingMatrix2<R>& my)
        : x(mx), y(my), x_inv(mx.inverse()), y_inv(my.inverse()) {}

    // the parabolic pair [[1,1],[0,1]], [[1,0],[-u,1]]
    static Rep2 parabolic(const R& u) {
        using T = ring_traits<R>;
        const R zero = T::zero_like(u);
        const R one = T::one_like(u);
        return Rep2(RingMatrix2<R>(one, one, zero, one), RingMatrix2<R>(one, zero, -u, one));
    }

    const RingMatrix2<R>& image(Gen g, bool inverted) const {
        if (g == Gen::x) return inverted ? x_inv : x;
        return inverted ? y_inv : y;
    }
};

// Plain matrix image of a word (no t grading).
template <class R>
RingMatrix2<R> word_image(const FreeWord& w, const Rep2<R>& rep) {
    RingMatrix2<R> m = RingMatrix2<R>::identity_like(rep.x.a);
    for (const Letter& l : w.letters()) {
        const RingMatrix2<R>& step = rep.image(l.gen, l.exp < 0);
        for (int i = 0; i < std::abs(l.exp); ++i) m = m * step;
    }
    return m;
}

/*
 * Wada's grading: each generator is sent to t * rho(g), so a word of
 * exponent sum k evaluates to t^k times its matrix image.
 */
template <class R>
RingMatrix2<LaurentPoly<R>> evaluate(const FreeWord& w, const Rep2<R>& rep) {
    const RingMatrix2<R> m = word_image(w, rep);
    const int k = w.exponent_sum();
    using LP = LaurentPoly<R>;
    return RingMatrix2<LP>(LP::monomial(k, m.a), LP::monomial(k, m.b), LP::monomial(k, m.c),
                           LP::monomial(k, m.d));
}

template <class R>
RingMatrix2<LaurentPoly<R>> evaluate(const GroupRingElement& e, const Rep2<R>& rep) {
    using LP = LaurentPoly<R>;
    RingMatrix2<LP> acc(LP::zero(), LP::zero(), LP::zero(), LP::zero());
    for (const auto& [word, coeff] : e.terms()) {
        const RingMatrix2<R> m = word_image(word, rep);
        const int k = word.exponent_sum();
        const R sign = (coeff >= 0) ? ring_traits<R>::one_like(rep.x.a)
                                    : -ring_traits<R>::one_like(rep.x.a);
        R scale = sign;
        for (int i = 1; i < std::abs(coeff); ++i) scale = scale + sign;
        acc = acc + RingMatrix2<LP>(LP::monomial(k, m.a * scale), LP::monomial(k, m.b * scale),
                                    LP::monomial(k, m.c * scale), LP::monomial(k, m.d * scale));
    }
    return acc;
}

// t * rho(g) as a Laurent matrix, and the identity at t^0.
template <class R>
RingMatrix2<LaurentPoly<R>> graded_generator(Gen g, const Rep2<R>& rep) {
    return evaluate(FreeWord::generator(g), rep);
}

template <class R>
RingMatrix2<LaurentPoly<R>> graded_identity(const Rep2<R>& rep) {
    using LP = LaurentPoly<R>;
    using T = ring_traits<R>;
    const R zero = T::zero_like(rep.x.a);
    const R one = T::one_like(rep.x.a);
    return RingMatrix2<LP>(LP::monomial(0, one), LP::monomial(0, zero), LP::monomial(0, zero),
                           LP::monomial(0, one));
}

// true iff rho(w^q x) = rho(y w^q) holds exactly over u's field
bool relation_check(int q, const AlgebraicNumber& u);

/*
 * Wada's determinant quotient det Phi(dr/dx) / det Phi(y - 1) for the
 * relator of J(2,2q), normalized so the lowest t-power is 0.  The
 * denominator is (t-1)^2 because the parabolic y-image has trace 2.
 * Division must be exact; a nonzero remainder (a bug, or a u that is not a
 * root of the Riley polynomial) throws NonExactDivision.
 */
template <class R>
LaurentPoly<R> wada_polynomial(int q, const R& u) {
    if (q == 0) throw InvalidQ();
    const Rep2<R> rep = Rep2<R>::parabolic(u);
    const GroupRingElement dr = fox_derivative(relator(q), Gen::x);
    const LaurentPoly<R> numerator = evaluate(dr, rep).determinant();

    GroupRingElement y_minus_1;
    y_minus_1.add(FreeWord::generator(Gen::y), 1);
    y_minus_1.add(FreeWord(), -1);
    const LaurentPoly<R> denominator = evaluate(y_minus_1, rep).determinant();

    return laurent_divexact(numerator, denominator).normalized();
}

// Exact comparison of the Fox/Wada route with the closed-form triple
// (gamma, delta, gamma) over K_q = Q[u]/(phi_q), up to a unit +-t^k.
bool wada_matches_closed_form(int q);

}  // namespace twistknot
