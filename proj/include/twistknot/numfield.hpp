#pragma once

#include <memory>

#include "twistknot/exactpoly.hpp"

namespace twistknot {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/*
 * Exact arithmetic in Q[u]/(m(u)) for a fixed monic modulus m, the
 * coordinate field of a parabolic representation when m is the (rescaled)
 * Riley polynomial.  Elements are fully reduced residues; binary operations
 * demand the identical modulus and throw ModulusMismatch otherwise.
 */
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;

    const NumberFieldPtr& field() const { return field_; }
    const RatPolynomial& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }

    AlgebraicNumber operator+(const AlgebraicNumber& y) const;
    AlgebraicNumber operator-(const AlgebraicNumber& y) const;
    AlgebraicNumber operator*(const AlgebraicNumber& y) const;
    AlgebraicNumber operator-() const;

    // Extended-Euclidean inverse.  Throws ZeroInverse on zero and
    // ZeroDivisor when the residue shares a factor with the modulus.
    AlgebraicNumber inverse() const;

    bool operator==(const AlgebraicNumber& y) const;
    bool operator!=(const AlgebraicNumber& y) const { return !(*this == y); }

private:
    friend class NumberField;
    AlgebraicNumber(NumberFieldPtr field, RatPolynomial residue)
        : field_(std::move(field)), residue_(std::move(residue)) {}

    NumberFieldPtr field_;
    RatPolynomial residue_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // The modulus is rescaled to be monic; its roots are unchanged.
    static NumberFieldPtr create(const RatPolynomial& modulus);
    static NumberFieldPtr create(const IntPolynomial& modulus);

    const RatPolynomial& modulus() const { return modulus_; }
    int degree() const { return *modulus_.degree(); }

    AlgebraicNumber element(const RatPolynomial& value) const;
    AlgebraicNumber element(const IntPolynomial& value) const;
    AlgebraicNumber generator() const;  // the class of u
    AlgebraicNumber zero() const;
    AlgebraicNumber one() const;
    AlgebraicNumber from_int(long v) const;

private:
    explicit NumberField(RatPolynomial monic) : modulus_(std::move(monic)) {}

    RatPolynomial modulus_;
};

// true when both elements belong to fields with equal moduli
bool same_field(const AlgebraicNumber& x, const AlgebraicNumber& y);

}  // namespace twistknot
