#include "twistknot/numfield.hpp"

namespace twistknot {

namespace {

void require_same_field(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (!same_field(x, y)) throw ModulusMismatch();
}

}  // namespace

bool same_field(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (!x.field() || !y.field()) return false;
    if (x.field() == y.field()) return true;
    return x.field()->modulus() == y.field()->modulus();
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& y) const {
    require_same_field(*this, y);
    return field_->element(residue_ + y.residue_);
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& y) const {
    require_same_field(*this, y);
    return field_->element(residue_ - y.residue_);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& y) const {
    require_same_field(*this, y);
    return field_->element(residue_ * y.residue_);
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    return field_->element(-residue_);
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw ZeroInverse();
    const ExtendedGcd e = ext_gcd(residue_, field_->modulus());
    if (e.g.degree() != 0) throw ZeroDivisor();
    // e.g is the monic gcd, i.e. the constant 1, so e.s * residue = 1 mod m.
    return field_->element(e.s);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& y) const {
    require_same_field(*this, y);
    return residue_ == y.residue_;
}

NumberFieldPtr NumberField::create(const RatPolynomial& modulus) {
    if (modulus.is_zero() || *modulus.degree() < 1)
        throw Error("number field modulus must have degree >= 1");
    return NumberFieldPtr(new NumberField(make_monic(modulus)));
}

NumberFieldPtr NumberField::create(const IntPolynomial& modulus) {
    return create(to_rational(modulus));
}

AlgebraicNumber NumberField::element(const RatPolynomial& value) const {
    RatPolynomial reduced = value;
    if (!reduced.is_zero() && *reduced.degree() >= *modulus_.degree())
        reduced = divmod(reduced, modulus_).second;
    return AlgebraicNumber(shared_from_this(), std::move(reduced));
}

AlgebraicNumber NumberField::element(const IntPolynomial& value) const {
    return element(to_rational(value));
}

AlgebraicNumber NumberField::generator() const {
    return element(RatPolynomial::monomial(1));
}

AlgebraicNumber NumberField::zero() const {
    return AlgebraicNumber(shared_from_this(), RatPolynomial::zero());
}

AlgebraicNumber NumberField::one() const { return from_int(1); }

AlgebraicNumber NumberField::from_int(long v) const {
    return element(RatPolynomial::constant(mpq_class(v)));
}

}  // namespace twistknot
