#pragma once

#include <stdexcept>
#include <string>

namespace twistknot {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// q = 0 presents the trivial knot and is rejected everywhere.
class InvalidQ : public Error {
public:
    InvalidQ() : Error("q must be a nonzero integer") {}
    explicit InvalidQ(const std::string& what) : Error(what) {}
};

class DivisionByZeroPoly : public Error {
public:
    DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

class NonExactDivision : public Error {
public:
    NonExactDivision() : Error("polynomial division left a nonzero remainder") {}
    explicit NonExactDivision(const std::string& what) : Error(what) {}
};

class BothZero : public Error {
public:
    BothZero() : Error("gcd(0, 0) is undefined") {}
};

// Negative power of an element whose norm is not a unit.
class NonUnit : public Error {
public:
    NonUnit() : Error("element is not a unit; negative power undefined") {}
};

class ModulusMismatch : public Error {
public:
    ModulusMismatch() : Error("operands live in different number fields") {}
};

class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("zero has no inverse") {}
};

// gcd(residue, modulus) != 1: the residue is a zero divisor.
class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("element is a zero divisor modulo the field polynomial") {}
};

class SingularGenerator : public Error {
public:
    SingularGenerator() : Error("generator matrix is not invertible") {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace twistknot
