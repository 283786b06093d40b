#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfo {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// ---- field construction ----

class NotPrime : public Error {
public:
    explicit NotPrime(std::int64_t p) : Error("not a prime: " + std::to_string(p)) {}
};

class MissingPoly : public Error {
public:
    MissingPoly() : Error("extension degree > 1 requires a modulus polynomial") {}
};

class SpuriousPoly : public Error {
public:
    SpuriousPoly() : Error("prime field (degree 1) must not carry a modulus polynomial") {}
};

class PolyNotIrreducible : public Error {
public:
    explicit PolyNotIrreducible(const std::string& detail)
        : Error("modulus polynomial is reducible: " + detail) {}
};

class PolyNotPrimitive : public Error {
public:
    explicit PolyNotPrimitive(const std::string& detail)
        : Error("modulus polynomial is not primitive: " + detail) {}
};

// ---- element / matrix arithmetic ----

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class DimMismatch : public Error {
public:
    explicit DimMismatch(const std::string& detail) : Error("dimension mismatch: " + detail) {}
};

class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

// ---- constructions ----

class BadExponent : public Error {
public:
    BadExponent(std::int64_t t, std::int64_t q)
        : Error("exponent t=" + std::to_string(t) + " out of range: need 1 <= t and 2t <= q-2 (q=" +
                std::to_string(q) + ")") {}
};

class ExponentPairTooLarge : public Error {
public:
    ExponentPairTooLarge(std::int64_t t1, std::int64_t t2, std::int64_t q)
        : Error("exponent pair (" + std::to_string(t1) + ", " + std::to_string(t2) +
                ") too large: need t1+t2 <= q-2 (q=" + std::to_string(q) + ")") {}
};

class ZeroScale : public Error {
public:
    ZeroScale() : Error("scale r must be nonzero") {}
};

class NoAntiRoot : public Error {
public:
    explicit NoAntiRoot(const std::string& field_desc)
        : Error("-1 is not a quadratic residue in " + field_desc) {}
};

class NotPowerOfTwo : public Error {
public:
    explicit NotPowerOfTwo(std::int64_t m)
        : Error("Sylvester order must be a power of two >= 2, got " + std::to_string(m)) {}
};

class NotHadamard : public Error {
public:
    explicit NotHadamard(const std::string& detail) : Error("not a Hadamard matrix: " + detail) {}
};

class NotWeighted : public Error {
public:
    explicit NotWeighted(const std::string& detail)
        : Error("matrix has no scalar Gram (not weighted orthogonal): " + detail) {}
};

// ---- codecs / text formats ----

class ParseError : public Error {
public:
    ParseError(const std::string& detail, std::int64_t line, std::int64_t column)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + detail),
          line_(line),
          column_(column) {}

    std::int64_t line() const { return line_; }
    std::int64_t column() const { return column_; }

private:
    std::int64_t line_;
    std::int64_t column_;
};

class SymbolOutOfRange : public Error {
public:
    SymbolOutOfRange(unsigned byte, std::size_t offset, std::int64_t q)
        : Error("symbol value " + std::to_string(byte) + " at offset " + std::to_string(offset) +
                " does not fit in a field of order " + std::to_string(q) +
                "; pick a field of order > " + std::to_string(byte) +
                " (p=257 covers every byte value)") {}
};

}  // namespace gfo
