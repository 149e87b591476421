#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grl {

using BigRational = boost::multiprecision::cpp_rational;

// Description of the ground field: arbitrary-precision rationals or GF(p)
// with p prime, p <= 2^31.
struct FieldDesc {
    enum class Kind { Rational, Gfp };

    Kind kind = Kind::Rational;
    std::int64_t p = 0;  // modulus, meaningful for Gfp only

    static FieldDesc rational() { return FieldDesc{Kind::Rational, 0}; }
    static FieldDesc gfp(std::int64_t p);

    bool operator==(const FieldDesc&) const = default;

    bool is_finite() const { return kind == Kind::Gfp; }
    std::string to_string() const;
};

bool is_prime(std::int64_t n);

class FieldMismatch : public std::invalid_argument {
  public:
    FieldMismatch() : std::invalid_argument("scalar field descriptors differ") {}
};

// Exact scalar: a rational in lowest terms or a residue mod p.
// All arithmetic requires both operands to share the field descriptor.
class Scalar {
  public:
    Scalar() = default;  // rational zero

    static Scalar zero(const FieldDesc& f);
    static Scalar one(const FieldDesc& f);
    static Scalar from_int(const FieldDesc& f, std::int64_t n);
    static Scalar rational(BigRational r);
    static Scalar gfp(std::int64_t residue, std::int64_t p);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rationals print as "num/den" ("num" when den == 1), GF(p) as "r mod p".
    std::string to_string() const;
    static Scalar parse(const FieldDesc& f, const std::string& text);

    const BigRational& rat_value() const { return rat_; }
    std::int64_t residue() const { return res_; }

  private:
    FieldDesc field_;
    BigRational rat_;
    std::int64_t res_ = 0;

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
};

}  // namespace grl
