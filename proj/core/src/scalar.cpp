#include "grl/scalar.hpp"

#include <charconv>

namespace grl {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDesc FieldDesc::gfp(std::int64_t p) {
    if (p < 2 || p > (std::int64_t(1) << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) modulus must be prime and <= 2^31");
    return FieldDesc{Kind::Gfp, p};
}

std::string FieldDesc::to_string() const {
    return kind == Kind::Rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("not invertible mod p");
    return mod_norm(t, p);
}

}  // namespace

Scalar Scalar::zero(const FieldDesc& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldDesc& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldDesc& f, std::int64_t n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldDesc::Kind::Rational)
        s.rat_ = n;
    else
        s.res_ = mod_norm(n, f.p);
    return s;
}

Scalar Scalar::rational(BigRational r) {
    Scalar s;
    s.field_ = FieldDesc::rational();
    s.rat_ = std::move(r);
    return s;
}

Scalar Scalar::gfp(std::int64_t residue, std::int64_t p) {
    return from_int(FieldDesc::gfp(p), residue);
}

bool Scalar::is_zero() const {
    return field_.kind == FieldDesc::Kind::Rational ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldDesc::Kind::Rational ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.field_ = field_;
    if (field_.kind == FieldDesc::Kind::Rational)
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = mod_norm(res_ + o.res_, field_.p);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.field_ = field_;
    if (field_.kind == FieldDesc::Kind::Rational)
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = mod_norm(res_ - o.res_, field_.p);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.field_ = field_;
    if (field_.kind == FieldDesc::Kind::Rational)
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = static_cast<std::int64_t>(
            (static_cast<__int128>(res_) * o.res_) % field_.p);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    return zero(field_) - *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    Scalar r;
    r.field_ = field_;
    if (field_.kind == FieldDesc::Kind::Rational)
        r.rat_ = 1 / rat_;
    else
        r.res_ = mod_inv(res_, field_.p);
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldDesc::Kind::Rational ? rat_ == o.rat_
                                                    : res_ == o.res_;
}

std::string Scalar::to_string() const {
    if (field_.kind == FieldDesc::Kind::Gfp)
        return std::to_string(res_) + " mod " + std::to_string(field_.p);
    if (denominator(rat_) == 1) return numerator(rat_).str();
    return numerator(rat_).str() + "/" + denominator(rat_).str();
}

Scalar Scalar::parse(const FieldDesc& f, const std::string& text) {
    if (f.kind == FieldDesc::Kind::Gfp) {
        auto pos = text.find(" mod ");
        std::int64_t r = 0;
        std::string num = pos == std::string::npos ? text : text.substr(0, pos);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw std::invalid_argument("bad GF(p) scalar: " + text);
        if (pos != std::string::npos) {
            std::int64_t p = std::stoll(text.substr(pos + 5));
            if (p != f.p) throw FieldMismatch();
        }
        return from_int(f, r);
    }
    auto slash = text.find('/');
    boost::multiprecision::cpp_int num(slash == std::string::npos
                                           ? text
                                           : text.substr(0, slash));
    boost::multiprecision::cpp_int den =
        slash == std::string::npos
            ? boost::multiprecision::cpp_int(1)
            : boost::multiprecision::cpp_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(BigRational(num, den));
}

}  // namespace grl
