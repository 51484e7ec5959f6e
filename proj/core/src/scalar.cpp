#include "autstab/scalar.hpp"

#include <ostream>

namespace autstab {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Field Field::prime(unsigned p) {
    if (!is_small_prime(p)) {
        fail(ErrorCode::BadFamilyParams, "field characteristic must be prime, got " + std::to_string(p));
    }
    return Field(p);
}

std::string Field::to_string() const {
    return p_ == 0 ? "q" : "f" + std::to_string(p_);
}

Field Field::from_string(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        unsigned long p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') {
                fail(ErrorCode::ParseError, "bad field name '" + text + "'");
            }
            p = p * 10 + static_cast<unsigned long>(text[i] - '0');
            if (p > 1u << 30) fail(ErrorCode::ParseError, "field characteristic too large");
        }
        return prime(static_cast<unsigned>(p));
    }
    fail(ErrorCode::ParseError, "bad field name '" + text + "' (expected \"q\" or \"f<p>\")");
}

Scalar::Scalar(const Field& field, long numerator, long denominator) : field_(field) {
    if (denominator == 0) fail(ErrorCode::DivisionByZero, "scalar with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
    normalize();
}

Scalar Scalar::from_mpq(const Field& field, const mpq_class& value) {
    Scalar s;
    s.field_ = field;
    s.value_ = value;
    s.value_.canonicalize();
    s.normalize();
    return s;
}

Scalar Scalar::from_string(const Field& field, const std::string& text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty scalar literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        fail(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
    }
    if (v.get_den() == 0) fail(ErrorCode::DivisionByZero, "scalar literal with zero denominator");
    return from_mpq(field, v);
}

void Scalar::normalize() {
    if (field_.is_rationals()) return;
    const unsigned long p = field_.characteristic();
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num_res = ((num % pz) + pz) % pz;
    if (den == 1) {
        value_ = mpq_class(num_res);
        return;
    }
    mpz_class den_res = ((den % pz) + pz) % pz;
    if (den_res == 0) fail(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den_res.get_mpz_t(), pz.get_mpz_t()) == 0) {
        fail(ErrorCode::DivisionByZero, "denominator not invertible modulo " + std::to_string(p));
    }
    value_ = mpq_class((num_res * inv) % pz);
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
        fail(ErrorCode::FieldMismatch,
             "scalars over " + field_.to_string() + " and " + rhs.field_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.value_ = -r.value_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    value_ += rhs.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    value_ -= rhs.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    value_ *= rhs.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero scalar");
    if (field_.is_rationals()) {
        value_ /= rhs.value_;
    } else {
        *this *= rhs.inverse();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar r = *this;
    if (field_.is_rationals()) {
        r.value_ = 1 / value_;
        return r;
    }
    const unsigned long p = field_.characteristic();
    mpz_class pz(p);
    mpz_class num = value_.get_num();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0) {
        fail(ErrorCode::DivisionByZero, "residue not invertible modulo " + std::to_string(p));
    }
    r.value_ = mpq_class(inv);
    return r;
}

Scalar Scalar::pow(long exponent) const {
    if (exponent == 0) return one(field_);
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long n = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                   : static_cast<unsigned long>(exponent);
    Scalar acc = one(field_);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return field_ == rhs.field_ && value_ == rhs.value_;
}

std::string Scalar::to_string() const {
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

}  // namespace autstab
