#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "autstab/error.hpp"

namespace autstab {

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
// The characteristic is data, not a template parameter, so one binary handles
// every field and certificates can name their field at runtime.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(unsigned p);

    unsigned characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const Field&) const = default;

    // "q" for the rationals, "f<p>" for a prime field (e.g. "f2").
    std::string to_string() const;
    static Field from_string(const std::string& text);

private:
    explicit Field(unsigned p) : p_(p) {}
    unsigned p_;
};

// Exact field scalar. Over Q a reduced fraction; over F_p the canonical
// residue in [0, p), stored with denominator 1. All arithmetic is exact;
// mixing scalars from different fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : field_(), value_(0) {}
    Scalar(const Field& field, long numerator, long denominator = 1);

    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }
    static Scalar from_mpq(const Field& field, const mpq_class& value);
    // Parses "n" or "n/d" with optional leading '-'.
    static Scalar from_string(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    // Over Q: denominator 1. Over F_p: always true.
    bool is_integer() const { return value_.get_den() == 1; }
    // Sign as stored; over F_p residues are non-negative.
    int sign() const { return sgn(value_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // "0", "3", "-4/7"; over F_p always a bare residue like "5".
    std::string to_string() const;

private:
    void check_same_field(const Scalar& rhs) const;
    // Restores the canonical form after arithmetic (residue reduction in F_p).
    void normalize();

    Field field_;
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace autstab
