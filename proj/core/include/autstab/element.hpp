#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "autstab/signature.hpp"

namespace autstab {

// Exponent vector over a signature's generators, in storage order. Weyl
// monomials are normal forms: within each pair all x-powers precede all
// y-powers. Negative exponents are legal only for Laurent generators.
struct Monomial {
    std::vector<std::int32_t> exponents;

    // Sum of |e_i|; Laurent inverses count positively toward degree.
    int total_degree() const;
    bool is_unit() const;

    bool operator==(const Monomial&) const = default;
};

// Degree-lexicographic order: total degree first, then lexicographic on the
// exponent vector. The single term order used everywhere (term maps, display
// order, pivot selection), so canonical forms are canonical globally.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// An algebra element in normal form: a finite sum of distinct monomials with
// nonzero exact coefficients, tied to a shared signature. Arithmetic keeps the
// normal form; products across Weyl pairs are reordered via
//   y^b x^c = sum_k (-1)^k k! C(b,k) C(c,k) x^{c-k} y^{b-k}.
class Element {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

    explicit Element(SignaturePtr sig);

    static Element zero(SignaturePtr sig) { return Element(std::move(sig)); }
    static Element constant(SignaturePtr sig, const Scalar& c);
    static Element one(SignaturePtr sig);
    static Element generator(SignaturePtr sig, int g);
    static Element monomial(SignaturePtr sig, Monomial m, const Scalar& c);

    const SignaturePtr& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    // True when the element lies in the coefficient field (zero included).
    bool is_constant() const;
    // Zero scalar when the monomial is absent.
    Scalar coefficient(const Monomial& m) const;
    // Largest monomial and its coefficient; throws ZeroElement on zero.
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);
    Element& operator*=(const Scalar& c);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Element& lhs, const Element& rhs);
    friend Element operator*(const Scalar& c, Element f) { return f *= c; }
    friend Element operator*(Element f, const Scalar& c) { return f *= c; }

    // Non-negative exponents always work; negative ones require a single-term
    // monomial in invertible generators (throws BadExponent otherwise).
    Element pow(int exponent) const;

    bool operator==(const Element& rhs) const;
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    // Adds c * m, erasing the term if the sum vanishes.
    void add_term(const Monomial& m, const Scalar& c);

private:
    void check_same_signature(const Element& rhs) const;

    SignaturePtr sig_;
    TermMap terms_;
};

// Max total degree over the terms; nullopt plays the role of -infinity for
// the zero element.
std::optional<int> total_degree(const Element& f);

// Max exponent of generator g across terms; throws ZeroElement on zero input.
int partial_degree(const Element& f, int g);

// sum_i coeffs[i] * elems[i]; lists must be parallel and share one signature.
Element combine(const std::vector<Scalar>& coeffs, const std::vector<Element>& elems);

// f*g - g*f.
Element commutator(const Element& f, const Element& g);

// True when f commutes with every generator of its signature.
bool is_central(const Element& f);

std::ostream& operator<<(std::ostream& os, const Element& f);

}  // namespace autstab
