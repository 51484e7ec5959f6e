#include "autstab/element.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "autstab/error.hpp"

namespace autstab {

int Monomial::total_degree() const {
    int d = 0;
    for (std::int32_t e : exponents) d += std::abs(e);
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](std::int32_t e) { return e == 0; });
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(),
                                        b.exponents.begin(), b.exponents.end());
}

Element::Element(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) fail(ErrorCode::SignatureMismatch, "element needs a signature");
}

Element Element::constant(SignaturePtr sig, const Scalar& c) {
    Element f(std::move(sig));
    Monomial unit{std::vector<std::int32_t>(static_cast<std::size_t>(f.sig_->generator_count()), 0)};
    f.add_term(unit, c);
    return f;
}

Element Element::one(SignaturePtr sig) {
    const Field field = sig->field();
    return constant(std::move(sig), Scalar::one(field));
}

Element Element::generator(SignaturePtr sig, int g) {
    if (g < 0 || g >= sig->generator_count()) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    Element f(sig);
    Monomial m{std::vector<std::int32_t>(static_cast<std::size_t>(sig->generator_count()), 0)};
    m.exponents[static_cast<std::size_t>(g)] = 1;
    f.add_term(m, Scalar::one(sig->field()));
    return f;
}

Element Element::monomial(SignaturePtr sig, Monomial m, const Scalar& c) {
    if (static_cast<int>(m.exponents.size()) != sig->generator_count()) {
        fail(ErrorCode::LengthMismatch, "monomial arity does not match signature");
    }
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (m.exponents[static_cast<std::size_t>(g)] < 0 && !sig->invertible(g)) {
            fail(ErrorCode::BadExponent,
                 "negative power of non-invertible generator " + sig->generator_name(g));
        }
    }
    Element f(std::move(sig));
    f.add_term(m, c);
    return f;
}

bool Element::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Scalar Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(sig_->field()) : it->second;
}

const Monomial& Element::leading_monomial() const {
    if (terms_.empty()) fail(ErrorCode::ZeroElement, "leading monomial of zero");
    return terms_.rbegin()->first;
}

const Scalar& Element::leading_coefficient() const {
    if (terms_.empty()) fail(ErrorCode::ZeroElement, "leading coefficient of zero");
    return terms_.rbegin()->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (!(c.field() == sig_->field())) {
        fail(ErrorCode::FieldMismatch, "coefficient field does not match the signature");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check_same_signature(const Element& rhs) const {
    if (sig_ == rhs.sig_) return;
    if (!(*sig_ == *rhs.sig_)) {
        fail(ErrorCode::SignatureMismatch,
             "operands over " + sig_->to_string() + " and " + rhs.sig_->to_string());
    }
}

Element Element::operator-() const {
    Element r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element& Element::operator+=(const Element& rhs) {
    check_same_signature(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    check_same_signature(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

// (-1)^k k! C(m,k) C(n,k): the reordering coefficient of one Weyl pair.
mpz_class reorder_factor(unsigned long m, unsigned long n, unsigned long k) {
    mpz_class f, b1, b2;
    mpz_fac_ui(f.get_mpz_t(), k);
    mpz_bin_uiui(b1.get_mpz_t(), m, k);
    mpz_bin_uiui(b2.get_mpz_t(), n, k);
    f *= b1;
    f *= b2;
    if (k % 2 == 1) f = -f;
    return f;
}

// Adds coeff * (a * b) to acc, normal-ordering across every Weyl pair where
// a contributes y-powers and b contributes x-powers.
void monomial_product_into(Element& acc, const AlgebraSignature& sig, const Monomial& a,
                           const Monomial& b, const Scalar& coeff) {
    const std::size_t n = a.exponents.size();
    Monomial base{std::vector<std::int32_t>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        base.exponents[i] = a.exponents[i] + b.exponents[i];
    }

    // Active pairs, identified by the storage index of x.
    std::vector<std::size_t> pair_x;
    if (!sig.is_commutative()) {
        for (std::size_t g = 0; g + 1 < n; ++g) {
            if (sig.is_weyl_x(static_cast<int>(g)) && a.exponents[g + 1] > 0 &&
                b.exponents[g] > 0) {
                pair_x.push_back(g);
            }
        }
    }
    if (pair_x.empty()) {
        acc.add_term(base, coeff);
        return;
    }

    std::vector<std::vector<mpz_class>> factors;
    for (std::size_t g : pair_x) {
        const auto m = static_cast<unsigned long>(a.exponents[g + 1]);
        const auto c = static_cast<unsigned long>(b.exponents[g]);
        std::vector<mpz_class> row;
        for (unsigned long k = 0; k <= std::min(m, c); ++k) row.push_back(reorder_factor(m, c, k));
        factors.push_back(std::move(row));
    }

    std::vector<std::size_t> k(pair_x.size(), 0);
    while (true) {
        mpz_class f = 1;
        for (std::size_t i = 0; i < pair_x.size(); ++i) f *= factors[i][k[i]];
        Monomial term = base;
        for (std::size_t i = 0; i < pair_x.size(); ++i) {
            term.exponents[pair_x[i]] -= static_cast<std::int32_t>(k[i]);
            term.exponents[pair_x[i] + 1] -= static_cast<std::int32_t>(k[i]);
        }
        acc.add_term(term, coeff * Scalar::from_mpq(coeff.field(), mpq_class(f)));

        std::size_t i = 0;
        while (i < k.size()) {
            if (++k[i] < factors[i].size()) break;
            k[i] = 0;
            ++i;
        }
        if (i == k.size()) break;
    }
}

}  // namespace

Element operator*(const Element& lhs, const Element& rhs) {
    lhs.check_same_signature(rhs);
    Element acc(lhs.signature());
    for (const auto& [ma, ca] : lhs.terms()) {
        for (const auto& [mb, cb] : rhs.terms()) {
            monomial_product_into(acc, *lhs.signature(), ma, mb, ca * cb);
        }
    }
    return acc;
}

Element& Element::operator*=(const Element& rhs) {
    *this = *this * rhs;
    return *this;
}

Element Element::pow(int exponent) const {
    if (exponent == 0) return one(sig_);
    if (exponent < 0) {
        if (terms_.size() != 1) {
            fail(ErrorCode::BadExponent, "negative power of a non-monomial element");
        }
        const auto& [m, c] = *terms_.begin();
        for (int g = 0; g < sig_->generator_count(); ++g) {
            if (m.exponents[static_cast<std::size_t>(g)] != 0 && !sig_->invertible(g)) {
                fail(ErrorCode::BadExponent,
                     "negative power involves non-invertible generator " + sig_->generator_name(g));
            }
        }
        Monomial inv = m;
        for (auto& e : inv.exponents) e = static_cast<std::int32_t>(e * exponent);
        return monomial(sig_, inv, c.pow(exponent));
    }
    Element acc = one(sig_);
    Element base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Element::operator==(const Element& rhs) const {
    check_same_signature(rhs);
    return terms_ == rhs.terms_;
}

std::optional<int> total_degree(const Element& f) {
    if (f.is_zero()) return std::nullopt;
    return f.terms().rbegin()->first.total_degree();
}

int partial_degree(const Element& f, int g) {
    if (f.is_zero()) fail(ErrorCode::ZeroElement, "partial degree of zero");
    if (g < 0 || g >= f.signature()->generator_count()) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    int best = f.terms().begin()->first.exponents[static_cast<std::size_t>(g)];
    for (const auto& [m, c] : f.terms()) {
        best = std::max(best, static_cast<int>(m.exponents[static_cast<std::size_t>(g)]));
    }
    return best;
}

Element combine(const std::vector<Scalar>& coeffs, const std::vector<Element>& elems) {
    if (coeffs.size() != elems.size()) {
        fail(ErrorCode::LengthMismatch, "combine with " + std::to_string(coeffs.size()) +
                                            " coefficients and " + std::to_string(elems.size()) +
                                            " elements");
    }
    if (elems.empty()) fail(ErrorCode::LengthMismatch, "combine needs at least one element");
    Element acc(elems.front().signature());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        acc += coeffs[i] * elems[i];
    }
    return acc;
}

Element commutator(const Element& f, const Element& g) {
    return f * g - g * f;
}

bool is_central(const Element& f) {
    const SignaturePtr& sig = f.signature();
    if (sig->is_commutative()) return true;
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (!commutator(f, Element::generator(sig, g)).is_zero()) return false;
    }
    return true;
}

std::string format_element(const Element& f);  // parser.cpp

std::ostream& operator<<(std::ostream& os, const Element& f) {
    return os << format_element(f);
}

}  // namespace autstab
