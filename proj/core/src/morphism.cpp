#include "autstab/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "autstab/error.hpp"
#include "autstab/linalg.hpp"
#include "autstab/parser.hpp"

namespace autstab {

namespace {

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::missing_image: return "MissingImage";
        case ViolationKind::relation_violated: return "RelationViolated";
        case ViolationKind::non_unit_image: return "NonUnitImage";
        case ViolationKind::inverse_fails: return "InverseFails";
    }
    return "?";
}

// Substitutes images through f, multiplying in storage order. Power tables
// are grown lazily; negative exponents fall back to Element::pow.
Element substitute(const SignaturePtr& sig, const std::vector<Element>& images, const Element& f) {
    const int n = sig->generator_count();
    std::vector<std::vector<Element>> powers(static_cast<std::size_t>(n));
    auto power = [&](int g, std::int32_t e) -> Element {
        if (e < 0) return images[static_cast<std::size_t>(g)].pow(e);
        auto& table = powers[static_cast<std::size_t>(g)];
        if (table.empty()) table.push_back(Element::one(sig));
        while (static_cast<std::int32_t>(table.size()) <= e) {
            table.push_back(table.back() * images[static_cast<std::size_t>(g)]);
        }
        return table[static_cast<std::size_t>(e)];
    };
    Element acc(sig);
    for (const auto& [m, c] : f.terms()) {
        Element prod = Element::constant(sig, c);
        for (int g = 0; g < n; ++g) {
            const std::int32_t e = m.exponents[static_cast<std::size_t>(g)];
            if (e != 0) prod *= power(g, e);
        }
        acc += prod;
    }
    return acc;
}

bool is_unit_monomial(const SignaturePtr& sig, const Element& f) {
    if (f.term_count() != 1) return false;
    const Monomial& m = f.terms().begin()->first;
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (m.exponents[static_cast<std::size_t>(g)] != 0 && !sig->invertible(g)) return false;
    }
    return true;
}

}  // namespace

std::string ValidationReport::to_string() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) os << "; ";
        const Violation& v = violations[i];
        os << violation_kind_name(v.kind);
        if (v.generator_a >= 0) {
            os << "(g" << v.generator_a;
            if (v.generator_b >= 0) os << ",g" << v.generator_b;
            os << ")";
        }
        if (!v.detail.empty()) os << ": " << v.detail;
    }
    return os.str();
}

EndoMap::EndoMap(std::string name, SignaturePtr sig, std::vector<Element> images,
                 std::optional<std::vector<Element>> inverse_images)
    : name_(std::move(name)), sig_(std::move(sig)) {
    if (!sig_) fail(ErrorCode::SignatureMismatch, "map needs a signature");
    if (static_cast<int>(images.size()) != sig_->generator_count()) {
        fail(ErrorCode::LengthMismatch, "expected " + std::to_string(sig_->generator_count()) +
                                            " images, got " + std::to_string(images.size()));
    }
    for (const Element& img : images) {
        if (!(*img.signature() == *sig_)) {
            fail(ErrorCode::SignatureMismatch, "image over a different signature");
        }
        images_.emplace_back(img);
    }
    if (inverse_images) {
        if (inverse_images->size() != images_.size()) {
            fail(ErrorCode::LengthMismatch, "inverse image count mismatch");
        }
        for (const Element& img : *inverse_images) {
            if (!(*img.signature() == *sig_)) {
                fail(ErrorCode::SignatureMismatch, "inverse image over a different signature");
            }
        }
        inverse_ = std::move(*inverse_images);
    }
}

EndoMap EndoMap::partial(std::string name, SignaturePtr sig,
                         std::vector<std::optional<Element>> images) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "map needs a signature");
    if (static_cast<int>(images.size()) != sig->generator_count()) {
        fail(ErrorCode::LengthMismatch, "expected " + std::to_string(sig->generator_count()) +
                                            " images, got " + std::to_string(images.size()));
    }
    EndoMap m;
    m.name_ = std::move(name);
    m.sig_ = std::move(sig);
    for (auto& img : images) {
        if (img && !(*img->signature() == *m.sig_)) {
            fail(ErrorCode::SignatureMismatch, "image over a different signature");
        }
        m.images_.push_back(std::move(img));
    }
    return m;
}

bool EndoMap::has_image(int g) const {
    if (g < 0 || g >= static_cast<int>(images_.size())) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    return images_[static_cast<std::size_t>(g)].has_value();
}

const Element& EndoMap::image(int g) const {
    if (!has_image(g)) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g) + " has no image");
    }
    return *images_[static_cast<std::size_t>(g)];
}

const std::vector<Element>& EndoMap::inverse_images() const {
    if (!inverse_) fail(ErrorCode::IndexOutOfRange, "map '" + name_ + "' carries no inverse");
    return *inverse_;
}

const ValidationReport& EndoMap::validate() const {
    if (report_) return *report_;
    ValidationReport rep;
    const int n = sig_->generator_count();
    bool complete = true;
    for (int g = 0; g < n; ++g) {
        if (!images_[static_cast<std::size_t>(g)]) {
            rep.violations.push_back({ViolationKind::missing_image, g, -1,
                                      "no image for " + sig_->generator_name(g)});
            complete = false;
        }
    }

    bool units_ok = true;
    for (int g = 0; g < n; ++g) {
        if (!sig_->invertible(g) || !images_[static_cast<std::size_t>(g)]) continue;
        if (!is_unit_monomial(sig_, *images_[static_cast<std::size_t>(g)])) {
            rep.violations.push_back({ViolationKind::non_unit_image, g, -1,
                                      sig_->generator_name(g) + " maps to a non-unit"});
            units_ok = false;
        }
    }

    const bool commutative = sig_->is_commutative();
    for (int g = 0; g < n; ++g) {
        if (!images_[static_cast<std::size_t>(g)]) continue;
        for (int h = g + 1; h < n; ++h) {
            if (!images_[static_cast<std::size_t>(h)]) continue;
            Element residual = commutator(*images_[static_cast<std::size_t>(g)],
                                          *images_[static_cast<std::size_t>(h)]);
            if (!commutative && sig_->is_weyl_x(g) && sig_->weyl_partner(g) == h) {
                residual -= Element::one(sig_);
            }
            if (!residual.is_zero()) {
                rep.violations.push_back({ViolationKind::relation_violated, g, h,
                                          "[" + sig_->generator_name(g) + " image, " +
                                              sig_->generator_name(h) +
                                              " image] residual: " + format_element(residual)});
            }
        }
    }

    if (inverse_ && complete && units_ok && rep.ok()) {
        std::vector<Element> fwd;
        fwd.reserve(images_.size());
        for (const auto& img : images_) fwd.push_back(*img);
        for (int g = 0; g < n; ++g) {
            try {
                Element back = substitute(sig_, *inverse_, fwd[static_cast<std::size_t>(g)]);
                Element forth = substitute(sig_, fwd, (*inverse_)[static_cast<std::size_t>(g)]);
                const Element gen = Element::generator(sig_, g);
                if (back != gen || forth != gen) {
                    rep.violations.push_back({ViolationKind::inverse_fails, g, -1,
                                              "inverse does not restore " + sig_->generator_name(g)});
                }
            } catch (const Error& e) {
                rep.violations.push_back({ViolationKind::inverse_fails, g, -1, e.what()});
            }
        }
    }

    report_ = std::move(rep);
    return *report_;
}

bool EndoMap::validated_ok() const {
    return validate().ok();
}

Element apply_endomorphism(const EndoMap& m, const Element& f) {
    if (!(*f.signature() == *m.signature())) {
        fail(ErrorCode::SignatureMismatch, "element over a different signature");
    }
    const ValidationReport& rep = m.validate();
    if (!rep.ok()) {
        fail(ErrorCode::UnvalidatedMap, "map '" + m.name() + "': " + rep.to_string());
    }
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(m.signature()->generator_count()));
    for (int g = 0; g < m.signature()->generator_count(); ++g) images.push_back(m.image(g));
    return substitute(m.signature(), images, f);
}

Element difference(const EndoMap& m, const Element& f) {
    return apply_endomorphism(m, f) - f;
}

namespace {

std::vector<Element> identity_images(const SignaturePtr& sig) {
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(sig->generator_count()));
    for (int g = 0; g < sig->generator_count(); ++g) {
        images.push_back(Element::generator(sig, g));
    }
    return images;
}

void check_atom(const SignaturePtr& sig, int atom, std::optional<AtomKind> want) {
    if (atom < 0 || atom >= static_cast<int>(sig->atoms().size())) {
        fail(ErrorCode::IndexOutOfRange, "atom " + std::to_string(atom));
    }
    if (want && sig->atoms()[static_cast<std::size_t>(atom)].kind != *want) {
        fail(ErrorCode::BadFamilyParams, "family targets the wrong atom kind");
    }
}

void check_pair(const SignaturePtr& sig, int atom, int pair) {
    check_atom(sig, atom, AtomKind::weyl);
    if (pair < 0 || pair >= sig->atoms()[static_cast<std::size_t>(atom)].size) {
        fail(ErrorCode::IndexOutOfRange, "pair " + std::to_string(pair));
    }
}

void check_scalar_field(const SignaturePtr& sig, const Scalar& c) {
    if (!(c.field() == sig->field())) {
        fail(ErrorCode::FieldMismatch, "parameter scalar over the wrong field");
    }
}

struct FamilyBuild {
    std::string name;
    std::vector<Element> images;
    std::vector<Element> inverse;
};

FamilyBuild build_shift(const SignaturePtr& sig, const ShiftParams& p) {
    const int g = p.generator;
    if (g < 0 || g >= sig->generator_count()) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    if (sig->invertible(g)) {
        fail(ErrorCode::BadFamilyParams, "shift of invertible generator " + sig->generator_name(g));
    }
    check_scalar_field(sig, p.amount);
    FamilyBuild b{"shift(" + sig->generator_name(g) + "," + p.amount.to_string() + ")",
                  identity_images(sig), identity_images(sig)};
    b.images[static_cast<std::size_t>(g)] += Element::constant(sig, p.amount);
    b.inverse[static_cast<std::size_t>(g)] -= Element::constant(sig, p.amount);
    return b;
}

FamilyBuild build_linear(const SignaturePtr& sig, const LinearParams& p) {
    check_atom(sig, p.atom, AtomKind::polynomial);
    const int m = sig->atoms()[static_cast<std::size_t>(p.atom)].size;
    const int off = sig->atom_offset(p.atom);
    if (static_cast<int>(p.matrix.size()) != m) {
        fail(ErrorCode::LengthMismatch, "matrix size does not match atom");
    }
    for (const auto& row : p.matrix) {
        if (static_cast<int>(row.size()) != m) {
            fail(ErrorCode::LengthMismatch, "matrix is not square");
        }
        for (const Scalar& c : row) check_scalar_field(sig, c);
    }
    std::vector<Scalar> t = p.translate;
    if (t.empty()) t.assign(static_cast<std::size_t>(m), Scalar::zero(sig->field()));
    if (static_cast<int>(t.size()) != m) {
        fail(ErrorCode::LengthMismatch, "translation size does not match atom");
    }
    for (const Scalar& c : t) check_scalar_field(sig, c);

    const auto inv = invert_matrix(sig->field(), p.matrix);

    FamilyBuild b{"linear(atom " + std::to_string(p.atom) + ")", identity_images(sig),
                  identity_images(sig)};
    for (int i = 0; i < m; ++i) {
        Element img(sig);
        Element back(sig);
        Scalar back_const = Scalar::zero(sig->field());
        for (int j = 0; j < m; ++j) {
            img += p.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   Element::generator(sig, off + j);
            back += inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                    Element::generator(sig, off + j);
            back_const -= inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                          t[static_cast<std::size_t>(j)];
        }
        img += Element::constant(sig, t[static_cast<std::size_t>(i)]);
        back += Element::constant(sig, back_const);
        b.images[static_cast<std::size_t>(off + i)] = img;
        b.inverse[static_cast<std::size_t>(off + i)] = back;
    }
    return b;
}

FamilyBuild build_scaling(const SignaturePtr& sig, const ScalingParams& p) {
    const int g = p.generator;
    if (g < 0 || g >= sig->generator_count()) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    if (sig->weyl_partner(g) >= 0) {
        fail(ErrorCode::BadFamilyParams, "scaling targets a commutative generator; use weyl-scaling");
    }
    check_scalar_field(sig, p.factor);
    if (p.factor.is_zero()) fail(ErrorCode::SingularMatrix, "scaling factor is zero");
    FamilyBuild b{"scaling(" + sig->generator_name(g) + "," + p.factor.to_string() + ")",
                  identity_images(sig), identity_images(sig)};
    b.images[static_cast<std::size_t>(g)] *= p.factor;
    b.inverse[static_cast<std::size_t>(g)] *= p.factor.inverse();
    return b;
}

FamilyBuild build_permutation(const SignaturePtr& sig, const PermutationParams& p) {
    check_atom(sig, p.atom, std::nullopt);
    const Atom& atom = sig->atoms()[static_cast<std::size_t>(p.atom)];
    const int off = sig->atom_offset(p.atom);
    const int k = atom.size;
    if (static_cast<int>(p.perm.size()) != k) {
        fail(ErrorCode::LengthMismatch, "permutation length does not match atom");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : p.perm) {
        if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) {
            fail(ErrorCode::BadPermutation, "not a permutation of the atom's indices");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> inv_perm(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) inv_perm[static_cast<std::size_t>(p.perm[static_cast<std::size_t>(j)])] = j;

    FamilyBuild b{"permutation(atom " + std::to_string(p.atom) + ")", identity_images(sig),
                  identity_images(sig)};
    const bool weyl = atom.kind == AtomKind::weyl;
    for (int j = 0; j < k; ++j) {
        const int pj = p.perm[static_cast<std::size_t>(j)];
        const int qj = inv_perm[static_cast<std::size_t>(j)];
        if (weyl) {
            b.images[static_cast<std::size_t>(off + 2 * j)] = Element::generator(sig, off + 2 * pj);
            b.images[static_cast<std::size_t>(off + 2 * j + 1)] =
                Element::generator(sig, off + 2 * pj + 1);
            b.inverse[static_cast<std::size_t>(off + 2 * j)] = Element::generator(sig, off + 2 * qj);
            b.inverse[static_cast<std::size_t>(off + 2 * j + 1)] =
                Element::generator(sig, off + 2 * qj + 1);
        } else {
            b.images[static_cast<std::size_t>(off + j)] = Element::generator(sig, off + pj);
            b.inverse[static_cast<std::size_t>(off + j)] = Element::generator(sig, off + qj);
        }
    }
    return b;
}

FamilyBuild build_weyl_scaling(const SignaturePtr& sig, const WeylScalingParams& p) {
    check_pair(sig, p.atom, p.pair);
    check_scalar_field(sig, p.factor);
    if (p.factor.is_zero()) fail(ErrorCode::SingularMatrix, "scaling factor is zero");
    const int x = sig->atom_offset(p.atom) + 2 * p.pair;
    FamilyBuild b{"weyl-scaling(" + sig->generator_name(x) + "," + p.factor.to_string() + ")",
                  identity_images(sig), identity_images(sig)};
    const Scalar inv = p.factor.inverse();
    b.images[static_cast<std::size_t>(x)] *= p.factor;
    b.images[static_cast<std::size_t>(x + 1)] *= inv;
    b.inverse[static_cast<std::size_t>(x)] *= inv;
    b.inverse[static_cast<std::size_t>(x + 1)] *= p.factor;
    return b;
}

FamilyBuild build_weyl_linear(const SignaturePtr& sig, const WeylLinearParams& p) {
    check_atom(sig, p.atom, AtomKind::weyl);
    const int n = sig->atoms()[static_cast<std::size_t>(p.atom)].size;
    const int off = sig->atom_offset(p.atom);
    if (static_cast<int>(p.matrix.size()) != n) {
        fail(ErrorCode::LengthMismatch, "matrix size does not match atom");
    }
    for (const auto& row : p.matrix) {
        if (static_cast<int>(row.size()) != n) {
            fail(ErrorCode::LengthMismatch, "matrix is not square");
        }
        for (const Scalar& c : row) check_scalar_field(sig, c);
    }
    const auto minv = invert_matrix(sig->field(), p.matrix);

    // x -> M x preserves the relations iff y -> N y with N = (M^{-1})^T.
    auto transpose = [n](const std::vector<std::vector<Scalar>>& m) {
        std::vector<std::vector<Scalar>> t(static_cast<std::size_t>(n),
                                           std::vector<Scalar>(static_cast<std::size_t>(n),
                                                               m[0][0]));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        return t;
    };
    const auto nmat = transpose(minv);
    const auto mt = transpose(p.matrix);

    FamilyBuild b{"weyl-linear(atom " + std::to_string(p.atom) + ")", identity_images(sig),
                  identity_images(sig)};
    for (int i = 0; i < n; ++i) {
        Element xi(sig), yi(sig), xi_back(sig), yi_back(sig);
        for (int j = 0; j < n; ++j) {
            xi += p.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                  Element::generator(sig, off + 2 * j);
            yi += nmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                  Element::generator(sig, off + 2 * j + 1);
            xi_back += minv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       Element::generator(sig, off + 2 * j);
            yi_back += mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       Element::generator(sig, off + 2 * j + 1);
        }
        b.images[static_cast<std::size_t>(off + 2 * i)] = xi;
        b.images[static_cast<std::size_t>(off + 2 * i + 1)] = yi;
        b.inverse[static_cast<std::size_t>(off + 2 * i)] = xi_back;
        b.inverse[static_cast<std::size_t>(off + 2 * i + 1)] = yi_back;
    }
    return b;
}

FamilyBuild build_weyl_swap(const SignaturePtr& sig, const WeylSwapParams& p) {
    check_pair(sig, p.atom, p.pair);
    const int x = sig->atom_offset(p.atom) + 2 * p.pair;
    FamilyBuild b{"weyl-swap(" + sig->generator_name(x) + ")", identity_images(sig),
                  identity_images(sig)};
    b.images[static_cast<std::size_t>(x)] = Element::generator(sig, x + 1);
    b.images[static_cast<std::size_t>(x + 1)] = -Element::generator(sig, x);
    b.inverse[static_cast<std::size_t>(x)] = -Element::generator(sig, x + 1);
    b.inverse[static_cast<std::size_t>(x + 1)] = Element::generator(sig, x);
    return b;
}

Element polynomial_in(const SignaturePtr& sig, int g, const std::vector<Scalar>& coeffs) {
    Element h(sig);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial m{std::vector<std::int32_t>(static_cast<std::size_t>(sig->generator_count()), 0)};
        m.exponents[static_cast<std::size_t>(g)] = static_cast<std::int32_t>(k);
        h.add_term(m, coeffs[k]);
    }
    return h;
}

FamilyBuild build_alpha(const SignaturePtr& sig, const AlphaParams& p) {
    check_pair(sig, p.atom, p.pair);
    for (const Scalar& c : p.h_coeffs) check_scalar_field(sig, c);
    const int x = sig->atom_offset(p.atom) + 2 * p.pair;
    const Element h = polynomial_in(sig, x, p.h_coeffs);
    FamilyBuild b{"alpha(" + sig->generator_name(x + 1) + "," + format_element(h) + ")",
                  identity_images(sig), identity_images(sig)};
    b.images[static_cast<std::size_t>(x + 1)] += h;
    b.inverse[static_cast<std::size_t>(x + 1)] -= h;
    return b;
}

FamilyBuild build_beta(const SignaturePtr& sig, const BetaParams& p) {
    check_pair(sig, p.atom, p.pair);
    check_scalar_field(sig, p.c);
    const int x = sig->atom_offset(p.atom) + 2 * p.pair;
    FamilyBuild b{"beta(" + sig->generator_name(x) + "," + p.c.to_string() + ")",
                  identity_images(sig), identity_images(sig)};
    b.images[static_cast<std::size_t>(x)] += p.c * Element::generator(sig, x + 1);
    b.inverse[static_cast<std::size_t>(x)] -= p.c * Element::generator(sig, x + 1);
    return b;
}

FamilyBuild build_triangular(const SignaturePtr& sig, const TriangularParams& p) {
    const int g = p.generator;
    if (g < 0 || g >= sig->generator_count()) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    if (sig->invertible(g)) {
        fail(ErrorCode::BadFamilyParams, "triangular shift of invertible generator");
    }
    check_scalar_field(sig, p.c);
    if (static_cast<int>(p.monomial.exponents.size()) != sig->generator_count()) {
        fail(ErrorCode::LengthMismatch, "monomial arity does not match signature");
    }
    if (p.monomial.exponents[static_cast<std::size_t>(g)] != 0) {
        fail(ErrorCode::BadFamilyParams, "monomial must not involve the shifted generator");
    }
    const Element mu = Element::monomial(sig, p.monomial, Scalar::one(sig->field()));
    FamilyBuild b{"triangular(" + sig->generator_name(g) + "," + p.c.to_string() + "*" +
                      format_monomial(*sig, p.monomial) + ")",
                  identity_images(sig), identity_images(sig)};
    b.images[static_cast<std::size_t>(g)] += p.c * mu;
    b.inverse[static_cast<std::size_t>(g)] -= p.c * mu;
    return b;
}

}  // namespace

std::string family_name(const AutFamilyParams& params) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ShiftParams>) return "shift";
            else if constexpr (std::is_same_v<T, LinearParams>) return "linear";
            else if constexpr (std::is_same_v<T, ScalingParams>) return "scaling";
            else if constexpr (std::is_same_v<T, PermutationParams>) return "permutation";
            else if constexpr (std::is_same_v<T, WeylScalingParams>) return "weyl-scaling";
            else if constexpr (std::is_same_v<T, WeylLinearParams>) return "weyl-linear";
            else if constexpr (std::is_same_v<T, WeylSwapParams>) return "weyl-swap";
            else if constexpr (std::is_same_v<T, AlphaParams>) return "alpha";
            else if constexpr (std::is_same_v<T, BetaParams>) return "beta";
            else return "triangular";
        },
        params);
}

EndoMap builtin_family(const SignaturePtr& sig, const AutFamilyParams& params) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "family needs a signature");
    if (sig->commutative_shadow()) {
        fail(ErrorCode::BadFamilyParams, "families act on algebras, not graded shadows");
    }
    FamilyBuild b = std::visit(
        [&](const auto& p) -> FamilyBuild {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ShiftParams>) return build_shift(sig, p);
            else if constexpr (std::is_same_v<T, LinearParams>) return build_linear(sig, p);
            else if constexpr (std::is_same_v<T, ScalingParams>) return build_scaling(sig, p);
            else if constexpr (std::is_same_v<T, PermutationParams>) return build_permutation(sig, p);
            else if constexpr (std::is_same_v<T, WeylScalingParams>) return build_weyl_scaling(sig, p);
            else if constexpr (std::is_same_v<T, WeylLinearParams>) return build_weyl_linear(sig, p);
            else if constexpr (std::is_same_v<T, WeylSwapParams>) return build_weyl_swap(sig, p);
            else if constexpr (std::is_same_v<T, AlphaParams>) return build_alpha(sig, p);
            else if constexpr (std::is_same_v<T, BetaParams>) return build_beta(sig, p);
            else return build_triangular(sig, p);
        },
        params);
    EndoMap m(std::move(b.name), sig, std::move(b.images), std::move(b.inverse));
    if (!m.validated_ok()) {
        fail(ErrorCode::BadFamilyParams,
             "parameters do not define an automorphism: " + m.validate().to_string());
    }
    return m;
}

AlphaParams alpha_from_polynomial(const SignaturePtr& sig, int atom, int pair, const Element& h) {
    check_pair(sig, atom, pair);
    if (!(*h.signature() == *sig)) {
        fail(ErrorCode::SignatureMismatch, "polynomial over a different signature");
    }
    const int x = sig->atom_offset(atom) + 2 * pair;
    std::vector<Scalar> coeffs;
    for (const auto& [m, c] : h.terms()) {
        for (int g = 0; g < sig->generator_count(); ++g) {
            if (g != x && m.exponents[static_cast<std::size_t>(g)] != 0) {
                fail(ErrorCode::BadPolynomial,
                     "alpha parameter must be a polynomial in " + sig->generator_name(x) + " only");
            }
        }
        const auto e = static_cast<std::size_t>(m.exponents[static_cast<std::size_t>(x)]);
        if (coeffs.size() <= e) coeffs.resize(e + 1, Scalar::zero(sig->field()));
        coeffs[e] = c;
    }
    return AlphaParams{atom, pair, std::move(coeffs)};
}

}  // namespace autstab
