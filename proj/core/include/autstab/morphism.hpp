#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "autstab/element.hpp"

namespace autstab {

enum class ViolationKind {
    missing_image,       // no image supplied for a generator
    relation_violated,   // images fail a defining relation
    non_unit_image,      // invertible generator mapped to a non-unit
    inverse_fails,       // supplied inverse is not a two-sided inverse on generators
};

struct Violation {
    ViolationKind kind;
    int generator_a = -1;
    int generator_b = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// An endomorphism presented by generator images, with an optional candidate
// inverse. Application is gated on validation: the defining relations of the
// signature are checked exactly, once, before any substitution is allowed.
class EndoMap {
public:
    EndoMap(std::string name, SignaturePtr sig, std::vector<Element> images,
            std::optional<std::vector<Element>> inverse_images = std::nullopt);

    // Partial maps validate to missing_image violations instead of throwing,
    // so callers can collect every problem in one report.
    static EndoMap partial(std::string name, SignaturePtr sig,
                           std::vector<std::optional<Element>> images);

    const std::string& name() const { return name_; }
    const SignaturePtr& signature() const { return sig_; }
    bool has_image(int g) const;
    const Element& image(int g) const;
    bool has_inverse() const { return inverse_.has_value(); }
    const std::vector<Element>& inverse_images() const;

    // Exact relation check (and inverse check when present); cached.
    const ValidationReport& validate() const;
    bool validated_ok() const;

private:
    EndoMap() = default;

    std::string name_;
    SignaturePtr sig_;
    std::vector<std::optional<Element>> images_;
    std::optional<std::vector<Element>> inverse_;
    mutable std::optional<ValidationReport> report_;
};

// Substitutes generator images through f. Throws UnvalidatedMap when the
// map's validation report is not clean.
Element apply_endomorphism(const EndoMap& m, const Element& f);

// apply_endomorphism(m, f) - f: the basic degree-dropping probe.
Element difference(const EndoMap& m, const Element& f);

// Built-in automorphism families. Parameters address a tensor factor by atom
// index (atom-local families act as identity elsewhere, i.e. every family is
// already its own tensor lift) or a generator by storage index.
//
// shift           g -> g + c                      (non-invertible commutative g)
// linear          affine change of coordinates on one polynomial atom
// scaling         z_j -> c z_j on one commutative generator (c != 0)
// permutation     generator (or Weyl pair) permutation within one atom
// weyl-scaling    x_i -> c x_i, y_i -> c^{-1} y_i
// weyl-linear     x -> M x, y -> (M^{-1})^T y on one Weyl atom
// weyl-swap       x_i -> y_i, y_i -> -x_i
// alpha           y_i -> y_i + h(x_i), h a one-variable polynomial
// beta            x_i -> x_i + c y_i
// triangular      g -> g + c * mu, mu a monomial not involving g

struct ShiftParams {
    int generator;
    Scalar amount;
};
struct LinearParams {
    int atom;
    std::vector<std::vector<Scalar>> matrix;
    std::vector<Scalar> translate;  // empty means zero
};
struct ScalingParams {
    int generator;
    Scalar factor;
};
struct PermutationParams {
    int atom;
    std::vector<int> perm;  // j -> perm[j], over generators or Weyl pairs
};
struct WeylScalingParams {
    int atom;
    int pair;  // 0-based within the atom
    Scalar factor;
};
struct WeylLinearParams {
    int atom;
    std::vector<std::vector<Scalar>> matrix;
};
struct WeylSwapParams {
    int atom;
    int pair;
};
struct AlphaParams {
    int atom;
    int pair;
    std::vector<Scalar> h_coeffs;  // h_coeffs[k] multiplies x_i^k
};
struct BetaParams {
    int atom;
    int pair;
    Scalar c;
};
struct TriangularParams {
    int generator;
    Scalar c;
    Monomial monomial;
};

using AutFamilyParams =
    std::variant<ShiftParams, LinearParams, ScalingParams, PermutationParams, WeylScalingParams,
                 WeylLinearParams, WeylSwapParams, AlphaParams, BetaParams, TriangularParams>;

// Family tag used in names, serialization, and the CLI.
std::string family_name(const AutFamilyParams& params);

// Builds the map with its inverse and validates it exactly; bad parameters
// (singular matrix, non-permutation, monomial touching its own generator,
// shifts of invertible generators, ...) throw rather than return.
EndoMap builtin_family(const SignaturePtr& sig, const AutFamilyParams& params);

// Convenience for alpha: converts an Element h to coefficients, rejecting
// anything not a polynomial in the pair's x generator (BadPolynomial).
AlphaParams alpha_from_polynomial(const SignaturePtr& sig, int atom, int pair, const Element& h);

}  // namespace autstab
