#pragma once

#include <memory>
#include <string>
#include <vector>

#include "autstab/scalar.hpp"

namespace autstab {

enum class AtomKind { polynomial, laurent, weyl };

// One tensor factor: a polynomial ring k[z_1..z_m], a Laurent ring
// k[z_1^±..z_m^±], or a Weyl algebra A_n (x_i y_i - y_i x_i = 1).
struct Atom {
    AtomKind kind;
    int size;

    int generator_count() const { return kind == AtomKind::weyl ? 2 * size : size; }
    bool operator==(const Atom&) const = default;
};

// Structural description of a supported algebra: an ordered tensor product of
// atoms over a fixed coefficient field. Generator storage order is the atom
// order; within a Weyl atom the pairs are interleaved [x_1, y_1, x_2, y_2, ..]
// so normal-form monomials read off in display order. Names are global:
// commutative generators are z1, z2, .. across all polynomial/Laurent atoms,
// Weyl pairs are x1/y1, x2/y2, .. across all Weyl atoms.
//
// `commutative_shadow` marks the associated graded ring of a Weyl-bearing
// algebra: same generators and names, but all generators commute. Shadow-ness
// is part of structural equality, so graded and ungraded elements never mix.
class AlgebraSignature {
public:
    AlgebraSignature(std::vector<Atom> atoms, Field field, bool commutative_shadow = false);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const Field& field() const { return field_; }
    bool commutative_shadow() const { return shadow_; }
    int generator_count() const { return static_cast<int>(names_.size()); }

    // True when products never need reordering: no Weyl atom, or shadow.
    bool is_commutative() const;

    const std::string& generator_name(int g) const;
    // -1 when no generator has that name.
    int generator_index(const std::string& name) const;

    bool invertible(int g) const;
    bool is_weyl_x(int g) const;
    bool is_weyl_y(int g) const;
    // Index of the paired generator; -1 for commutative generators.
    int weyl_partner(int g) const;

    int atom_of(int g) const;
    // Storage index of the first generator of atom a.
    int atom_offset(int a) const;

    bool operator==(const AlgebraSignature& rhs) const;

    // "poly:2", "weyl:1", "poly:1 x weyl:1"; shadow prepends "gr ".
    std::string to_string() const;

private:
    void check_generator(int g) const;

    std::vector<Atom> atoms_;
    Field field_;
    bool shadow_;
    std::vector<std::string> names_;
    std::vector<int> atom_of_;
    std::vector<int> atom_offsets_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

SignaturePtr make_polynomial(int m, const Field& field);
SignaturePtr make_laurent(int m, const Field& field);
SignaturePtr make_weyl(int n, const Field& field);

// Concatenates the atom lists; fields must match, shadows are rejected.
SignaturePtr tensor_product(const SignaturePtr& a, const SignaturePtr& b);

// The commutative shadow carrying gr(A): same atoms, names, and field.
SignaturePtr graded_shadow(const SignaturePtr& sig);

// Parses "poly:2", "laurent:1", "weyl:2", or tensors like "poly:1 x weyl:1".
SignaturePtr parse_signature(const std::string& text, const Field& field);

}  // namespace autstab
