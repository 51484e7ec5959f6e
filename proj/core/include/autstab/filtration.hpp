#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autstab/element.hpp"

namespace autstab {

// Weight filtration: a nonnegative integer weight per generator induces
// F_i = span of monomials of weight <= i. Multiplicativity F_i F_j <= F_{i+j}
// holds structurally: the Weyl rewrite y x = x y - 1 only drops weight.
// Invertible generators must carry weight 0 (1 = z * z^{-1} pins both to
// degree 0 in any nonnegative filtration).
class WeightFiltration {
public:
    WeightFiltration(SignaturePtr sig, std::vector<int> weights);

    // All-ones weights: the standard grading, and on Weyl atoms the Bernstein
    // filtration.
    static WeightFiltration bernstein(SignaturePtr sig);
    static WeightFiltration uniform(SignaturePtr sig, int weight);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int g) const;

private:
    SignaturePtr sig_;
    std::vector<int> weights_;
};

enum class FiltrationViolationKind { negative_weight, invertible_not_degree_zero };

struct FiltrationViolation {
    FiltrationViolationKind kind;
    int generator;
    std::string detail;
};

struct FiltrationReport {
    std::vector<FiltrationViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

FiltrationReport validate_filtration(const WeightFiltration& w);

// Throws NegativeWeight / InvertibleNotDegreeZero when the report is dirty;
// used by the operations whose meaning depends on a valid filtration.
void require_valid_filtration(const WeightFiltration& w);

int monomial_weight(const WeightFiltration& w, const Monomial& m);

// Minimal i with f in F_i, i.e. the max term weight; nullopt for zero.
std::optional<int> weight_degree(const WeightFiltration& w, const Element& f);

// Sum of the maximal-weight terms, read in the commutative shadow signature.
// Weyl pairs need weight(x_i) + weight(y_i) >= 1, otherwise the -1 correction
// does not drop weight and gr is not the commutative polynomial ring.
Element leading_form(const WeightFiltration& w, const Element& f);

// Concatenated weights over tensor_product(A, B).
WeightFiltration tensor_weights(const WeightFiltration& wa, const WeightFiltration& wb);

struct GradedDegreeRow {
    int degree;
    std::int64_t lhs;  // dim gr_H(A (x) B)_i by direct enumeration
    std::int64_t rhs;  // convolution of the factor dimensions
    bool pass;
};

struct GradedReport {
    std::vector<GradedDegreeRow> rows;
    int domain_samples = 0;
    bool domain_ok = true;
    bool all_pass() const;
};

// Lemma-style dimension comparison: for each i <= cap checks
// dim gr_H(A(x)B)_i == sum_{a+b=i} dim gr_F(A)_a * dim gr_G(B)_b, plus a
// small sample of homogeneous products staying nonzero in gr. Requires
// strictly positive weights on both sides (finite graded pieces).
GradedReport gr_dimension_check(const WeightFiltration& wa, const WeightFiltration& wb, int cap);

// Count of monomials of exact weight d (weights must all be positive).
std::int64_t graded_dimension(const WeightFiltration& w, int degree);

struct GrowthReport {
    std::vector<std::int64_t> dims;  // dims[n] = dim span of <= n-fold products
    std::optional<int> degree;       // gk_estimate result when the tail suffices
    std::string verdict;
};

// dims[n] for n = 0..steps, where V = span(gens) must contain 1.
GrowthReport growth_sequence(const SignaturePtr& sig, const std::vector<Element>& gens, int steps);

// Smallest d whose (d+1)-th finite differences vanish on the tail (last half)
// of the sequence; SequenceTooShort when fewer than 2*(d+2) entries support
// the candidate d.
int gk_estimate(const std::vector<std::int64_t>& dims);

}  // namespace autstab
