#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autstab/linalg.hpp"
#include "autstab/morphism.hpp"

namespace autstab {

// One replayable derivation step. `seed` introduces an element verbatim;
// `apply` runs a built-in automorphism (stored by family parameters, never by
// raw images) on an earlier step; `combine` takes an exact linear combination
// of earlier steps. Inputs always precede the step.
struct CertStep {
    enum class Kind { seed, apply, combine };

    Kind kind;
    std::optional<AutFamilyParams> map;                      // apply
    std::size_t input = 0;                                   // apply
    std::vector<std::pair<std::size_t, Scalar>> combination; // combine
    Element result;
};

// A constructive proof that every monomial of total degree <= cap lies in the
// smallest subspace containing the seed and stable under all automorphisms:
// coverage maps each such monomial to a step whose result is exactly that
// monic monomial.
struct ClosureCertificate {
    SignaturePtr signature;
    Element seed;
    int cap = 0;
    std::vector<CertStep> steps;
    std::map<Monomial, std::size_t, MonomialOrder> coverage;
};

// Appends steps, computing each result eagerly so later steps can build on
// it. The id of a step is its index in steps().
class CertificateBuilder {
public:
    explicit CertificateBuilder(SignaturePtr sig);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<CertStep>& steps() const { return steps_; }
    const Element& result(std::size_t id) const;

    std::size_t add_seed(const Element& seed);
    std::size_t add_apply(const AutFamilyParams& params, std::size_t input);
    std::size_t add_combine(std::vector<std::pair<std::size_t, Scalar>> combination);
    // apply followed by subtracting the input: two steps, returns the second.
    std::size_t add_difference(const AutFamilyParams& params, std::size_t input);

    std::vector<CertStep> take_steps() { return std::move(steps_); }

private:
    void check_id(std::size_t id) const;

    SignaturePtr sig_;
    std::vector<CertStep> steps_;
};

// Shift-differencing loop of the degree-reduction argument: repeatedly picks
// a generator (one of partial degree >= 2, otherwise one of partial degree 1
// with a nonscalar cofactor), shifts it by 1, and replaces the element by the
// difference, until total degree 1. Requires characteristic 0 and a
// polynomial or Weyl signature; the seed must not be scalar.
std::size_t reduce_to_degree_one(CertificateBuilder& b, std::size_t seed_step);
std::pair<Element, std::vector<CertStep>> reduce_to_degree_one(const Element& seed);

struct LinearPartSteps {
    std::size_t one;                 // step proving 1
    std::vector<std::size_t> gens;   // step proving each generator, by index
};

// From a degree-1 element derives 1 and every generator: polynomial case via
// an affine normalization to z1 plus shifts and permutations; Weyl case via
// scaling differences isolating x1, swaps, pair permutations, and a constant
// alpha difference.
LinearPartSteps linear_part(CertificateBuilder& b, std::size_t deg1_step);

// Expresses each target monomial as an exact linear combination of the given
// images (pencil evaluations at distinct scalars); coordinates are returned
// per target, aligned with `images`. SingularSystem when the images do not
// span a target.
std::vector<std::vector<Scalar>> vandermonde_extract(const std::vector<Element>& images,
                                                     const std::vector<Monomial>& targets);

// Full scripted derivation: degree reduction, linear part, then monomial
// generation (triangular differences and shear/beta pencils with Vandermonde
// extraction) until every monomial of degree <= cap is covered.
ClosureCertificate scripted_closure(const Element& seed, int cap);

enum class SaturationStatus { fixpoint, cap_blocked_fixpoint, round_limit };

const char* saturation_status_name(SaturationStatus s);

// Provenance record for one raw saturation element: either seeds[seed_index]
// verbatim, or pool[map_index] applied to the linear combination described by
// `input` (indices into the raw table).
struct RawRecord {
    int seed_index = -1;
    int map_index = -1;
    ProvVec input;
    Element value;
};

struct SaturationResult {
    SpanBasis basis;
    SaturationStatus status;
    int rounds = 0;
    std::int64_t cap_blocked = 0;  // images skipped as over-cap, total
    std::vector<RawRecord> raws;   // basis row provenance indexes this table
};

// Generic oracle: repeatedly applies every pool map to every basis row in
// canonical (map index, row index) order, inserting images of degree <= cap.
// Over-cap images are skipped, never truncated, so every basis row genuinely
// lies in the true stable span.
SaturationResult saturate(const std::vector<Element>& seeds, const std::vector<EndoMap>& pool,
                          int cap, int max_rounds = 50);

// Replays every raw record one level (seeds verbatim, applies recomputed from
// their stored inputs); the table is a DAG grounded in seeds, so this is a
// full soundness check of the computed span.
bool raw_table_consistent(const SaturationResult& result, const std::vector<Element>& seeds,
                          const std::vector<EndoMap>& pool);

// Named pools: "affine" (shifts and scalings of every non-invertible
// commutative generator), "triangular" (affine plus transpositions and
// z_i -> z_i + z_j^2), "weyl-standard" (scalings, pair transpositions, swaps,
// alpha with h in {1, x, x^2}, beta, and x_i -> x_i + x_j shears per atom).
std::vector<EndoMap> pool_preset(const SignaturePtr& sig, const std::string& name);

struct VerifyResult {
    enum class Status {
        ok,
        malformed,            // ids out of order / out of range / bad shapes
        map_invalid,          // a stored family fails to rebuild or validate
        step_mismatch,        // replayed result differs from the recorded one
        coverage_wrong,       // covered monomial's step is not that monomial
        coverage_incomplete,  // a monomial of degree <= cap has no entry
    };

    Status status = Status::ok;
    std::size_t failing_step = static_cast<std::size_t>(-1);
    std::string detail;

    bool ok() const { return status == Status::ok; }
};

const char* verify_status_name(VerifyResult::Status s);

// Replays the whole certificate with exact arithmetic, re-validating every
// stored automorphism, and re-checks coverage totality.
VerifyResult verify_certificate(const ClosureCertificate& cert);

// All normal-form monomials of total degree <= cap (requires a signature
// without invertible generators).
std::vector<Monomial> monomials_up_to_degree(const SignaturePtr& sig, int cap);

}  // namespace autstab
