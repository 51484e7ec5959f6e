#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "autstab/error.hpp"
#include "autstab/filtration.hpp"
#include "autstab/morphism.hpp"
#include "autstab/parser.hpp"
#include "support/random_elements.hpp"

using namespace autstab;

namespace {
const Field Q = Field::rationals();

ErrorCode thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a throw");
    return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("filtration validation pins invertible generators to weight zero") {
    const auto laurent = make_laurent(1, Q);
    const WeightFiltration w1(laurent, {1});
    const auto rep = validate_filtration(w1);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().kind == FiltrationViolationKind::invertible_not_degree_zero);
    CHECK(thrown_code([&] { require_valid_filtration(w1); }) ==
          ErrorCode::InvertibleNotDegreeZero);

    const WeightFiltration w0(laurent, {0});
    CHECK(validate_filtration(w0).ok());

    const auto poly = make_polynomial(1, Q);
    CHECK(thrown_code([&] { require_valid_filtration(WeightFiltration(poly, {-1})); }) ==
          ErrorCode::NegativeWeight);
}

TEST_CASE("weight degree and leading form on weyl elements") {
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    const Element f = parse_element("x1^2*y1 + x1 + 3", sig);
    CHECK(weight_degree(w, f) == 3);

    const Element lead = leading_form(w, f);
    CHECK(lead.signature()->commutative_shadow());
    CHECK(format_element(lead) == "x1^2*y1");

    // In gr the generators commute even though they do not in A_1.
    const Element gx = Element::generator(lead.signature(), 0);
    const Element gy = Element::generator(lead.signature(), 1);
    CHECK(commutator(gx, gy).is_zero());
}

TEST_CASE("leading form respects custom weights") {
    const auto sig = make_polynomial(2, Q);
    const WeightFiltration w(sig, {1, 3});
    const Element f = parse_element("z1^2 + z2", sig);  // weights 2 vs 3
    CHECK(format_element(leading_form(w, f)) == "z2");
    CHECK(weight_degree(w, f) == 3);
}

TEST_CASE("leading form multiplicativity under bernstein weights") {
    std::mt19937 rng(77);
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    for (int i = 0; i < 200; ++i) {
        const Element f = testsupport::random_nonzero(rng, sig, 3, 4);
        const Element g = testsupport::random_nonzero(rng, sig, 3, 4);
        REQUIRE(leading_form(w, f * g) == leading_form(w, f) * leading_form(w, g));
    }
}

TEST_CASE("weyl pair of weight zero has no commutative leading form") {
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w(sig, {0, 0});
    CHECK(thrown_code([&] {
              (void)leading_form(w, Element::generator(sig, 0));
          }) == ErrorCode::NonPositiveWeylPairWeight);
}

TEST_CASE("graded dimensions count weighted monomials") {
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    // Bernstein-graded A_1: dimension of degree d is d+1.
    for (int d = 0; d <= 6; ++d) CHECK(graded_dimension(w, d) == d + 1);

    const auto poly = make_polynomial(1, Q);
    CHECK(thrown_code([&] {
              (void)graded_dimension(WeightFiltration(poly, {0}), 1);
          }) == ErrorCode::UnsupportedSignature);
}

TEST_CASE("tensor gr dimension check passes for poly x weyl") {
    const auto a = make_polynomial(1, Q);
    const auto b = make_weyl(1, Q);
    const GradedReport rep = gr_dimension_check(WeightFiltration::bernstein(a),
                                                WeightFiltration::bernstein(b), 8);
    CHECK(rep.all_pass());
    CHECK(rep.rows.size() == 9);
    CHECK(rep.rows[2].lhs == 6);  // degree-2 piece of Q[z] (x) A_1
    CHECK(rep.rows[2].rhs == 6);
    CHECK(rep.domain_ok);
}

TEST_CASE("trivial filtrations still satisfy the dimension identity") {
    const auto a = make_laurent(1, Q);
    const auto b = make_laurent(1, Q);
    // All-zero weights: everything lives in degree 0 on both sides.
    const GradedReport rep =
        gr_dimension_check(WeightFiltration(a, {0}), WeightFiltration(b, {0}), 3);
    CHECK(rep.all_pass());
}

TEST_CASE("power combinations scale weight degree linearly") {
    std::mt19937 rng(5150);
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    for (int i = 0; i < 50; ++i) {
        Element f = testsupport::random_nonzero(rng, sig, 2, 3);
        while (!weight_degree(w, f) || *weight_degree(w, f) < 1) {
            f = testsupport::random_nonzero(rng, sig, 2, 3);
        }
        const int m = *weight_degree(w, f);
        std::uniform_int_distribution<int> pick_n(1, 4);
        const int n = pick_n(rng);
        std::vector<Scalar> coeffs;
        std::vector<Element> powers;
        for (int k = 0; k <= n; ++k) {
            coeffs.push_back(k == n ? testsupport::random_scalar(rng, Q)
                                    : Scalar(Q, (i + k) % 3 - 1));
            powers.push_back(f.pow(k));
        }
        const Element sum = combine(coeffs, powers);
        REQUIRE_FALSE(sum.is_zero());
        REQUIRE(weight_degree(w, sum) == n * m);
    }
}

TEST_CASE("growth sequence and gk estimates at desk scale") {
    const auto poly2 = make_polynomial(2, Q);
    std::vector<Element> gens{Element::one(poly2), Element::generator(poly2, 0),
                              Element::generator(poly2, 1)};
    const GrowthReport rep = growth_sequence(poly2, gens, 12);
    REQUIRE(rep.dims.size() == 13);
    CHECK(rep.dims[0] == 1);
    CHECK(rep.dims[1] == 3);
    CHECK(rep.dims[2] == 6);
    CHECK(rep.degree == 2);

    const auto weyl = make_weyl(1, Q);
    std::vector<Element> wg{Element::one(weyl), Element::generator(weyl, 0),
                            Element::generator(weyl, 1)};
    CHECK(growth_sequence(weyl, wg, 12).degree == 2);
}

TEST_CASE("gk_estimate handles polynomial sequences and rejects short input") {
    std::vector<std::int64_t> squares;
    for (int n = 0; n <= 12; ++n) squares.push_back((n + 1) * (n + 2) / 2);
    CHECK(gk_estimate(squares) == 2);

    const std::vector<std::int64_t> constant(12, 1);
    CHECK(gk_estimate(constant) == 0);

    CHECK(thrown_code([&] {
              (void)gk_estimate({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048});
          }) == ErrorCode::SequenceTooShort);
    CHECK(thrown_code([&] { (void)gk_estimate({1, 2}); }) == ErrorCode::SequenceTooShort);
}

TEST_CASE("growth sequence requires one in the generating span") {
    const auto sig = make_polynomial(1, Q);
    CHECK(thrown_code([&] {
              (void)growth_sequence(sig, {Element::generator(sig, 0)}, 3);
          }) == ErrorCode::NotContainingOne);
}

TEST_CASE("leading forms are multiplicative under non-uniform weights too") {
    std::mt19937 rng(2718);
    const std::vector<WeightFiltration> cases = {
        WeightFiltration(make_polynomial(2, Q), {1, 3}),
        WeightFiltration(make_weyl(1, Q), {1, 2}),
        WeightFiltration::bernstein(parse_signature("poly:1 x weyl:1", Q)),
    };
    for (const WeightFiltration& w : cases) {
        for (int i = 0; i < 200; ++i) {
            const Element f = testsupport::random_nonzero(rng, w.signature(), 3, 3);
            const Element g = testsupport::random_nonzero(rng, w.signature(), 3, 3);
            REQUIRE(leading_form(w, f * g) == leading_form(w, f) * leading_form(w, g));
        }
    }
}

TEST_CASE("powers of a positive-weight element have strictly increasing degrees") {
    const auto sig = make_weyl(1, Q);
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    std::mt19937 rng(1618);
    for (int i = 0; i < 20; ++i) {
        const Element f = testsupport::random_nonscalar(rng, sig, 2, 3);
        const int m = *weight_degree(w, f);
        for (int n = 0; n <= 5; ++n) {
            REQUIRE(weight_degree(w, f.pow(n)) == n * m);
        }
    }
}

TEST_CASE("weight-preserving families preserve weight degree") {
    const auto sig = tensor_product(make_polynomial(2, Q), make_weyl(1, Q));
    const WeightFiltration w = WeightFiltration::bernstein(sig);
    const std::vector<AutFamilyParams> families = {
        ScalingParams{0, Scalar(Q, 2)},
        PermutationParams{0, {1, 0}},
        LinearParams{0, {{Scalar(Q, 1), Scalar(Q, 2)}, {Scalar(Q, 0), Scalar(Q, 1)}}, {}},
        WeylScalingParams{1, 0, Scalar(Q, 3)},
        WeylLinearParams{1, {{Scalar(Q, 2)}}},
        WeylSwapParams{1, 0},
    };
    std::mt19937 rng(3141);
    for (const auto& params : families) {
        const EndoMap m = builtin_family(sig, params);
        CAPTURE(m.name());
        for (int i = 0; i < 50; ++i) {
            const Element f = testsupport::random_nonzero(rng, sig, 3, 3);
            REQUIRE(weight_degree(w, apply_endomorphism(m, f)) == weight_degree(w, f));
        }
    }
}
