#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autstab/error.hpp"
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

TEST_CASE("validation rejects relation-breaking images") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);

    // x -> x, y -> x breaks [x, y] = 1.
    const EndoMap bad("bad", sig, {x, x});
    CHECK_FALSE(bad.validate().ok());
    CHECK(bad.validate().violations.front().kind == ViolationKind::relation_violated);
    CHECK(thrown_code([&] { (void)apply_endomorphism(bad, x); }) == ErrorCode::UnvalidatedMap);

    const EndoMap good("good", sig, {x, y + Element::one(sig)});
    CHECK(good.validate().ok());
    CHECK(apply_endomorphism(good, y) == y + Element::one(sig));
}

TEST_CASE("partial maps report every missing image") {
    const auto sig = make_polynomial(2, Q);
    const EndoMap m = EndoMap::partial("p", sig, {Element::generator(sig, 0), std::nullopt});
    const auto& rep = m.validate();
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.size() == 1);
    CHECK(rep.violations.front().kind == ViolationKind::missing_image);
}

TEST_CASE("laurent generators must map to units") {
    const auto sig = make_laurent(1, Q);
    const Element z = Element::generator(sig, 0);
    const EndoMap bad("bad", sig, {z + Element::one(sig)});
    CHECK_FALSE(bad.validate().ok());
    CHECK(bad.validate().violations.front().kind == ViolationKind::non_unit_image);

    const EndoMap good("good", sig, {z.pow(-1)});
    CHECK(good.validate().ok());
    CHECK(apply_endomorphism(good, z.pow(2)) == z.pow(-2));
}

TEST_CASE("inverse checking is two-sided") {
    const auto sig = make_polynomial(1, Q);
    const Element z = Element::generator(sig, 0);
    const EndoMap claims_wrong("w", sig, {z + Element::one(sig)},
                               std::vector<Element>{z + Element::one(sig)});
    CHECK_FALSE(claims_wrong.validate().ok());
    CHECK(claims_wrong.validate().violations.front().kind == ViolationKind::inverse_fails);

    const EndoMap good("g", sig, {z + Element::one(sig)},
                       std::vector<Element>{z - Element::one(sig)});
    CHECK(good.validate().ok());
}

TEST_CASE("built-in families validate and apply") {
    const auto sig = make_polynomial(2, Q);
    const Element z1 = Element::generator(sig, 0);
    const Element z2 = Element::generator(sig, 1);

    const EndoMap shift = builtin_family(sig, ShiftParams{0, Scalar(Q, 1)});
    CHECK(apply_endomorphism(shift, z1 * z1) == (z1 + Element::one(sig)) * (z1 + Element::one(sig)));

    const EndoMap scale = builtin_family(sig, ScalingParams{1, Scalar(Q, 3)});
    CHECK(apply_endomorphism(scale, z2) == z2 * Scalar(Q, 3));

    const EndoMap perm = builtin_family(sig, PermutationParams{0, {1, 0}});
    CHECK(apply_endomorphism(perm, z1 * z1 + z2) == z2 * z2 + z1);

    Monomial mu{{0, 2}};
    const EndoMap tri = builtin_family(sig, TriangularParams{0, Scalar(Q, 1), mu});
    CHECK(apply_endomorphism(tri, z1) == z1 + z2 * z2);

    const EndoMap lin = builtin_family(
        sig, LinearParams{0,
                          {{Scalar(Q, 1), Scalar(Q, 1)}, {Scalar(Q, 0), Scalar(Q, 1)}},
                          {Scalar(Q, 5), Scalar(Q, 0)}});
    CHECK(apply_endomorphism(lin, z1) == z1 + z2 + Element::constant(sig, Scalar(Q, 5)));
}

TEST_CASE("weyl families preserve the defining relation") {
    const auto sig = make_weyl(2, Q);
    const Element x1 = Element::generator(sig, 0);
    const Element y1 = Element::generator(sig, 1);
    const Element x2 = Element::generator(sig, 2);
    const Element y2 = Element::generator(sig, 3);

    const EndoMap ws = builtin_family(sig, WeylScalingParams{0, 0, Scalar(Q, 2)});
    CHECK(apply_endomorphism(ws, x1) == x1 * Scalar(Q, 2));
    CHECK(apply_endomorphism(ws, y1) == y1 * Scalar(Q, 1, 2));
    CHECK(apply_endomorphism(ws, x2) == x2);

    const EndoMap swap = builtin_family(sig, WeylSwapParams{0, 1});
    CHECK(apply_endomorphism(swap, x2) == y2);
    CHECK(apply_endomorphism(swap, y2) == -x2);
    CHECK(apply_endomorphism(swap, commutator(x2, y2)) == Element::one(sig));

    const EndoMap alpha = builtin_family(
        sig, AlphaParams{0, 0, {Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1)}});  // h = x^2
    CHECK(apply_endomorphism(alpha, y1) == y1 + x1 * x1);
    CHECK(apply_endomorphism(alpha, commutator(x1, y1)) == Element::one(sig));

    const EndoMap beta = builtin_family(sig, BetaParams{0, 0, Scalar(Q, 3)});
    CHECK(apply_endomorphism(beta, x1) == x1 + y1 * Scalar(Q, 3));

    // Shear x1 -> x1 + x2 forces y2 -> y2 - y1 on the dual side.
    const EndoMap shear = builtin_family(
        sig, WeylLinearParams{0,
                              {{Scalar(Q, 1), Scalar(Q, 1)}, {Scalar(Q, 0), Scalar(Q, 1)}}});
    CHECK(apply_endomorphism(shear, x1) == x1 + x2);
    CHECK(apply_endomorphism(shear, commutator(x1, y1)) == Element::one(sig));
    CHECK(apply_endomorphism(shear, commutator(x1, y2)).is_zero());

    const EndoMap pairs = builtin_family(sig, PermutationParams{0, {1, 0}});
    CHECK(apply_endomorphism(pairs, x1) == x2);
    CHECK(apply_endomorphism(pairs, y1) == y2);
}

TEST_CASE("weyl shifts are valid automorphisms") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    const EndoMap sx = builtin_family(sig, ShiftParams{0, Scalar(Q, 1)});
    CHECK(apply_endomorphism(sx, x * y) == (x + Element::one(sig)) * y);
    const EndoMap sy = builtin_family(sig, ShiftParams{1, Scalar(Q, 1)});
    CHECK(apply_endomorphism(sy, commutator(x, y)) == Element::one(sig));
}

TEST_CASE("bad family parameters are rejected with specific codes") {
    const auto poly = make_polynomial(2, Q);
    const auto laurent = make_laurent(1, Q);
    const auto weyl = make_weyl(1, Q);

    CHECK(thrown_code([&] {
              (void)builtin_family(laurent, ShiftParams{0, Scalar(Q, 1)});
          }) == ErrorCode::BadFamilyParams);
    CHECK(thrown_code([&] {
              (void)builtin_family(poly, ScalingParams{0, Scalar(Q, 0)});
          }) == ErrorCode::SingularMatrix);
    CHECK(thrown_code([&] {
              (void)builtin_family(poly, PermutationParams{0, {0, 0}});
          }) == ErrorCode::BadPermutation);
    CHECK(thrown_code([&] {
              Monomial self{{1, 0}};
              (void)builtin_family(poly, TriangularParams{0, Scalar(Q, 1), self});
          }) == ErrorCode::BadFamilyParams);
    CHECK(thrown_code([&] {
              (void)builtin_family(
                  weyl, WeylLinearParams{0, {{Scalar(Q, 0)}}});
          }) == ErrorCode::SingularMatrix);
}

TEST_CASE("family inverses undo on random elements") {
    std::mt19937 rng(2024);
    const auto sig = tensor_product(make_polynomial(2, Q), make_weyl(1, Q));
    const std::vector<AutFamilyParams> families = {
        ShiftParams{0, Scalar(Q, 2)},
        ScalingParams{1, Scalar(Q, 1, 3)},
        PermutationParams{0, {1, 0}},
        TriangularParams{0, Scalar(Q, 1), Monomial{{0, 2, 0, 0}}},
        WeylScalingParams{1, 0, Scalar(Q, 5)},
        WeylSwapParams{1, 0},
        AlphaParams{1, 0, {Scalar(Q, 1), Scalar(Q, 2)}},
        BetaParams{1, 0, Scalar(Q, 2)},
    };
    for (const auto& params : families) {
        const EndoMap m = builtin_family(sig, params);
        REQUIRE(m.has_inverse());
        const EndoMap back(m.name() + "^-1", m.signature(), m.inverse_images());
        for (int i = 0; i < 10; ++i) {
            const Element f = testsupport::random_element(rng, sig, 3, 4);
            CHECK(apply_endomorphism(back, apply_endomorphism(m, f)) == f);
        }
    }
}

TEST_CASE("alpha_from_polynomial accepts exactly one-variable x-polynomials") {
    const auto sig = make_weyl(2, Q);
    const Element x1 = Element::generator(sig, 0);
    const AlphaParams p = alpha_from_polynomial(sig, 0, 0, x1 * x1 + Element::one(sig));
    CHECK(p.h_coeffs.size() == 3);
    CHECK(p.h_coeffs[0] == Scalar(Q, 1));
    CHECK(p.h_coeffs[2] == Scalar(Q, 1));
    const Element y2 = Element::generator(sig, 3);
    CHECK(thrown_code([&] { (void)alpha_from_polynomial(sig, 0, 0, y2); }) ==
          ErrorCode::BadPolynomial);
}

TEST_CASE("difference drops degree on shift maps") {
    const auto sig = make_polynomial(1, Q);
    const Element z = Element::generator(sig, 0);
    const EndoMap shift = builtin_family(sig, ShiftParams{0, Scalar(Q, 1)});
    const Element d = difference(shift, z * z * z);
    CHECK(total_degree(d) == 2);
}

TEST_CASE("applications are ring homomorphisms on random pairs") {
    std::mt19937 rng(909);
    const auto sig = tensor_product(make_polynomial(2, Q), make_weyl(1, Q));
    const std::vector<AutFamilyParams> families = {
        ShiftParams{0, Scalar(Q, 2)},
        LinearParams{0,
                     {{Scalar(Q, 1), Scalar(Q, 1)}, {Scalar(Q, 0), Scalar(Q, 1)}},
                     {Scalar(Q, 3), Scalar(Q, 0)}},
        ScalingParams{1, Scalar(Q, 1, 3)},
        PermutationParams{0, {1, 0}},
        WeylScalingParams{1, 0, Scalar(Q, 5)},
        WeylLinearParams{1, {{Scalar(Q, 2)}}},
        WeylSwapParams{1, 0},
        AlphaParams{1, 0, {Scalar(Q, 1), Scalar(Q, 2)}},
        BetaParams{1, 0, Scalar(Q, 2)},
        TriangularParams{0, Scalar(Q, 1), Monomial{{0, 2, 0, 0}}},
    };
    for (const auto& params : families) {
        const EndoMap m = builtin_family(sig, params);
        CAPTURE(m.name());
        for (int i = 0; i < 100; ++i) {
            const Element f = testsupport::random_element(rng, sig, 2, 3);
            const Element g = testsupport::random_element(rng, sig, 2, 3);
            REQUIRE(apply_endomorphism(m, f * g) ==
                    apply_endomorphism(m, f) * apply_endomorphism(m, g));
        }
    }
}
