#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "autstab/element.hpp"
#include "autstab/error.hpp"
#include "autstab/parser.hpp"
#include "support/random_elements.hpp"
#include "support/swap_oracle.hpp"

using namespace autstab;

namespace {

const Field Q = Field::rationals();

Element parse_free(const SignaturePtr& sig, std::initializer_list<std::pair<Monomial, long>> ts) {
    Element f(sig);
    for (const auto& [m, c] : ts) f.add_term(m, Scalar(sig->field(), c));
    return f;
}

Monomial mono(std::initializer_list<std::int32_t> es) {
    return Monomial{std::vector<std::int32_t>(es)};
}

// All monomials with total degree <= cap over non-invertible generators.
std::vector<Monomial> all_monomials(const SignaturePtr& sig, int cap) {
    std::vector<Monomial> out;
    Monomial cur{std::vector<std::int32_t>(static_cast<std::size_t>(sig->generator_count()), 0)};
    auto rec = [&](auto&& self, std::size_t g, int budget) -> void {
        if (g == cur.exponents.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur.exponents[g] = static_cast<std::int32_t>(e);
            self(self, g + 1, budget - e);
        }
        cur.exponents[g] = 0;
    };
    rec(rec, 0, cap);
    return out;
}

}  // namespace

TEST_CASE("monomial order is degree then lexicographic") {
    MonomialOrder lt;
    CHECK(lt(mono({1, 0}), mono({0, 2})));   // degree 1 < degree 2
    CHECK(lt(mono({0, 2}), mono({1, 1})));   // same degree, lex
    CHECK(lt(mono({1, 1}), mono({2, 0})));
    CHECK_FALSE(lt(mono({2, 0}), mono({2, 0})));
}

TEST_CASE("polynomial arithmetic expands products") {
    const auto sig = make_polynomial(2, Q);
    const Element z1 = Element::generator(sig, 0);
    const Element z2 = Element::generator(sig, 1);
    const Element sq = (z1 + z2) * (z1 + z2);
    Element expect = parse_free(sig, {{mono({2, 0}), 1}, {mono({0, 2}), 1}});
    expect.add_term(mono({1, 1}), Scalar(Q, 2));
    CHECK(sq == expect);
    CHECK((z1 - z1).is_zero());
    CHECK(total_degree(sq) == 2);
    CHECK(partial_degree(sq, 0) == 2);
}

TEST_CASE("weyl defining relation holds") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    CHECK(commutator(x, y) == Element::one(sig));
    // y*x re-normalizes to x*y - 1
    const Element yx = y * x;
    Element expect = Element::monomial(sig, mono({1, 1}), Scalar(Q, 1));
    expect.add_term(mono({0, 0}), Scalar(Q, -1));
    CHECK(yx == expect);
}

TEST_CASE("normal ordering closed form: y^m x^n") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    // y^2 x^2 = x^2 y^2 - 4 x y + 2
    const Element lhs = y.pow(2) * x.pow(2);
    Element expect = Element::monomial(sig, mono({2, 2}), Scalar(Q, 1));
    expect.add_term(mono({1, 1}), Scalar(Q, -4));
    expect.add_term(mono({0, 0}), Scalar(Q, 2));
    CHECK(lhs == expect);

    // Full table: y^m x^n = sum_k (-1)^k k! C(m,k) C(n,k) x^(n-k) y^(m-k).
    const auto binom = [](int a, int b) {
        long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - i + 1) / i;
        return r;
    };
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            Element rhs(sig);
            long factorial = 1;
            for (int k = 0; k <= std::min(m, n); ++k) {
                if (k > 0) factorial *= k;
                const long c = (k % 2 == 0 ? 1 : -1) * factorial * binom(m, k) * binom(n, k);
                rhs.add_term(mono({n - k, m - k}), Scalar(Q, c));
            }
            REQUIRE(y.pow(m) * x.pow(n) == rhs);
        }
    }
}

TEST_CASE("multiply agrees with the adjacent-swap oracle") {
    for (int n : {1, 2}) {
        const auto sig = make_weyl(n, Q);
        const auto monos = all_monomials(sig, 6);
        // All monomial pairs of combined total degree <= 6.
        for (const Monomial& a : monos) {
            for (const Monomial& b : monos) {
                if (a.total_degree() + b.total_degree() > 6) continue;
                const Element ea = Element::monomial(sig, a, Scalar::one(Q));
                const Element eb = Element::monomial(sig, b, Scalar::one(Q));
                REQUIRE(ea * eb == oracle::multiply(ea, eb));
            }
        }
    }
}

TEST_CASE("multiply agrees with the oracle on random element pairs") {
    std::mt19937 rng(1234);
    for (int n : {1, 2}) {
        const auto sig = make_weyl(n, Q);
        for (int i = 0; i < 50; ++i) {
            const Element a = testsupport::random_element(rng, sig, 3, 4);
            const Element b = testsupport::random_element(rng, sig, 3, 4);
            REQUIRE(a * b == oracle::multiply(a, b));
        }
    }
}

TEST_CASE("tensor products multiply across atoms independently") {
    const auto sig = tensor_product(make_polynomial(1, Q), make_weyl(1, Q));
    const Element z = Element::generator(sig, 0);
    const Element x = Element::generator(sig, 1);
    const Element y = Element::generator(sig, 2);
    CHECK(commutator(z, x).is_zero());
    CHECK(commutator(z, y).is_zero());
    CHECK(commutator(x, y) == Element::one(sig));
    const Element f = (z * y) * (z * x);
    // z^2 * (y x) = z^2 x y - z^2
    Element expect = Element::monomial(sig, mono({2, 1, 1}), Scalar(Q, 1));
    expect.add_term(mono({2, 0, 0}), Scalar(Q, -1));
    CHECK(f == expect);
}

TEST_CASE("laurent monomials invert; others do not") {
    const auto sig = make_laurent(1, Q);
    const Element z = Element::generator(sig, 0);
    const Element zi = z.pow(-1);
    CHECK(z * zi == Element::one(sig));
    CHECK(zi.pow(-3) == z.pow(3));

    const auto poly = make_polynomial(1, Q);
    CHECK_THROWS_AS((void)Element::generator(poly, 0).pow(-1), Error);

    // Non-monomial units are rejected even over Laurent.
    const Element sum = z + Element::one(sig);
    CHECK_THROWS_AS((void)sum.pow(-1), Error);
}

TEST_CASE("center of the weyl algebra is the scalars") {
    const auto sig = make_weyl(1, Q);
    CHECK(is_central(Element::constant(sig, Scalar(Q, 7))));
    CHECK_FALSE(is_central(Element::generator(sig, 0)));
    CHECK_FALSE(is_central(Element::monomial(sig, mono({1, 1}), Scalar::one(Q))));

    const auto poly = make_polynomial(2, Q);
    CHECK(is_central(Element::generator(poly, 0)));
}

TEST_CASE("combine takes exact linear combinations") {
    const auto sig = make_polynomial(1, Q);
    const Element z = Element::generator(sig, 0);
    const Element r = combine({Scalar(Q, 1, 2), Scalar(Q, -2)}, {z * z, z});
    Element expect(sig);
    expect.add_term(mono({2}), Scalar(Q, 1, 2));
    expect.add_term(mono({1}), Scalar(Q, -2));
    CHECK(r == expect);
    CHECK_THROWS_AS((void)combine({Scalar(Q, 1)}, {z, z}), Error);
}

TEST_CASE("prime field coefficients reduce canonically") {
    const Field f5 = Field::prime(5);
    const auto sig = make_polynomial(1, f5);
    const Element z = Element::generator(sig, 0);
    Element f = z * Scalar(f5, 3) + z * Scalar(f5, 2);
    CHECK(f.is_zero());
    const Element g = z * Scalar(f5, 4) * Scalar(f5, 4);  // 16 = 1 mod 5
    CHECK(g == z);
}

TEST_CASE("partial and total degree track weyl normal forms") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    const Element f = y * x;  // x*y - 1
    CHECK(total_degree(f) == 2);
    CHECK(partial_degree(f, 0) == 1);
    CHECK(!total_degree(Element::zero(sig)).has_value());
}

namespace {
std::vector<SignaturePtr> property_signatures() {
    return {make_polynomial(1, Q),
            make_polynomial(3, Q),
            make_laurent(2, Q),
            make_weyl(1, Q),
            make_weyl(2, Q),
            parse_signature("poly:1 x weyl:1", Q),
            make_polynomial(2, Field::prime(5))};
}
}  // namespace

TEST_CASE("multiplication is associative on random triples") {
    std::mt19937 rng(8080);
    for (const SignaturePtr& sig : property_signatures()) {
        for (int i = 0; i < 100; ++i) {
            const Element f = testsupport::random_element(rng, sig, 3, 3);
            const Element g = testsupport::random_element(rng, sig, 3, 3);
            const Element h = testsupport::random_element(rng, sig, 3, 3);
            REQUIRE((f * g) * h == f * (g * h));
        }
    }
}

TEST_CASE("degrees add and products of nonzero elements are nonzero") {
    std::mt19937 rng(6060);
    for (const SignaturePtr& sig :
         {make_polynomial(2, Q), make_weyl(1, Q), make_weyl(2, Q)}) {
        for (int i = 0; i < 100; ++i) {
            const Element f = testsupport::random_nonzero(rng, sig, 3, 3);
            const Element g = testsupport::random_nonzero(rng, sig, 3, 3);
            const Element p = f * g;
            REQUIRE(!p.is_zero());
            REQUIRE(total_degree(p) == *total_degree(f) + *total_degree(g));
        }
    }
}
