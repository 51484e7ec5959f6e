#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autstab/error.hpp"
#include "autstab/parser.hpp"
#include "support/random_elements.hpp"

using namespace autstab;

namespace {
const Field Q = Field::rationals();

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;  // placeholder; callers always expect a throw
}
}  // namespace

TEST_CASE("parses polynomials with precedence and parentheses") {
    const auto sig = make_polynomial(2, Q);
    const Element z1 = Element::generator(sig, 0);
    const Element z2 = Element::generator(sig, 1);
    CHECK(parse_element("z1 + z2", sig) == z1 + z2);
    CHECK(parse_element("z1*z2^2", sig) == z1 * z2 * z2);
    CHECK(parse_element("(z1+z2)^2", sig) == (z1 + z2) * (z1 + z2));
    CHECK(parse_element("-z1 - -z2", sig) == z2 - z1);  // unary minus on terms
    CHECK(parse_element("2/3*z1", sig) == z1 * Scalar(Q, 2, 3));
    CHECK(parse_element("0", sig).is_zero());
    CHECK(parse_element("z1 - z1", sig).is_zero());
}

TEST_CASE("normalizes non-normal-form weyl input at parse time") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    CHECK(parse_element("y1*x1", sig) == x * y - Element::one(sig));
    CHECK(parse_element("(x1+y1)^2", sig) == (x + y) * (x + y));
}

TEST_CASE("negative exponents parse only over laurent") {
    const auto laurent = make_laurent(1, Q);
    const Element z = Element::generator(laurent, 0);
    CHECK(parse_element("z1^-1", laurent) == z.pow(-1));
    CHECK(parse_element("z1^-1 * z1", laurent) == Element::one(laurent));

    const auto poly = make_polynomial(2, Q);
    CHECK(code_of([&] { (void)parse_element("z1^-1", poly); }) == ErrorCode::BadExponent);
}

TEST_CASE("parse errors carry codes and positions") {
    const auto sig = make_polynomial(1, Q);
    CHECK(code_of([&] { (void)parse_element("z9", sig); }) == ErrorCode::UnknownSymbol);
    CHECK(code_of([&] { (void)parse_element("w1", sig); }) == ErrorCode::UnknownSymbol);
    CHECK(code_of([&] { (void)parse_element("z1 +", sig); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_element("(z1", sig); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_element("", sig); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_element("z1^z1", sig); }) == ErrorCode::ParseError);
}

TEST_CASE("format produces the documented canonical shapes") {
    const auto sig = make_weyl(1, Q);
    const Element x = Element::generator(sig, 0);
    const Element y = Element::generator(sig, 1);
    CHECK(format_element(y * x) == "x1*y1 - 1");
    CHECK(format_element(Element::zero(sig)) == "0");
    CHECK(format_element(x * Scalar(Q, 1, 2)) == "1/2*x1");
    CHECK(format_element(-x) == "-x1");
    CHECK(format_element(x.pow(2) - y) == "x1^2 - y1");

    const auto poly = make_polynomial(2, Q);
    const Element z1 = Element::generator(poly, 0);
    const Element z2 = Element::generator(poly, 1);
    CHECK(format_element(z1 * z1 * z2 + z1) == "z1^2*z2 + z1");

    const auto laurent = make_laurent(1, Q);
    CHECK(format_element(Element::generator(laurent, 0).pow(-2)) == "z1^-2");
}

TEST_CASE("round trip: parse(format(e)) == e on random elements") {
    std::mt19937 rng(42);
    const std::vector<SignaturePtr> sigs = {
        make_polynomial(1, Q),
        make_polynomial(3, Q),
        make_laurent(2, Q),
        make_weyl(1, Q),
        make_weyl(2, Q),
        tensor_product(make_polynomial(1, Q), make_weyl(1, Q)),
        make_polynomial(2, Field::prime(5)),
    };
    for (const auto& sig : sigs) {
        for (int i = 0; i < 200; ++i) {
            const Element e = testsupport::random_element(rng, sig, 4, 5);
            CAPTURE(format_element(e));
            CHECK(parse_element(format_element(e), sig) == e);
        }
    }
}
