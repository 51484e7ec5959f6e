#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autstab/error.hpp"
#include "autstab/scalar.hpp"

using namespace autstab;

TEST_CASE("rational arithmetic is exact") {
    const Field q = Field::rationals();
    const Scalar a(q, 1, 3);
    const Scalar b(q, 1, 6);
    CHECK((a + b) == Scalar(q, 1, 2));
    CHECK((a - b) == Scalar(q, 1, 6));
    CHECK((a * b) == Scalar(q, 1, 18));
    CHECK((a / b) == Scalar(q, 2));
    CHECK(a.inverse() == Scalar(q, 3));
    CHECK((-a) == Scalar(q, -1, 3));
    CHECK(Scalar(q, 2).pow(10) == Scalar(q, 1024));
    CHECK(Scalar(q, 2).pow(-2) == Scalar(q, 1, 4));
}

TEST_CASE("prime field residues are canonical") {
    const Field f7 = Field::prime(7);
    CHECK(Scalar(f7, 9) == Scalar(f7, 2));
    CHECK(Scalar(f7, -1) == Scalar(f7, 6));
    CHECK(Scalar(f7, 3) * Scalar(f7, 5) == Scalar(f7, 1));
    CHECK(Scalar(f7, 3).inverse() == Scalar(f7, 5));
    // 1/2 is the residue 4 in F_7.
    CHECK(Scalar(f7, 1, 2) == Scalar(f7, 4));
    CHECK(Scalar(f7, 4).to_string() == "4");
}

TEST_CASE("field construction and naming") {
    CHECK(Field::rationals().to_string() == "q");
    CHECK(Field::prime(2).to_string() == "f2");
    CHECK(Field::from_string("q") == Field::rationals());
    CHECK(Field::from_string("f11") == Field::prime(11));
    CHECK_THROWS_AS((void)Field::prime(4), Error);
    CHECK_THROWS_AS((void)Field::prime(1), Error);
    CHECK_THROWS_AS((void)Field::from_string("fp"), Error);
}

TEST_CASE("division by zero and field mixing throw") {
    const Field q = Field::rationals();
    const Field f5 = Field::prime(5);
    CHECK_THROWS_AS((void)(Scalar(q, 1) / Scalar(q, 0)), Error);
    CHECK_THROWS_AS((void)Scalar(f5, 0).inverse(), Error);
    CHECK_THROWS_AS((void)(Scalar(q, 1) + Scalar(f5, 1)), Error);
    // Denominator divisible by p is not invertible in F_p.
    CHECK_THROWS_AS((void)Scalar(f5, 1, 5), Error);
}

TEST_CASE("string round trips") {
    const Field q = Field::rationals();
    for (const char* text : {"0", "3", "-4/7", "1/2", "-12"}) {
        CHECK(Scalar::from_string(q, text).to_string() == text);
    }
    const Field f5 = Field::prime(5);
    CHECK(Scalar::from_string(f5, "7").to_string() == "2");
    CHECK(Scalar::from_string(f5, "-1").to_string() == "4");
    CHECK_THROWS_AS((void)Scalar::from_string(q, "x"), Error);
    CHECK_THROWS_AS((void)Scalar::from_string(q, "1/0"), Error);
}
