#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duval/cyclotomic.hpp"

using namespace duval;

namespace {

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

CycNum random_cyc(std::mt19937& rng) {
    std::array<Rat, 4> c;
    for (auto& x : c) x = random_rat(rng);
    return CycNum(c);
}

}  // namespace

TEST_CASE("designated constants satisfy their minimal relations exactly") {
    const CycNum i = CycNum::i();
    CHECK((i * i + CycNum::one()).is_zero());

    const CycNum w = CycNum::omega();
    CHECK((w * w + w + CycNum::one()).is_zero());
    CHECK((w * w * w).is_one());
    CHECK(!w.is_one());

    const CycNum l = CycNum::lam6();
    CHECK((l * l - l + CycNum::one()).is_zero());
}

TEST_CASE("zeta is a primitive 12th root of unity") {
    CHECK(CycNum::zeta_pow(12).is_one());
    for (int k = 1; k < 12; ++k) CHECK(!CycNum::zeta_pow(k).is_one());
    for (int k = 0; k < 24; ++k) CHECK(CycNum::zeta_pow(k) == CycNum::zeta_pow(1).pow(k));
    CHECK(CycNum::zeta_pow(-1) * CycNum::zeta_pow(1) == CycNum::one());
}

TEST_CASE("field axioms hold on randomized triples") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 1200; ++iter) {
        const CycNum a = random_cyc(rng);
        const CycNum b = random_cyc(rng);
        const CycNum c = random_cyc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("inverse round-trip x * x^-1 = 1 for x != 0") {
    std::mt19937 rng(999);
    int tested = 0;
    while (tested < 400) {
        const CycNum x = random_cyc(rng);
        if (x.is_zero()) continue;
        ++tested;
        CHECK((x * x.inverse()).is_one());
    }
    CHECK_THROWS_AS(CycNum::zero().inverse(), DivisionByZeroError);
}

TEST_CASE("printing") {
    CHECK(CycNum(Rat(3)).str() == "3");
    CHECK(CycNum(Rat(-1, 2)).str() == "-1/2");
    CHECK(CycNum::i().str() == "(zeta^3)");
    CHECK(CycNum::omega().str() == "(-1 + zeta^2)");
}
