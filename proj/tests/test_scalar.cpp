#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duval/parser.hpp"
#include "duval/scalar.hpp"

using namespace duval;

namespace {

Scalar sym(const char* name, bool relation = false) {
    return Scalar::symbol(intern_symbol(name), relation);
}

Scalar random_scalar(std::mt19937& rng, const std::vector<Symbol>& symbols, bool relation,
                     bool laurent = true) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 2);
    Scalar acc = Scalar::zero(relation);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        SymExp e;
        for (Symbol s : symbols) {
            const int x = expo(rng);
            if (x != 0) e.emplace_back(s, x);
        }
        acc += Scalar::monomial(CycNum(Rat(coeff(rng))), e, relation);
    }
    return acc;
}

}  // namespace

TEST_CASE("lambda * lambda rewrites to lambda - 1 when the relation is active") {
    const Scalar lam = sym("lambda", true);
    const Scalar prod = scalar_arith(lam, lam, ScalarOp::mul);
    CHECK(prod == lam - Scalar::one(true));
}

TEST_CASE("t * t^-1 = 1") {
    const Scalar t = sym("t");
    CHECK(scalar_arith(t, t.invert(), ScalarOp::mul).is_one());
}

TEST_CASE("omega * omega reduces to -omega - 1") {
    const Scalar w(CycNum::omega());
    CHECK(scalar_arith(w, w, ScalarOp::mul) == -w - Scalar::one());
}

TEST_CASE("mismatched relation flags are rejected") {
    const Scalar a = sym("t", false);
    const Scalar b = sym("t", true);
    CHECK_THROWS_AS(scalar_arith(a, b, ScalarOp::add), FlagMismatchError);
}

TEST_CASE("scalar_invert") {
    const Scalar t = sym("t");
    SUBCASE("2 t^2 inverts to 1/2 t^-2") {
        const Scalar x = Scalar(Rat(2)) * t * t;
        const Scalar expected = Scalar(Rat(1, 2)) * t.pow(-2);
        CHECK(scalar_invert(x) == expected);
        CHECK((x * scalar_invert(x)).is_one());
    }
    SUBCASE("i inverts to -i") {
        const Scalar i(CycNum::i());
        CHECK(scalar_invert(i) == -i);
    }
    SUBCASE("a sum of two terms is not a unit") {
        const Scalar lam = sym("lambda");
        CHECK_THROWS_AS(scalar_invert(lam + Scalar::one()), NotAUnitError);
        CHECK_THROWS_AS(scalar_invert(Scalar::zero()), DivisionByZeroError);
    }
    SUBCASE("lambda inverts to 1 - lambda under the relation") {
        const Scalar lam = sym("lambda", true);
        const Scalar inv = scalar_invert(lam);
        CHECK(inv == Scalar::one(true) - lam);
        CHECK((lam * inv).is_one());
    }
}

TEST_CASE("substitute_symbol") {
    const Symbol t = intern_symbol("t");
    const Symbol lam = intern_symbol("lambda");
    const Symbol a = intern_symbol("a");
    SUBCASE("power rule: t^2 at t -> t^-1 gives t^-2") {
        const Scalar x = sym("t").pow(2);
        CHECK(substitute_symbol(x, t, sym("t").invert()) == sym("t").pow(-2));
    }
    SUBCASE("lambda(lambda-1) at lambda -> -1 gives 2") {
        const Scalar x = sym("lambda") * (sym("lambda") - Scalar::one());
        CHECK(substitute_symbol(x, lam, Scalar(Rat(-1))) == Scalar(Rat(2)));
    }
    SUBCASE("a^2 at a -> -i a gives -a^2") {
        const Scalar x = sym("a").pow(2);
        const Scalar val = Scalar(CycNum::i()) * -sym("a");
        CHECK(substitute_symbol(x, a, val) == -x);
    }
    SUBCASE("substituting a symbol by itself is the identity") {
        std::mt19937 rng(77);
        const std::vector<Symbol> syms{t, a};
        for (int iter = 0; iter < 200; ++iter) {
            const Scalar x = random_scalar(rng, syms, false);
            CHECK(substitute_symbol(x, t, sym("t")) == x);
        }
    }
    SUBCASE("negative exponent needs a unit value") {
        const Scalar x = sym("t").pow(-1);
        CHECK_THROWS_AS(substitute_symbol(x, t, sym("a") + Scalar::one()), NotAUnitError);
    }
}

TEST_CASE("reduction commutes with evaluating lambda at the sixth root") {
    // Substituting lambda := zeta^2 into a scalar and into its relation-
    // reduced form gives the same cyclotomic coefficients.
    std::mt19937 rng(4242);
    const Symbol lam = intern_symbol("lambda");
    const Symbol t = intern_symbol("t");
    const Scalar root(CycNum::lam6());
    for (int iter = 0; iter < 300; ++iter) {
        const Scalar raw = random_scalar(rng, {lam, t}, false, false);
        const Scalar reduced = raw.with_relation(true);
        const Scalar a = substitute_symbol(raw, lam, root);
        const Scalar b = substitute_symbol(reduced, lam, root.with_relation(true));
        CHECK(a == b.with_relation(false));
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(31337);
    const std::vector<Symbol> syms{intern_symbol("lambda"), intern_symbol("t")};
    for (bool relation : {false, true}) {
        int tested = 0;
        while (tested < 250) {
            const Scalar a = random_scalar(rng, syms, relation);
            const Scalar b = random_scalar(rng, syms, relation);
            if (b.is_zero()) continue;
            ++tested;
            const auto q = exact_divide(a * b, b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

TEST_CASE("exact division detects non-divisibility") {
    const Scalar t = sym("t");
    const Scalar one = Scalar::one();
    CHECK(!exact_divide(t + one, t * t + one).has_value());
    CHECK(exact_divide(Scalar::zero(), t).has_value());
    CHECK(!exact_divide(one, Scalar::zero()).has_value());
    // Laurent quotient: t^-2 / t^-1 = t^-1.
    CHECK(*exact_divide(t.pow(-2), t.pow(-1)) == t.pow(-1));
    // (lambda - 1) / lambda = lambda under the active relation.
    const Scalar lam = sym("lambda", true);
    const auto q = exact_divide(lam - Scalar::one(true), lam);
    REQUIRE(q.has_value());
    CHECK(*q == lam);
}

TEST_CASE("parse_scalar round-trips simple expressions") {
    CHECK(parse_scalar("1/2") == Scalar(Rat(1, 2)));
    CHECK(parse_scalar("-eps2") == Scalar(-CycNum::i()));
    CHECK(parse_scalar("t^-1", {"t"}) == sym("t").invert());
    CHECK(parse_scalar("-eps3^2*a", {"a"}) ==
          Scalar(-(CycNum::omega() * CycNum::omega())) * sym("a"));
    CHECK_THROWS_AS(parse_scalar("nope"), Error);
}
