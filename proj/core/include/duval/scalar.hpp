#ifndef DUVAL_SCALAR_HPP
#define DUVAL_SCALAR_HPP

#include <map>
#include <optional>
#include <string>

#include "duval/cyclotomic.hpp"
#include "duval/symbol.hpp"

namespace duval {

// A Laurent expression in formal symbols with CycNum coefficients: the
// coefficient domain for every equation and transformation in the catalog.
//
// When relation_active() the rewrite lambda^2 -> lambda - 1 is applied
// eagerly, so stored lambda exponents are 0 or 1 and lambda^-1 = 1 - lambda.
// Both flag states share one code path; only canonicalization differs.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(const Rat& r, bool relation = false);
    explicit Scalar(const CycNum& c, bool relation = false);
    explicit Scalar(long n, bool relation = false) : Scalar(Rat(n), relation) {}

    static Scalar zero(bool relation = false) { return Scalar(Rat(0), relation); }
    static Scalar one(bool relation = false) { return Scalar(Rat(1), relation); }
    static Scalar symbol(Symbol s, bool relation = false);
    static Scalar monomial(const CycNum& coeff, const SymExp& exps, bool relation = false);

    bool relation_active() const { return relation_; }
    // Same value re-canonicalized under the other flag.
    Scalar with_relation(bool active) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // A unit in the strict sense: a single monomial with nonzero coefficient.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Valid when is_constant(); zero scalar yields CycNum zero.
    CycNum constant_value() const;

    const std::map<SymExp, CycNum, SymExpGrlexLess>& terms() const { return terms_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // canonical order for containers

    // Inverse of a monomial; NotAUnitError on a sum, DivisionByZeroError on 0.
    Scalar invert() const;

    // Integer power; negative exponents require a monomial base.
    Scalar pow(long e) const;

    // Replaces sym by val everywhere.  val must be a monomial whenever sym
    // occurs with a negative exponent.
    Scalar substitute(Symbol sym, const Scalar& val) const;

    bool contains_symbol(Symbol sym) const;

    std::string str() const;

private:
    void canonicalize();

    std::map<SymExp, CycNum, SymExpGrlexLess> terms_;
    bool relation_ = false;
};

// Exact division in the (Laurent) coefficient ring; absent when b does not
// divide a.  With the lambda relation active, coefficients are treated as
// pairs c0 + c1*lambda and inverted through the norm c0^2 + c0*c1 + c1^2.
std::optional<Scalar> exact_divide(const Scalar& a, const Scalar& b);

// Spec-facing wrappers.
enum class ScalarOp { add, mul };
Scalar scalar_arith(const Scalar& x, const Scalar& y, ScalarOp op);
Scalar scalar_invert(const Scalar& x);
Scalar substitute_symbol(const Scalar& x, Symbol sym, const Scalar& val);

}  // namespace duval

#endif
