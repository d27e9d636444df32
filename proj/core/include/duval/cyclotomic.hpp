#ifndef DUVAL_CYCLOTOMIC_HPP
#define DUVAL_CYCLOTOMIC_HPP

#include <array>
#include <string>

#include "duval/rational.hpp"

namespace duval {

// An element of the 12th cyclotomic field Q(zeta), zeta a primitive 12th
// root of unity, written c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 modulo
// zeta^4 - zeta^2 + 1.  This single field houses all constants the catalog
// needs: a square root of -1, the primitive cube roots of unity, and the
// roots of x^2 - x + 1.
class CycNum {
public:
    CycNum() : c_{} {}
    explicit CycNum(const Rat& r) : c_{r, Rat(0), Rat(0), Rat(0)} {}
    explicit CycNum(long n) : CycNum(Rat(n)) {}
    explicit CycNum(std::array<Rat, 4> c) : c_(std::move(c)) {}

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(Rat(1)); }
    // i = zeta^3, i^2 = -1.
    static CycNum i();
    // omega = zeta^4 = zeta^2 - 1, a primitive cube root of unity.
    static CycNum omega();
    // lam6 = zeta^2, a primitive 6th root of unity: lam6^2 = lam6 - 1.
    static CycNum lam6();
    // zeta^k for any integer k (k reduced mod 12).
    static CycNum zeta_pow(long k);

    const std::array<Rat, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Valid only when is_rational().
    const Rat& rational_part() const { return c_[0]; }

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    // Multiplicative inverse; throws DivisionByZeroError on zero.
    CycNum inverse() const;

    CycNum pow(long e) const;

    bool operator==(const CycNum& o) const { return c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    // Arbitrary total order (coefficientwise), used for canonical containers.
    bool operator<(const CycNum& o) const { return c_ < o.c_; }

    // "3", "-1/2", or "(1 - zeta^2 + 2*zeta^3)" for non-rational values.
    std::string str() const;

private:
    std::array<Rat, 4> c_;  // basis 1, zeta, zeta^2, zeta^3
};

}  // namespace duval

#endif
