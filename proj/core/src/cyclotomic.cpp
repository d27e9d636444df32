#include "duval/cyclotomic.hpp"

#include <sstream>

namespace duval {

CycNum CycNum::i() { return CycNum(std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(1)}); }
CycNum CycNum::omega() { return CycNum(std::array<Rat, 4>{Rat(-1), Rat(0), Rat(1), Rat(0)}); }
CycNum CycNum::lam6() { return CycNum(std::array<Rat, 4>{Rat(0), Rat(0), Rat(1), Rat(0)}); }

CycNum CycNum::zeta_pow(long k) {
    k %= 12;
    if (k < 0) k += 12;
    // zeta^6 = -1, so powers >= 6 are negatives of low powers.
    std::array<Rat, 4> c{};
    const bool neg = k >= 6;
    const long r = k % 6;
    auto set = [&](int idx, long val) { c[idx] = Rat(neg ? -val : val); };
    switch (r) {
        case 0: set(0, 1); break;
        case 1: set(1, 1); break;
        case 2: set(2, 1); break;
        case 3: set(3, 1); break;
        case 4:  // zeta^4 = zeta^2 - 1
            set(0, -1);
            set(2, 1);
            break;
        case 5:  // zeta^5 = zeta^3 - zeta
            set(1, -1);
            set(3, 1);
            break;
    }
    return CycNum(c);
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycNum::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycNum CycNum::operator-() const {
    std::array<Rat, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = -c_[k];
    return CycNum(c);
}

CycNum CycNum::operator+(const CycNum& o) const {
    std::array<Rat, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = c_[k] + o.c_[k];
    return CycNum(c);
}

CycNum CycNum::operator-(const CycNum& o) const {
    std::array<Rat, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = c_[k] - o.c_[k];
    return CycNum(c);
}

CycNum CycNum::operator*(const CycNum& o) const {
    // Convolve to degree 6, then reduce with zeta^4 = zeta^2 - 1,
    // zeta^5 = zeta^3 - zeta, zeta^6 = -1.
    std::array<Rat, 7> raw{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            raw[a + b] += c_[a] * o.c_[b];
        }
    }
    std::array<Rat, 4> c{raw[0], raw[1], raw[2], raw[3]};
    c[0] += -raw[4] - raw[6];
    c[2] += raw[4];
    c[1] += -raw[5];
    c[3] += raw[5];
    return CycNum(c);
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (is_rational()) {
        std::array<Rat, 4> c{};
        c[0] = Rat(1) / c_[0];
        return CycNum(c);
    }
    // Solve M y = e0 where column j of M is (*this) * zeta^j in the basis.
    Rat m[4][8] = {};
    for (int j = 0; j < 4; ++j) {
        const CycNum col = *this * zeta_pow(j);
        for (int k = 0; k < 4; ++k) m[k][j] = col.coeffs()[k];
    }
    for (int k = 0; k < 4; ++k) m[k][4 + k] = Rat(k == 0 ? 1 : 0);
    // Gaussian elimination with exact rationals.
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw Error("cyclotomic inverse: singular multiplication matrix");
        if (pivot != col)
            for (int j = 0; j < 8; ++j) std::swap(m[pivot][j], m[col][j]);
        const Rat p = m[col][col];
        for (int j = 0; j < 8; ++j) m[col][j] /= p;
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rat f = m[row][col];
            for (int j = 0; j < 8; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::array<Rat, 4> y;
    for (int k = 0; k < 4; ++k) y[k] = m[k][4];
    return CycNum(y);
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = one();
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycNum::str() const {
    if (is_rational()) return rat_to_string(c_[0]);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        const bool unit_coeff = (v == 1 && k > 0);
        if (!unit_coeff) os << rat_to_string(v);
        if (k > 0) {
            if (!unit_coeff) os << "*";
            os << "zeta";
            if (k > 1) os << "^" << k;
        }
    }
    os << ")";
    return os.str();
}

}  // namespace duval
