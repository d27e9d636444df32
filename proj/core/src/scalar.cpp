#include "duval/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

namespace {

// lambda^e as c0 + c1*lambda under lambda^2 = lambda - 1.
// Forward step (a,b) -> (-b, a+b); inverse step uses lambda^-1 = 1 - lambda.
std::pair<Rat, Rat> lambda_power_pair(long e) {
    Rat a(1), b(0);
    if (e >= 0) {
        for (long k = 0; k < e; ++k) {
            const Rat na = -b;
            const Rat nb = a + b;
            a = na;
            b = nb;
        }
    } else {
        for (long k = 0; k < -e; ++k) {
            const Rat na = a + b;
            const Rat nb = -a;
            a = na;
            b = nb;
        }
    }
    return {a, b};
}

SymExp strip_symbol(const SymExp& exps, Symbol s, int* out_exp) {
    SymExp rest;
    *out_exp = 0;
    for (const auto& [sym, e] : exps) {
        if (sym == s)
            *out_exp = e;
        else
            rest.emplace_back(sym, e);
    }
    return rest;
}

}  // namespace

Scalar::Scalar(const Rat& r, bool relation) : relation_(relation) {
    if (r != 0) terms_.emplace(SymExp{}, CycNum(r));
}

Scalar::Scalar(const CycNum& c, bool relation) : relation_(relation) {
    if (!c.is_zero()) terms_.emplace(SymExp{}, c);
}

Scalar Scalar::symbol(Symbol s, bool relation) {
    return monomial(CycNum::one(), SymExp{{s, 1}}, relation);
}

Scalar Scalar::monomial(const CycNum& coeff, const SymExp& exps, bool relation) {
    Scalar out;
    out.relation_ = relation;
    if (!coeff.is_zero()) out.terms_.emplace(exps, coeff);
    out.canonicalize();
    return out;
}

Scalar Scalar::with_relation(bool active) const {
    Scalar out = *this;
    out.relation_ = active;
    out.canonicalize();
    return out;
}

void Scalar::canonicalize() {
    if (relation_) {
        const Symbol lam = lambda_symbol();
        bool needs_rewrite = false;
        for (const auto& [exps, c] : terms_) {
            const int e = sym_exp_get(exps, lam);
            if (e < 0 || e > 1) {
                needs_rewrite = true;
                break;
            }
        }
        if (needs_rewrite) {
            std::map<SymExp, CycNum, SymExpGrlexLess> out;
            for (const auto& [exps, c] : terms_) {
                int e = 0;
                SymExp rest = strip_symbol(exps, lam, &e);
                if (e >= 0 && e <= 1) {
                    out[exps] += c;
                    continue;
                }
                const auto [p, q] = lambda_power_pair(e);
                if (p != 0) out[rest] += c * CycNum(p);
                if (q != 0) out[sym_exp_mul(rest, SymExp{{lam, 1}})] += c * CycNum(q);
            }
            terms_ = std::move(out);
        }
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

CycNum Scalar::constant_value() const {
    if (terms_.empty()) return CycNum::zero();
    if (!is_constant()) throw Error("scalar is not constant: " + str());
    return terms_.begin()->second;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& [exps, c] : out.terms_) c = -c;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (relation_ != o.relation_) throw FlagMismatchError();
    Scalar out = *this;
    for (const auto& [exps, c] : o.terms_) out.terms_[exps] += c;
    out.canonicalize();
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (relation_ != o.relation_) throw FlagMismatchError();
    Scalar out;
    out.relation_ = relation_;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.terms_[sym_exp_mul(ea, eb)] += ca * cb;
    out.canonicalize();
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    return relation_ == o.relation_ && terms_ == o.terms_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (relation_ != o.relation_) return relation_ < o.relation_;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (sym_exp_grlex_less(it->first, jt->first)) return true;
        if (sym_exp_grlex_less(jt->first, it->first)) return false;
        if (it->second < jt->second) return true;
        if (jt->second < it->second) return false;
    }
    return terms_.size() < o.terms_.size();
}

Scalar Scalar::invert() const {
    if (is_zero()) throw DivisionByZeroError();
    if (terms_.size() > 1) throw NotAUnitError(str());
    const auto& [exps, c] = *terms_.begin();
    return monomial(c.inverse(), sym_exp_neg(exps), relation_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return invert().pow(-e);
    Scalar acc = Scalar::one(relation_);
    for (long k = 0; k < e; ++k) acc *= *this;
    return acc;
}

Scalar Scalar::substitute(Symbol sym, const Scalar& val) const {
    const Scalar v = (val.relation_active() == relation_) ? val : val.with_relation(relation_);
    Scalar acc = Scalar::zero(relation_);
    for (const auto& [exps, c] : terms_) {
        int e = 0;
        const SymExp rest = strip_symbol(exps, sym, &e);
        if (e == 0) {
            acc += monomial(c, exps, relation_);
            continue;
        }
        if (e < 0 && !v.is_monomial()) throw NotAUnitError(v.str());
        acc += monomial(c, rest, relation_) * v.pow(e);
    }
    return acc;
}

bool Scalar::contains_symbol(Symbol sym) const {
    for (const auto& [exps, c] : terms_)
        if (sym_exp_get(exps, sym) != 0) return true;
    return false;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const SymExp& exps = it->first;
        CycNum c = it->second;
        bool neg = false;
        if (c.is_rational() && c.rational_part() < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool show_coeff = !(c.is_one() && !exps.empty());
        if (show_coeff) os << c.str();
        if (!exps.empty()) {
            if (show_coeff) os << "*";
            os << sym_exp_str(exps);
        }
    }
    return os.str();
}

namespace {

// --- exact division helpers ---

using TermMap = std::map<SymExp, CycNum, SymExpGrlexLess>;

// Per-symbol minimum exponent across all terms (absent symbol counts as 0).
SymExp min_exponents(const TermMap& terms) {
    std::map<Symbol, int> mins;
    std::map<Symbol, std::size_t> seen;
    for (const auto& [exps, c] : terms)
        for (const auto& [s, e] : exps) {
            auto it = mins.find(s);
            if (it == mins.end()) {
                mins[s] = e;
                seen[s] = 1;
            } else {
                it->second = std::min(it->second, e);
                seen[s] += 1;
            }
        }
    SymExp out;
    for (auto& [s, m] : mins) {
        if (seen[s] < terms.size()) m = std::min(m, 0);
        if (m != 0) out.emplace_back(s, m);
    }
    return out;
}

TermMap shift_terms(const TermMap& terms, const SymExp& shift) {
    TermMap out;
    for (const auto& [exps, c] : terms) out.emplace(sym_exp_mul(exps, shift), c);
    return out;
}

std::optional<TermMap> divide_polynomial(const TermMap& a0, const TermMap& b0) {
    TermMap q;
    TermMap r = a0;
    const auto ltb = *b0.rbegin();
    while (!r.empty()) {
        const auto lta = *r.rbegin();
        const SymExp qe = sym_exp_mul(lta.first, sym_exp_neg(ltb.first));
        for (const auto& [s, e] : qe)
            if (e < 0) return std::nullopt;
        const CycNum qc = lta.second * ltb.second.inverse();
        q[qe] += qc;
        for (const auto& [eb, cb] : b0) {
            const SymExp e = sym_exp_mul(qe, eb);
            auto it = r.find(e);
            if (it == r.end()) it = r.emplace(e, CycNum::zero()).first;
            it->second = it->second - qc * cb;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return q;
}

// Coefficients as pairs (c0, c1) meaning c0 + c1*lambda in the quotient ring
// with lambda^2 = lambda - 1.
using RCoeff = std::pair<CycNum, CycNum>;
using RTermMap = std::map<SymExp, RCoeff, SymExpGrlexLess>;

RCoeff rmul(const RCoeff& x, const RCoeff& y) {
    return {x.first * y.first - x.second * y.second,
            x.first * y.second + x.second * y.first + x.second * y.second};
}

bool rzero(const RCoeff& x) { return x.first.is_zero() && x.second.is_zero(); }

std::optional<RCoeff> rinv(const RCoeff& x) {
    // (c + d*lambda)^-1 = ((c+d) - d*lambda) / (c^2 + c*d + d^2).
    const CycNum delta = x.first * x.first + x.first * x.second + x.second * x.second;
    if (delta.is_zero()) return std::nullopt;
    const CycNum di = delta.inverse();
    return RCoeff{(x.first + x.second) * di, -x.second * di};
}

RTermMap group_by_lambda(const TermMap& terms) {
    const Symbol lam = lambda_symbol();
    RTermMap out;
    for (const auto& [exps, c] : terms) {
        int e = 0;
        const SymExp rest = strip_symbol(exps, lam, &e);
        auto it = out.find(rest);
        if (it == out.end()) it = out.emplace(rest, RCoeff{CycNum::zero(), CycNum::zero()}).first;
        if (e == 0)
            it->second.first += c;
        else
            it->second.second += c;  // exponent is 0 or 1 after canonicalization
    }
    return out;
}

std::optional<RTermMap> divide_polynomial_relation(const RTermMap& a0, const RTermMap& b0) {
    RTermMap q;
    RTermMap r = a0;
    const auto ltb = *b0.rbegin();
    const auto ltb_inv = rinv(ltb.second);
    if (!ltb_inv) return std::nullopt;
    while (!r.empty()) {
        const auto lta = *r.rbegin();
        const SymExp qe = sym_exp_mul(lta.first, sym_exp_neg(ltb.first));
        for (const auto& [s, e] : qe)
            if (e < 0) return std::nullopt;
        const RCoeff qc = rmul(lta.second, *ltb_inv);
        auto qit = q.find(qe);
        if (qit == q.end())
            q.emplace(qe, qc);
        else {
            qit->second.first += qc.first;
            qit->second.second += qc.second;
        }
        for (const auto& [eb, cb] : b0) {
            const SymExp e = sym_exp_mul(qe, eb);
            const RCoeff prod = rmul(qc, cb);
            auto it = r.find(e);
            if (it == r.end()) it = r.emplace(e, RCoeff{CycNum::zero(), CycNum::zero()}).first;
            it->second.first = it->second.first - prod.first;
            it->second.second = it->second.second - prod.second;
            if (rzero(it->second)) r.erase(it);
        }
    }
    return q;
}

}  // namespace

std::optional<Scalar> exact_divide(const Scalar& a, const Scalar& b) {
    if (a.relation_active() != b.relation_active()) throw FlagMismatchError();
    if (b.is_zero()) return std::nullopt;
    const bool relation = a.relation_active();
    if (a.is_zero()) return Scalar::zero(relation);

    const SymExp ma = min_exponents(a.terms());
    const SymExp mb = min_exponents(b.terms());
    const TermMap a0 = shift_terms(a.terms(), sym_exp_neg(ma));
    const TermMap b0 = shift_terms(b.terms(), sym_exp_neg(mb));
    const SymExp unshift = sym_exp_mul(ma, sym_exp_neg(mb));

    if (!relation) {
        auto q = divide_polynomial(a0, b0);
        if (!q) return std::nullopt;
        Scalar out = Scalar::zero(false);
        for (const auto& [exps, c] : *q)
            out += Scalar::monomial(c, sym_exp_mul(exps, unshift), false);
        return out;
    }

    // lambda exponents are 0/1 after canonicalization, so the lambda part of
    // ma/mb is never negative and the grouped view loses nothing.
    auto q = divide_polynomial_relation(group_by_lambda(a0), group_by_lambda(b0));
    if (!q) return std::nullopt;
    const Symbol lam = lambda_symbol();
    Scalar out = Scalar::zero(true);
    for (const auto& [exps, rc] : *q) {
        const SymExp base = sym_exp_mul(exps, unshift);
        if (!rc.first.is_zero()) out += Scalar::monomial(rc.first, base, true);
        if (!rc.second.is_zero())
            out += Scalar::monomial(rc.second, sym_exp_mul(base, SymExp{{lam, 1}}), true);
    }
    return out;
}

Scalar scalar_arith(const Scalar& x, const Scalar& y, ScalarOp op) {
    if (x.relation_active() != y.relation_active()) throw FlagMismatchError();
    return op == ScalarOp::add ? x + y : x * y;
}

Scalar scalar_invert(const Scalar& x) { return x.invert(); }

Scalar substitute_symbol(const Scalar& x, Symbol sym, const Scalar& val) {
    return x.substitute(sym, val);
}

}  // namespace duval
