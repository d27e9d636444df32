#include "duval/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

Ambient::Ambient(std::vector<int> w, std::vector<std::string> c)
    : weights(std::move(w)), coords(std::move(c)) {
    if (weights.size() != coords.size())
        throw DimensionMismatchError("weights and coordinate names differ in length");
    if (weights.size() < 3) throw Error("ambient needs at least 3 coordinates");
    for (int wi : weights)
        if (wi < 1) throw Error("ambient weights must be positive");
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i] == coords[j]) throw Error("duplicate coordinate name " + coords[i]);
}

std::size_t Ambient::coord_index(const std::string& name) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == name) return i;
    throw Error("unknown coordinate '" + name + "'");
}

bool ExpGrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(std::size_t dim, const Scalar& c) {
    Poly p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
}

Poly Poly::coordinate(std::size_t dim, std::size_t i) {
    if (i >= dim) throw DimensionMismatchError("coordinate index out of range");
    Exponents e(dim, 0);
    e[i] = 1;
    Poly p(dim);
    p.add_term(e, Scalar::one());
    return p;
}

Poly Poly::monomial(std::size_t dim, const Exponents& e, const Scalar& c) {
    if (e.size() != dim) throw DimensionMismatchError("exponent vector length");
    for (int x : e)
        if (x < 0) throw Error("negative coordinate exponent");
    Poly p(dim);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool Poly::relation_active() const {
    return !terms_.empty() && terms_.begin()->second.relation_active();
}

Poly Poly::with_relation(bool active) const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.with_relation(active));
    return out;
}

Poly Poly::substitute_scalar_symbol(Symbol sym, const Scalar& val) const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(sym, val));
    return out;
}

Poly Poly::operator-() const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (dim_ != o.dim_) throw DimensionMismatchError("polynomial dimensions differ");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (dim_ != o.dim_) throw DimensionMismatchError("polynomial dimensions differ");
    Poly out(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(dim_);
            for (std::size_t k = 0; k < dim_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly out(dim_);
    for (const auto& [e, tc] : terms_) out.add_term(e, tc * c);
    return out;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    Poly acc = Poly::constant(dim_, Scalar::one(relation_active()));
    for (long k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

std::string Poly::str(const Ambient& ambient) const {
    if (terms_.empty()) return "0";
    if (ambient.dim() != dim_) throw DimensionMismatchError("ambient does not match polynomial");
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        const Scalar& c = it->second;
        std::string cs = c.str();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && c.terms().size() == 1) {
            neg = true;
            cs = (-c).str();
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool has_coords = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        const Scalar abs_c = neg ? -c : c;
        const bool show_coeff = !(abs_c.is_one() && has_coords);
        if (show_coeff) {
            if (abs_c.terms().size() > 1)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        bool need_star = show_coeff;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (e[k] == 0) continue;
            if (need_star) os << "*";
            os << ambient.coords[k];
            if (e[k] != 1) os << "^" << e[k];
            need_star = true;
        }
        if (!has_coords && !show_coeff) os << cs;
    }
    return os.str();
}

WeightedDegree weighted_degree(const Poly& p, const std::vector<int>& weights) {
    if (weights.size() != p.dim()) throw DimensionMismatchError("weights length");
    if (p.is_zero()) return WeightedDegree::zero_poly();
    bool have = false;
    long deg = 0;
    for (const auto& [e, c] : p.terms()) {
        long d = 0;
        for (std::size_t k = 0; k < e.size(); ++k) d += static_cast<long>(e[k]) * weights[k];
        if (!have) {
            deg = d;
            have = true;
        } else if (d != deg) {
            return WeightedDegree::mixed();
        }
    }
    return WeightedDegree::uniform(deg);
}

Poly substitute_tuple(const Poly& p, const std::vector<Poly>& images) {
    if (images.size() != p.dim()) throw DimensionMismatchError("image tuple length");
    const std::size_t dim = images.empty() ? p.dim() : images[0].dim();
    for (const auto& im : images)
        if (im.dim() != dim) throw DimensionMismatchError("image dimensions differ");
    const bool relation = p.relation_active();

    // Memoized coordinate powers; exponents in catalog data are small.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(dim, Scalar::one(images[i].relation_active() || relation)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Poly acc(dim);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(dim, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc += term;
    }
    return acc;
}

std::optional<Scalar> proportionality_scalar(const Poly& g, const Poly& f) {
    if (f.is_zero()) throw Error("proportionality against the zero polynomial");
    if (g.dim() != f.dim()) throw DimensionMismatchError("polynomial dimensions differ");
    if (g.is_zero()) return std::nullopt;  // c = 0 is not a unit
    if (g.term_count() != f.term_count()) return std::nullopt;
    const auto& [lead_e, lead_c] = *f.terms().rbegin();
    auto git = g.terms().find(lead_e);
    if (git == g.terms().end()) return std::nullopt;
    auto c = exact_divide(git->second, lead_c);
    if (!c || c->is_zero()) return std::nullopt;
    if (g != f * *c) return std::nullopt;
    return c;
}

}  // namespace duval
