#include "duval/graded_map.hpp"

#include <numeric>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

GradedMap::GradedMap(std::string name, Ambient ambient, std::vector<Poly> images,
                     std::optional<Symbol> param, DeclaredInverse inverse)
    : name_(std::move(name)),
      ambient_(std::move(ambient)),
      images_(std::move(images)),
      param_(param),
      inverse_(std::move(inverse)) {
    if (images_.size() != ambient_.dim())
        throw DimensionMismatchError("map '" + name_ + "' needs " +
                                     std::to_string(ambient_.dim()) + " images");
    bool any_nonzero = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Poly& im = images_[i];
        if (im.dim() != ambient_.dim())
            throw DimensionMismatchError("image of " + ambient_.coords[i] + " in map '" + name_ + "'");
        if (im.is_zero()) continue;
        any_nonzero = true;
        const WeightedDegree d = weighted_degree(im, ambient_.weights);
        if (!d.is_uniform() || d.degree != ambient_.weights[i])
            throw GradednessError("map '" + name_ + "', coordinate " + ambient_.coords[i] +
                                  ": image is not quasi-homogeneous of weight " +
                                  std::to_string(ambient_.weights[i]));
    }
    if (!any_nonzero) throw Error("map '" + name_ + "' has all-zero images");
}

GradedMap GradedMap::renamed(std::string name) const {
    GradedMap out = *this;
    out.name_ = std::move(name);
    return out;
}

GradedMap GradedMap::substituted(Symbol sym, const Scalar& value) const {
    std::vector<Poly> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(im.substitute_scalar_symbol(sym, value));
    std::optional<Symbol> param = param_;
    if (param && *param == sym && !value.contains_symbol(sym)) param.reset();
    return GradedMap(name_, ambient_, std::move(images), param, inverse_);
}

GradedMap GradedMap::with_relation(bool active) const {
    std::vector<Poly> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(im.with_relation(active));
    return GradedMap(name_, ambient_, std::move(images), param_, inverse_);
}

std::string GradedMap::tuple_str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) os << " : ";
        os << images_[i].str(ambient_);
    }
    os << ")";
    return os.str();
}

GradedMap identity_map(const Ambient& ambient, bool relation) {
    std::vector<Poly> images;
    images.reserve(ambient.dim());
    for (std::size_t i = 0; i < ambient.dim(); ++i) {
        Poly c = Poly::coordinate(ambient.dim(), i);
        images.push_back(relation ? c.with_relation(true) : c);
    }
    return GradedMap("id", ambient, std::move(images), std::nullopt, InverseSelf{});
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.ambient() != g.ambient()) throw WeightMismatchError();
    std::vector<Poly> images;
    images.reserve(f.images().size());
    for (const auto& im : f.images()) images.push_back(substitute_tuple(im, g.images()));
    // The GradedMap constructor re-verifies gradedness; a violation here
    // signals corrupted catalog data.
    return GradedMap(f.name() + "*" + g.name(), f.ambient(), std::move(images));
}

namespace {

// Integer nth root when exact; nullopt otherwise.
std::optional<Int> exact_nth_root(const Int& value, int n) {
    if (value < 0) return std::nullopt;
    if (value == 0 || value == 1) return value;
    Int lo = 1, hi = value;
    while (lo <= hi) {
        const Int mid = (lo + hi) / 2;
        Int p = 1;
        bool over = false;
        for (int k = 0; k < n; ++k) {
            p *= mid;
            if (p > value) {
                over = true;
                break;
            }
        }
        if (!over && p == value) return mid;
        if (over)
            hi = mid - 1;
        else
            lo = mid + 1;
    }
    return std::nullopt;
}

// Candidate scalar s with s^n = u, for monomial u with rational coefficient;
// twists by the 12 roots of unity available in the coefficient field.
std::optional<Scalar> monomial_nth_root(const Scalar& u, int n) {
    if (!u.is_monomial()) return std::nullopt;
    const auto& [exps, coeff] = *u.terms().begin();
    SymExp root_exps;
    for (const auto& [s, e] : exps) {
        if (e % n != 0) return std::nullopt;
        root_exps.emplace_back(s, e / n);
    }
    if (!coeff.is_rational()) return std::nullopt;
    Rat q = coeff.rational_part();
    const bool neg = q < 0;
    if (neg) q = -q;
    const auto num = exact_nth_root(boost::multiprecision::numerator(q), n);
    const auto den = exact_nth_root(boost::multiprecision::denominator(q), n);
    if (!num || !den) return std::nullopt;
    const CycNum base(Rat(*num, *den));
    for (int k = 0; k < 12; ++k) {
        const CycNum cand = base * CycNum::zeta_pow(k);
        if (cand.pow(n) == coeff)
            return Scalar::monomial(cand, root_exps, u.relation_active());
    }
    return std::nullopt;
}

}  // namespace

bool projective_equal(const GradedMap& f, const GradedMap& g) {
    if (f.ambient() != g.ambient()) throw WeightMismatchError();
    const auto& w = f.ambient().weights;
    std::vector<std::size_t> nonzero;
    std::vector<Scalar> ratios(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool fz = f.images()[i].is_zero();
        const bool gz = g.images()[i].is_zero();
        if (fz != gz) return false;
        if (fz) continue;
        auto r = proportionality_scalar(f.images()[i], g.images()[i]);
        if (!r) return false;
        ratios[i] = *r;
        nonzero.push_back(i);
    }
    if (nonzero.empty()) return false;

    int gcd = 0;
    for (std::size_t i : nonzero) gcd = std::gcd(gcd, w[i]);

    // Pairwise power consistency: r_i^{w_j/g} = r_j^{w_i/g} for all pairs is
    // exactly solvability of u^{w_i/g} = r_i over the fraction field.
    for (std::size_t a = 0; a < nonzero.size(); ++a)
        for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
            const std::size_t i = nonzero[a], j = nonzero[b];
            if (ratios[i].pow(w[j] / gcd) != ratios[j].pow(w[i] / gcd)) return false;
        }
    if (gcd == 1) return true;

    // gcd > 1: construct u = s^gcd by a Bezout combination over the reduced
    // weights, then look for an actual gcd-th root among monomials twisted
    // by roots of unity.
    Scalar u = Scalar::one(ratios[nonzero[0]].relation_active());
    {
        // Integers bez[k] with sum bez[k] * (w_k/gcd) = 1.
        std::vector<long> bez(nonzero.size(), 0);
        bez[0] = 1;
        long acc = w[nonzero[0]] / gcd;
        for (std::size_t k = 1; k < nonzero.size() && acc != 1; ++k) {
            // Extended Euclid: p*acc + q*wk = g2.
            long a0 = acc, b0 = w[nonzero[k]] / gcd;
            long p0 = 1, p1 = 0, q0 = 0, q1 = 1;
            while (b0 != 0) {
                const long quo = a0 / b0;
                long t = a0 - quo * b0;
                a0 = b0;
                b0 = t;
                t = p0 - quo * p1;
                p0 = p1;
                p1 = t;
                t = q0 - quo * q1;
                q0 = q1;
                q1 = t;
            }
            for (std::size_t m = 0; m < k; ++m) bez[m] *= p0;
            bez[k] = q0;
            acc = a0;
        }
        if (acc != 1) return false;
        for (std::size_t k = 0; k < nonzero.size(); ++k) {
            if (bez[k] == 0) continue;
            const Scalar& r = ratios[nonzero[k]];
            if (bez[k] > 0) {
                u *= r.pow(bez[k]);
            } else {
                auto inv = exact_divide(Scalar::one(r.relation_active()), r);
                if (!inv) return false;
                u *= inv->pow(-bez[k]);
            }
        }
    }
    auto s = monomial_nth_root(u, gcd);
    if (!s) return false;
    for (int k = 0; k < 12; ++k) {
        const Scalar cand = *s * Scalar(CycNum::zeta_pow(k), s->relation_active());
        bool all = true;
        for (std::size_t i : nonzero)
            if (ratios[i] != cand.pow(w[i])) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

std::string lambda_mode_label(const LambdaMode& mode) {
    if (std::holds_alternative<LambdaGeneric>(mode)) return "generic";
    if (std::holds_alternative<LambdaSixthRoot>(mode)) return "sixth-root";
    return rat_to_string(std::get<LambdaValue>(mode).value);
}

LambdaMode lambda_mode_from_label(const std::string& label) {
    if (label == "generic") return LambdaGeneric{};
    if (label == "sixth-root") return LambdaSixthRoot{};
    const Rat v = rat_from_string(label);
    if (v == 0 || v == 1) throw Error("lambda must avoid 0 and 1");
    return LambdaValue{v};
}

Surface::Surface(Ambient ambient, Poly equation, LambdaMode mode)
    : ambient_(std::move(ambient)), equation_(std::move(equation)), mode_(std::move(mode)) {
    if (equation_.is_zero()) throw Error("surface equation is zero");
    const WeightedDegree d = weighted_degree(equation_, ambient_.weights);
    if (!d.is_uniform())
        throw GradednessError("surface equation is not quasi-homogeneous");
    degree_ = d.degree;
}

Scalar specialize_scalar(const Scalar& s, const LambdaMode& mode) {
    if (std::holds_alternative<LambdaGeneric>(mode)) return s;
    if (std::holds_alternative<LambdaSixthRoot>(mode)) return s.with_relation(true);
    return s.substitute(lambda_symbol(),
                        Scalar(std::get<LambdaValue>(mode).value, s.relation_active()));
}

Poly specialize_poly(const Poly& p, const LambdaMode& mode) {
    if (std::holds_alternative<LambdaGeneric>(mode)) return p;
    if (std::holds_alternative<LambdaSixthRoot>(mode)) return p.with_relation(true);
    return p.substitute_scalar_symbol(lambda_symbol(),
                                      Scalar(std::get<LambdaValue>(mode).value));
}

GradedMap specialize_map(const GradedMap& m, const LambdaMode& mode) {
    if (std::holds_alternative<LambdaGeneric>(mode)) return m;
    std::vector<Poly> images;
    images.reserve(m.images().size());
    for (const auto& im : m.images()) images.push_back(specialize_poly(im, mode));
    DeclaredInverse inv = m.declared_inverse();
    if (auto* sub = std::get_if<InverseSub>(&inv)) sub->value = specialize_scalar(sub->value, mode);
    return GradedMap(m.name(), m.ambient(), std::move(images), m.param(), std::move(inv));
}

Scalar verify_automorphism(const Surface& surface, const GradedMap& m) {
    if (surface.ambient() != m.ambient()) throw WeightMismatchError();
    const Poly& f = surface.equation();
    const Poly composed = substitute_tuple(f, m.images());
    auto c = proportionality_scalar(composed, f);
    if (!c) {
        // Residual for diagnostics: what is left after removing the best
        // leading-term candidate multiple.
        Poly residual = composed;
        const auto& [lead_e, lead_c] = *f.terms().rbegin();
        auto git = composed.terms().find(lead_e);
        if (git != composed.terms().end()) {
            if (auto c0 = exact_divide(git->second, lead_c)) residual = composed - f * *c0;
        }
        throw NotAnAutomorphismError(m.name(), residual.str(surface.ambient()));
    }
    return *c;
}

int element_order(const GradedMap& m, int cap) {
    if (m.param())
        throw Error("map '" + m.name() + "' has a free family symbol; its order is not finite");
    if (cap < 1) throw Error("order cap must be positive");
    const bool relation = !m.images().empty() && m.images()[0].relation_active();
    const GradedMap id = identity_map(m.ambient(), relation);
    GradedMap power = m;
    for (int n = 1; n <= cap; ++n) {
        if (projective_equal(power, id)) return n;
        if (n < cap) power = compose(power, m);
    }
    throw OrderCapError(cap);
}

GradedMap resolve_declared_inverse(const GradedMap& m) {
    if (std::holds_alternative<std::monostate>(m.declared_inverse()))
        throw Error("map '" + m.name() + "' has no declared inverse");
    if (std::holds_alternative<InverseSelf>(m.declared_inverse())) return m;
    if (const auto* sub = std::get_if<InverseSub>(&m.declared_inverse()))
        return m.substituted(sub->sym, sub->value);
    const int e = std::get<InversePower>(m.declared_inverse()).exponent;
    if (e < 1) throw Error("declared inverse power must be >= 1");
    GradedMap acc = m;
    for (int k = 1; k < e; ++k) acc = compose(acc, m);
    return acc.renamed(m.name() + "^-1");
}

bool verify_declared_inverse(const GradedMap& m) {
    const GradedMap inv = resolve_declared_inverse(m);
    const bool relation = !m.images().empty() && m.images()[0].relation_active();
    const GradedMap id = identity_map(m.ambient(), relation);
    return projective_equal(compose(m, inv), id) && projective_equal(compose(inv, m), id);
}

bool verify_family_relation(const GradedMap& outer, const GradedMap& family, const Scalar& sub) {
    if (!family.param()) throw Error("map '" + family.name() + "' is not a one-parameter family");
    const GradedMap outer_inv = resolve_declared_inverse(outer);
    const GradedMap conj = compose(compose(outer, family), outer_inv);
    const GradedMap expected = family.substituted(*family.param(), sub);
    return projective_equal(conj, expected);
}

GradedMap word_product(const std::vector<GradedMap>& word, const Ambient& ambient, bool relation) {
    if (word.empty()) return identity_map(ambient, relation);
    GradedMap acc = word.front();
    for (std::size_t k = 1; k < word.size(); ++k) acc = compose(acc, word[k]);
    return acc;
}

bool verify_word_relation(const std::vector<GradedMap>& lhs, const std::vector<GradedMap>& rhs,
                          const Ambient& ambient, bool relation) {
    return projective_equal(word_product(lhs, ambient, relation),
                            word_product(rhs, ambient, relation));
}

}  // namespace duval
