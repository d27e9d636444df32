#ifndef DUVAL_POLY_HPP
#define DUVAL_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duval/scalar.hpp"

namespace duval {

// Weighted projective ambient space: positive weights plus coordinate names.
struct Ambient {
    std::vector<int> weights;
    std::vector<std::string> coords;

    Ambient() = default;
    Ambient(std::vector<int> w, std::vector<std::string> c);

    std::size_t dim() const { return weights.size(); }
    bool operator==(const Ambient& o) const { return weights == o.weights && coords == o.coords; }
    bool operator!=(const Ambient& o) const { return !(*this == o); }

    // Index of a coordinate name; throws on unknown names.
    std::size_t coord_index(const std::string& name) const;
};

using Exponents = std::vector<int>;

// Graded-lex order on coordinate exponent vectors (fixed globally so
// canonical forms and printed output are deterministic).
struct ExpGrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Outcome of a weighted-degree query: every term the same degree, mixed
// degrees, or the zero polynomial (distinguished from both).
struct WeightedDegree {
    enum class Kind { uniform, mixed, zero };
    Kind kind = Kind::zero;
    long degree = 0;

    static WeightedDegree uniform(long d) { return {Kind::uniform, d}; }
    static WeightedDegree mixed() { return {Kind::mixed, 0}; }
    static WeightedDegree zero_poly() { return {Kind::zero, 0}; }
    bool is_uniform() const { return kind == Kind::uniform; }
    bool operator==(const WeightedDegree& o) const { return kind == o.kind && degree == o.degree; }
};

// Sparse multivariate polynomial in ambient coordinates with Scalar
// coefficients.  All stored coefficients are nonzero and share one
// lambda-relation flag; exponent vectors have length dim().
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t dim) : dim_(dim) {}

    static Poly zero(std::size_t dim) { return Poly(dim); }
    static Poly constant(std::size_t dim, const Scalar& c);
    static Poly coordinate(std::size_t dim, std::size_t i);
    static Poly monomial(std::size_t dim, const Exponents& e, const Scalar& c);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Scalar, ExpGrlexLess>& terms() const { return terms_; }

    bool relation_active() const;
    Poly with_relation(bool active) const;
    Poly substitute_scalar_symbol(Symbol sym, const Scalar& val) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }

    // Nonnegative integer power.
    Poly pow(long e) const;

    bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical text form, re-parseable by parse_poly.
    std::string str(const Ambient& ambient) const;

private:
    void add_term(const Exponents& e, const Scalar& c);
    void prune();

    std::size_t dim_ = 0;
    std::map<Exponents, Scalar, ExpGrlexLess> terms_;
};

WeightedDegree weighted_degree(const Poly& p, const std::vector<int>& weights);

// Substitutes images[i] for coordinate i; images must match p's dimension.
Poly substitute_tuple(const Poly& p, const std::vector<Poly>& images);

// The unit c with g = c * f, when it exists.  "Unit" here means a nonzero
// scalar; c is recovered from f's leading term by exact division and then
// verified against every term.
std::optional<Scalar> proportionality_scalar(const Poly& g, const Poly& f);

}  // namespace duval

#endif
