#ifndef DUVAL_GRADED_MAP_HPP
#define DUVAL_GRADED_MAP_HPP

#include <optional>
#include <variant>

#include "duval/poly.hpp"

namespace duval {

// How a map's inverse is declared in catalog data.  Inverses are declared
// and verified, never computed symbolically.
struct InverseSelf {};
struct InverseSub {
    Symbol sym;
    Scalar value;
};
struct InversePower {
    int exponent;  // m^exponent
};
using DeclaredInverse = std::variant<std::monostate, InverseSelf, InverseSub, InversePower>;

// A named graded self-map of a weighted projective space: coordinate i maps
// to a quasi-homogeneous polynomial of weight w_i (checked at construction).
class GradedMap {
public:
    GradedMap(std::string name, Ambient ambient, std::vector<Poly> images,
              std::optional<Symbol> param = std::nullopt,
              DeclaredInverse inverse = std::monostate{});

    const std::string& name() const { return name_; }
    const Ambient& ambient() const { return ambient_; }
    const std::vector<Poly>& images() const { return images_; }
    const std::optional<Symbol>& param() const { return param_; }
    const DeclaredInverse& declared_inverse() const { return inverse_; }
    bool has_declared_inverse() const {
        return !std::holds_alternative<std::monostate>(inverse_);
    }

    GradedMap renamed(std::string name) const;
    // Substitutes a formal symbol in every image (used for parameter values
    // and lambda specialization); gradedness is unaffected.
    GradedMap substituted(Symbol sym, const Scalar& value) const;
    GradedMap with_relation(bool active) const;

    std::string tuple_str() const;

private:
    std::string name_;
    Ambient ambient_;
    std::vector<Poly> images_;
    std::optional<Symbol> param_;
    DeclaredInverse inverse_;
};

GradedMap identity_map(const Ambient& ambient, bool relation = false);

// f after g (g applied first): image1 of result = images of f with
// coordinates replaced by images of g.  Gradedness is re-verified.
GradedMap compose(const GradedMap& f, const GradedMap& g);

// Equality in Aut of the weighted projective space: true iff a nonzero
// scalar s exists with image_i(f) = s^{w_i} * image_i(g) for all i.  With
// gcd of the relevant weights 1 this is decided through pairwise power
// consistency (equivalent to solving s by a Bezout combination); otherwise
// a candidate root is extracted and twisted by the roots of unity of
// Q(zeta_12).
bool projective_equal(const GradedMap& f, const GradedMap& g);

// The lambda specialization a surface is verified under.
struct LambdaGeneric {};
struct LambdaValue {
    Rat value;
};
struct LambdaSixthRoot {};  // activates the rewrite lambda^2 -> lambda - 1
using LambdaMode = std::variant<LambdaGeneric, LambdaValue, LambdaSixthRoot>;

std::string lambda_mode_label(const LambdaMode& mode);
LambdaMode lambda_mode_from_label(const std::string& label);

// A hypersurface in a weighted projective space, under a lambda mode.
class Surface {
public:
    Surface(Ambient ambient, Poly equation, LambdaMode mode = LambdaGeneric{});

    const Ambient& ambient() const { return ambient_; }
    const Poly& equation() const { return equation_; }
    const LambdaMode& mode() const { return mode_; }
    long degree() const { return degree_; }

private:
    Ambient ambient_;
    Poly equation_;
    LambdaMode mode_;
    long degree_;
};

Scalar specialize_scalar(const Scalar& s, const LambdaMode& mode);
Poly specialize_poly(const Poly& p, const LambdaMode& mode);
GradedMap specialize_map(const GradedMap& m, const LambdaMode& mode);

// The unit c with equation(m(x)) = c * equation(x); throws
// NotAnAutomorphismError when no such c exists.
Scalar verify_automorphism(const Surface& surface, const GradedMap& m);

// Least n <= cap with m^n projectively the identity; m must have no free
// family symbol.  Throws OrderCapError past the cap.
int element_order(const GradedMap& m, int cap = 24);

// Expands the declared inverse into an actual map.
GradedMap resolve_declared_inverse(const GradedMap& m);

// m composed with its declared inverse is the identity, both ways.
bool verify_declared_inverse(const GradedMap& m);

// outer . family . outer^-1 equals the family member with its parameter
// replaced by `sub` (a coordinate-free expression in the parameter).
bool verify_family_relation(const GradedMap& outer, const GradedMap& family, const Scalar& sub);

// Words compose left-to-right as "apply rightmost first".
GradedMap word_product(const std::vector<GradedMap>& word, const Ambient& ambient,
                       bool relation = false);
bool verify_word_relation(const std::vector<GradedMap>& lhs, const std::vector<GradedMap>& rhs,
                          const Ambient& ambient, bool relation = false);

}  // namespace duval

#endif
