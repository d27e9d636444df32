#ifndef DUVAL_GROUP_HPP
#define DUVAL_GROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duval/cyclotomic.hpp"
#include "duval/graded_map.hpp"

namespace duval {

// Isomorphism invariant used to identify the small finite groups named in
// the catalog: strong enough to separate every named candidate.
struct GroupFingerprint {
    long order = 0;
    std::map<long, long> order_multiset;   // element order -> count
    std::vector<long> abelian_invariants;  // invariant factors d1 | d2 | ...
    long derived_order = 0;

    bool operator==(const GroupFingerprint& o) const {
        return order == o.order && order_multiset == o.order_multiset &&
               abelian_invariants == o.abelian_invariants && derived_order == o.derived_order;
    }
    std::string str() const;
};

// Finite group as an explicit multiplication table: t[i][j] = index of
// element i * element j, identity at index id.
struct MulTable {
    std::vector<std::vector<int>> t;
    int id = 0;

    int size() const { return static_cast<int>(t.size()); }
    int inverse(int i) const;
};

// All distinct products of the generators under projective equality,
// deterministic breadth-first order starting from the identity.
// Throws ClosureCapError past cap.
std::vector<GradedMap> closure(const std::vector<GradedMap>& gens, int cap = 64);

// Multiplication table of a list of maps already closed under composition.
// Throws if the list is not closed.
MulTable multiplication_table(const std::vector<GradedMap>& elements);

GroupFingerprint fingerprint(const MulTable& table);

// Names from the fixed candidate table when the fingerprint matches exactly
// one entry; absent otherwise (including the ambiguous-collision case).
std::optional<std::string> match_named_group(const GroupFingerprint& fp);

struct NamedGroup {
    std::string id;       // e.g. "(Z/2)^2:Z/4"
    std::string display;  // e.g. "(Z/2)² ⋊ Z/4"
    GroupFingerprint fp;
};
const std::vector<NamedGroup>& named_group_table();

// Abstract table constructors (used for the candidate table and as test
// oracles).
MulTable cyclic_table(int n);
MulTable direct_product_table(const MulTable& a, const MulTable& b);
MulTable dihedral_table(int n);  // order 2n
// (Z/2)^2 x| Z/4 with the generator of Z/4 sending s1 -> s1 s2, s2 -> s2.
MulTable v4_semidirect_z4_table();

// One generator of an action on parameters: a GL_n(Z) matrix on the
// exponent lattice of a torus factor and an exact matrix on additive
// parameters.  Either block may be empty.
struct ActionGenerator {
    std::string name;
    std::vector<std::vector<long>> torus;  // integer matrix, det must be +-1
    std::vector<std::vector<CycNum>> additive;
    int stated_order = 1;
};

struct LatticeAction {
    std::string name;
    int torus_dim = 0;
    int additive_dim = 0;
    std::vector<ActionGenerator> generators;
    // Words over generator names (e.g. "s2*s3*s2*s3") expected to equal the
    // identity; exponents "g^k" and inverses "g^-1" are allowed.
    std::vector<std::string> relations;
};

struct LatticeActionResult {
    bool ok = true;
    std::vector<std::string> failures;
};

LatticeActionResult verify_lattice_action(const LatticeAction& action);

}  // namespace duval

#endif
