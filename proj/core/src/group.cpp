#include "duval/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

std::string GroupFingerprint::str() const {
    std::ostringstream os;
    os << "order " << order << ", element orders {";
    bool first = true;
    for (const auto& [o, n] : order_multiset) {
        if (!first) os << ", ";
        first = false;
        os << o << ":" << n;
    }
    os << "}, abelianization (";
    for (std::size_t i = 0; i < abelian_invariants.size(); ++i) {
        if (i) os << ",";
        os << abelian_invariants[i];
    }
    os << "), derived order " << derived_order;
    return os.str();
}

int MulTable::inverse(int i) const {
    for (int j = 0; j < size(); ++j)
        if (t[i][j] == id) return j;
    throw Error("multiplication table has no inverse for element " + std::to_string(i));
}

std::vector<GradedMap> closure(const std::vector<GradedMap>& gens, int cap) {
    if (cap < 1) throw Error("closure cap must be positive");
    for (const auto& g : gens)
        if (g.param())
            throw ClosureCapError(cap);
    bool relation = false;
    Ambient ambient = gens.empty() ? Ambient({1, 1, 1}, {"x0", "x1", "x2"}) : gens[0].ambient();
    for (const auto& g : gens) {
        if (g.ambient() != ambient) throw WeightMismatchError();
        if (!g.images().empty() && g.images()[0].relation_active()) relation = true;
    }

    std::vector<GradedMap> elements;
    elements.push_back(identity_map(ambient, relation));
    auto find_index = [&](const GradedMap& m) -> int {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (projective_equal(elements[i], m)) return static_cast<int>(i);
        return -1;
    };

    std::deque<std::size_t> queue;
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const GradedMap prod = compose(elements[idx], g);
            if (find_index(prod) >= 0) continue;
            if (static_cast<int>(elements.size()) >= cap) throw ClosureCapError(cap);
            elements.push_back(prod);
            queue.push_back(elements.size() - 1);
        }
    }
    return elements;
}

MulTable multiplication_table(const std::vector<GradedMap>& elements) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw Error("empty element list");
    auto find_index = [&](const GradedMap& m) -> int {
        for (int i = 0; i < n; ++i)
            if (projective_equal(elements[i], m)) return i;
        return -1;
    };
    MulTable table;
    table.t.assign(n, std::vector<int>(n, -1));
    table.id = -1;
    const bool relation = !elements[0].images().empty() && elements[0].images()[0].relation_active();
    const GradedMap id = identity_map(elements[0].ambient(), relation);
    for (int i = 0; i < n; ++i)
        if (projective_equal(elements[i], id)) {
            table.id = i;
            break;
        }
    if (table.id < 0) throw Error("element list does not contain the identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = find_index(compose(elements[i], elements[j]));
            if (k < 0) throw Error("element list is not closed under composition");
            table.t[i][j] = k;
        }
    return table;
}

namespace {

long element_order_in_table(const MulTable& table, int i) {
    long order = 1;
    int x = i;
    while (x != table.id) {
        x = table.t[x][i];
        ++order;
        if (order > table.size()) throw Error("corrupt multiplication table");
    }
    return order;
}

// Subgroup generated by a set of elements, via table closure.
std::vector<int> generated_subgroup(const MulTable& table, std::vector<int> gens) {
    std::vector<bool> in(table.size(), false);
    std::vector<int> members;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    add(table.id);
    for (int g : gens) add(g);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) add(table.t[members[i]][members[j]]);
    std::sort(members.begin(), members.end());
    return members;
}

// Invariant factors of an abelian group recovered from its element-order
// multiset: enumerate all divisor chains d1 | d2 | ... with product n and
// match the multiset (the multiset determines the group).
std::map<long, long> order_multiset_of_type(const std::vector<long>& factors) {
    // Element (x1,...,xk) has order lcm of orders in each cyclic factor.
    std::map<long, long> multiset;
    std::vector<long> idx(factors.size(), 0);
    while (true) {
        long l = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const long xi = idx[i];
            const long oi = xi == 0 ? 1 : factors[i] / std::gcd(factors[i], xi);
            l = std::lcm(l, oi);
        }
        multiset[l] += 1;
        std::size_t p = 0;
        while (p < factors.size()) {
            if (++idx[p] < factors[p]) break;
            idx[p] = 0;
            ++p;
        }
        if (p == factors.size()) break;
    }
    return multiset;
}

void enumerate_types(long n, long max_factor, std::vector<long>& acc,
                     std::vector<std::vector<long>>& out) {
    if (n == 1) {
        out.push_back(acc);
        return;
    }
    for (long d = 2; d <= std::min(n, max_factor); ++d) {
        if (n % d != 0) continue;
        acc.push_back(d);
        enumerate_types(n / d, n, acc, out);
        acc.pop_back();
    }
}

std::vector<long> abelian_invariants_from_orders(long n, const std::map<long, long>& multiset) {
    if (n == 1) return {};
    std::vector<std::vector<long>> types;
    std::vector<long> acc;
    enumerate_types(n, n, acc, types);
    for (auto& type : types) {
        // Keep only invariant-factor chains d1 | d2 | ... (ascending).
        bool chain = true;
        for (std::size_t i = 0; i + 1 < type.size(); ++i)
            if (type[i + 1] % type[i] != 0) {
                chain = false;
                break;
            }
        if (!chain) continue;
        if (order_multiset_of_type(type) == multiset) return type;
    }
    throw Error("element orders do not match any abelian group of order " + std::to_string(n));
}

}  // namespace

GroupFingerprint fingerprint(const MulTable& table) {
    GroupFingerprint fp;
    const int n = table.size();
    fp.order = n;
    for (int i = 0; i < n; ++i) fp.order_multiset[element_order_in_table(table, i)] += 1;

    // Derived subgroup from all commutators.
    std::vector<int> commutators;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int inv_i = table.inverse(i);
            const int inv_j = table.inverse(j);
            const int c = table.t[table.t[i][j]][table.t[inv_i][inv_j]];
            commutators.push_back(c);
        }
    const std::vector<int> derived = generated_subgroup(table, commutators);
    fp.derived_order = static_cast<long>(derived.size());

    // Abelianization G/[G,G]: build the quotient's element orders, then
    // recover invariant factors.
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    std::vector<bool> in_derived(n, false);
    for (int d : derived) in_derived[d] = true;
    for (int i = 0; i < n; ++i) {
        if (coset_of[i] >= 0) continue;
        const int rep = static_cast<int>(reps.size());
        reps.push_back(i);
        for (int d : derived) coset_of[table.t[i][d]] = rep;
    }
    const int qn = static_cast<int>(reps.size());
    std::map<long, long> qorders;
    for (int r = 0; r < qn; ++r) {
        long order = 1;
        int x = reps[r];
        while (!in_derived[x]) {
            x = table.t[x][reps[r]];
            ++order;
        }
        // order is the least k with reps[r]^k in the derived subgroup.
        qorders[order] += 1;
    }
    fp.abelian_invariants = abelian_invariants_from_orders(qn, qorders);
    return fp;
}

MulTable cyclic_table(int n) {
    MulTable t;
    t.id = 0;
    t.t.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.t[i][j] = (i + j) % n;
    return t;
}

MulTable direct_product_table(const MulTable& a, const MulTable& b) {
    const int na = a.size(), nb = b.size();
    MulTable t;
    t.t.assign(na * nb, std::vector<int>(na * nb));
    t.id = a.id * nb + b.id;
    for (int i = 0; i < na * nb; ++i)
        for (int j = 0; j < na * nb; ++j) {
            const int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
            t.t[i][j] = a.t[ai][aj] * nb + b.t[bi][bj];
        }
    return t;
}

MulTable dihedral_table(int n) {
    // Elements r^i s^e, index i + n*e; s r s = r^-1.
    MulTable t;
    t.id = 0;
    const int sz = 2 * n;
    t.t.assign(sz, std::vector<int>(sz));
    auto idx = [&](int i, int e) { return ((i % n + n) % n) + n * e; };
    for (int i = 0; i < n; ++i)
        for (int e = 0; e <= 1; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f <= 1; ++f) {
                    // (r^i s^e)(r^j s^f) = r^{i + j*(-1)^e} s^{e+f}.
                    const int k = e == 0 ? i + j : i - j;
                    t.t[idx(i, e)][idx(j, f)] = idx(k, (e + f) % 2);
                }
    return t;
}

MulTable v4_semidirect_z4_table() {
    // Elements (v, k) with v in (Z/2)^2, k in Z/4; c acts by s1 -> s1 s2.
    auto act = [](int v, int k) {
        // v = (e1, e2) encoded as e1 + 2*e2; action matrix [[1,1],[0,1]] mod 2
        // applied k times: e1 -> e1, e2 -> e2 + k*e1.
        const int e1 = v & 1, e2 = (v >> 1) & 1;
        const int ne2 = (e2 + k * e1) % 2;
        return e1 + 2 * ne2;
    };
    MulTable t;
    t.id = 0;
    t.t.assign(16, std::vector<int>(16));
    auto idx = [](int v, int k) { return v + 4 * k; };
    for (int v = 0; v < 4; ++v)
        for (int k = 0; k < 4; ++k)
            for (int w = 0; w < 4; ++w)
                for (int l = 0; l < 4; ++l) {
                    // (v, k)(w, l) = (v + k.w, k + l).
                    const int nv = v ^ act(w, k);
                    t.t[idx(v, k)][idx(w, l)] = idx(nv, (k + l) % 4);
                }
    return t;
}

const std::vector<NamedGroup>& named_group_table() {
    static const std::vector<NamedGroup> table = [] {
        std::vector<NamedGroup> out;
        const MulTable z2 = cyclic_table(2);
        auto add = [&](std::string id, std::string display, const MulTable& t) {
            out.push_back({std::move(id), std::move(display), fingerprint(t)});
        };
        add("trivial", "trivial", cyclic_table(1));
        add("Z/2", "Z/2", z2);
        add("Z/3", "Z/3", cyclic_table(3));
        add("Z/4", "Z/4", cyclic_table(4));
        add("Z/6", "Z/6", cyclic_table(6));
        add("(Z/2)^2", "(Z/2)²", direct_product_table(z2, z2));
        add("(Z/2)^3", "(Z/2)³", direct_product_table(direct_product_table(z2, z2), z2));
        add("D3", "D₃", dihedral_table(3));
        add("D4", "D₄", dihedral_table(4));
        add("D6", "D₆", dihedral_table(6));
        add("Z/2xZ/4", "Z/2 × Z/4", direct_product_table(z2, cyclic_table(4)));
        add("(Z/2)^2:Z/4", "(Z/2)² ⋊ Z/4", v4_semidirect_z4_table());
        return out;
    }();
    return table;
}

std::optional<std::string> match_named_group(const GroupFingerprint& fp) {
    const auto& table = named_group_table();
    std::optional<std::string> hit;
    for (const auto& g : table) {
        if (!(g.fp == fp)) continue;
        if (hit) return std::nullopt;  // ambiguous collision, never guess
        hit = g.id;
    }
    return hit;
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;
using CycMatrix = std::vector<std::vector<CycNum>>;

IntMatrix int_identity(int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

CycMatrix cyc_identity(int n) {
    CycMatrix m(n, std::vector<CycNum>(n, CycNum::zero()));
    for (int i = 0; i < n; ++i) m[i][i] = CycNum::one();
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    IntMatrix out(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    const int n = static_cast<int>(a.size());
    CycMatrix out(n, std::vector<CycNum>(n, CycNum::zero()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

}  // namespace

LatticeActionResult verify_lattice_action(const LatticeAction& action) {
    LatticeActionResult result;
    auto fail = [&](const std::string& msg) {
        result.ok = false;
        result.failures.push_back(msg);
    };

    struct Block {
        IntMatrix torus;
        CycMatrix additive;
    };
    auto identity_block = [&] {
        return Block{int_identity(action.torus_dim), cyc_identity(action.additive_dim)};
    };
    auto mul_block = [](const Block& a, const Block& b) {
        return Block{a.torus.empty() ? IntMatrix{} : int_mul(a.torus, b.torus),
                     a.additive.empty() ? CycMatrix{} : cyc_mul(a.additive, b.additive)};
    };
    auto is_identity = [&](const Block& x) {
        if (!x.torus.empty() && x.torus != int_identity(action.torus_dim)) return false;
        if (!x.additive.empty() && !(x.additive == cyc_identity(action.additive_dim))) return false;
        return true;
    };

    std::map<std::string, Block> blocks;
    for (const auto& g : action.generators) {
        Block b;
        if (action.torus_dim > 0) {
            b.torus = g.torus.empty() ? int_identity(action.torus_dim) : g.torus;
            if (static_cast<int>(b.torus.size()) != action.torus_dim)
                throw DimensionMismatchError("torus matrix of " + g.name);
            // Determinant +-1: the matrix must be invertible over Z.
            IntMatrix m = b.torus;
            long det = 0;
            if (action.torus_dim == 1) {
                det = m[0][0];
            } else if (action.torus_dim == 2) {
                det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            } else if (action.torus_dim == 3) {
                det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            } else {
                throw Error("torus dimension > 3 not supported");
            }
            if (det != 1 && det != -1)
                fail("generator " + g.name + ": torus matrix determinant " + std::to_string(det) +
                     " is not a unit");
        }
        if (action.additive_dim > 0) {
            b.additive = g.additive.empty() ? cyc_identity(action.additive_dim) : g.additive;
            if (static_cast<int>(b.additive.size()) != action.additive_dim)
                throw DimensionMismatchError("additive matrix of " + g.name);
        }
        blocks[g.name] = b;

        // Stated order must be exact: g^order = 1 and no smaller power is.
        Block p = b;
        int actual = 1;
        while (!is_identity(p) && actual <= 2 * g.stated_order + 1) {
            p = mul_block(p, b);
            ++actual;
        }
        if (actual != g.stated_order)
            fail("generator " + g.name + ": order " + std::to_string(actual) + ", stated " +
                 std::to_string(g.stated_order));
    }

    auto power_block = [&](const Block& b, int e) {
        Block acc = identity_block();
        if (e >= 0) {
            for (int k = 0; k < e; ++k) acc = mul_block(acc, b);
            return acc;
        }
        // Negative exponents via the generator's order.
        Block inv = b;
        Block p = mul_block(b, b);
        while (!is_identity(p)) {
            inv = mul_block(inv, b);
            p = mul_block(p, b);
        }
        // Now inv = b^{order-1} = b^{-1}.
        for (int k = 0; k < -e; ++k) acc = mul_block(acc, inv);
        return acc;
    };

    for (const auto& word : action.relations) {
        // Parse "name(^int)?('*' name(^int)?)*".
        Block acc = identity_block();
        std::size_t i = 0;
        bool bad = false;
        while (i < word.size() && !bad) {
            while (i < word.size() && (word[i] == ' ' || word[i] == '*')) ++i;
            if (i >= word.size()) break;
            std::size_t j = i;
            while (j < word.size() && word[j] != '^' && word[j] != '*' && word[j] != ' ') ++j;
            const std::string name = word.substr(i, j - i);
            int e = 1;
            i = j;
            if (i < word.size() && word[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < word.size() && word[k] == '-') ++k;
                while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
                e = std::stoi(word.substr(i, k - i));
                i = k;
            }
            auto it = blocks.find(name);
            if (it == blocks.end()) {
                fail("relation '" + word + "': unknown generator " + name);
                bad = true;
                break;
            }
            acc = mul_block(acc, power_block(it->second, e));
        }
        if (!bad && !is_identity(acc)) fail("relation '" + word + "' does not hold");
    }
    return result;
}

}  // namespace duval
