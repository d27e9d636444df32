#include "duval/dual_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "duval/errors.hpp"
#include "duval/group.hpp"

namespace duval {

ColoredGraph::ColoredGraph(std::vector<Vertex> vertices,
                           std::vector<std::tuple<std::string, std::string, int>> edges)
    : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i].self_intersection != -1 && vertices_[i].self_intersection != -2)
            throw Error("vertex " + vertices_[i].id + ": self-intersection must be -1 or -2");
        for (std::size_t j = i + 1; j < n; ++j)
            if (vertices_[i].id == vertices_[j].id)
                throw Error("duplicate vertex id " + vertices_[i].id);
    }
    mult_.assign(n, std::vector<int>(n, 0));
    for (const auto& [a, b, m] : edges) {
        const std::size_t ia = index_of(a);
        const std::size_t ib = index_of(b);
        if (ia == ib) throw Error("loop edge at vertex " + a);
        if (m < 1) throw Error("edge " + a + "-" + b + ": multiplicity must be >= 1");
        mult_[ia][ib] += m;
        mult_[ib][ia] += m;
    }
}

std::size_t ColoredGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    throw Error("unknown vertex id '" + id + "'");
}

ColoredGraph ColoredGraph::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error("graph file needs 'vertices' and 'edges' arrays");
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.contains("id") || !v.contains("si"))
            throw Error("graph vertex needs 'id' and 'si'");
        vertices.push_back({v.at("id").get<std::string>(), v.at("si").get<int>()});
    }
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.contains("a") || !e.contains("b")) throw Error("graph edge needs 'a' and 'b'");
        edges.emplace_back(e.at("a").get<std::string>(), e.at("b").get<std::string>(),
                           e.value("m", 1));
    }
    return ColoredGraph(std::move(vertices), std::move(edges));
}

std::string ColoredGraph::to_json_text() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_)
        j["vertices"].push_back({{"id", v.id}, {"si", v.self_intersection}});
    j["edges"] = nlohmann::json::array();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t k = i + 1; k < size(); ++k)
            if (mult_[i][k] > 0)
                j["edges"].push_back(
                    {{"a", vertices_[i].id}, {"b", vertices_[k].id}, {"m", mult_[i][k]}});
    return j.dump(2);
}

namespace {

bool preserves(const ColoredGraph& g, const Permutation& p) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (g.vertices()[i].self_intersection !=
            g.vertices()[p[i]].self_intersection)
            return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.multiplicity(i, j) != g.multiplicity(p[i], p[j])) return false;
    }
    return true;
}

// Iterated refinement: start from the color, then repeatedly split classes
// by the multiset of (neighbor class, multiplicity) pairs until stable.
std::vector<int> refine_classes(const ColoredGraph& g) {
    const std::size_t n = g.size();
    std::vector<int> cls(n);
    {
        std::map<int, int> by_color;
        for (std::size_t i = 0; i < n; ++i) {
            const int c = g.vertices()[i].self_intersection;
            if (!by_color.count(c)) by_color[c] = static_cast<int>(by_color.size());
            cls[i] = by_color[c];
        }
    }
    while (true) {
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> keys;
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::pair<int, int>> nbrs;
            for (std::size_t j = 0; j < n; ++j)
                if (g.multiplicity(i, j) > 0) nbrs.emplace_back(cls[j], g.multiplicity(i, j));
            std::sort(nbrs.begin(), nbrs.end());
            const auto key = std::make_pair(cls[i], nbrs);
            auto it = keys.find(key);
            if (it == keys.end()) it = keys.emplace(key, static_cast<int>(keys.size())).first;
            next[i] = it->second;
        }
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

void backtrack(const ColoredGraph& g, const std::vector<int>& cls,
               const std::vector<std::size_t>& order, std::size_t depth, Permutation& partial,
               std::vector<bool>& used, std::vector<Permutation>& out) {
    const std::size_t n = g.size();
    if (depth == order.size()) {
        out.push_back(partial);
        return;
    }
    const std::size_t v = order[depth];
    for (std::size_t img = 0; img < n; ++img) {
        if (used[img] || cls[img] != cls[v]) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            const std::size_t u = order[d];
            if (g.multiplicity(v, u) !=
                g.multiplicity(img, static_cast<std::size_t>(partial[u])))
                ok = false;
        }
        if (!ok) continue;
        partial[v] = static_cast<int>(img);
        used[img] = true;
        backtrack(g, cls, order, depth + 1, partial, used, out);
        used[img] = false;
        partial[v] = -1;
    }
}

}  // namespace

std::vector<Permutation> graph_automorphisms(const ColoredGraph& g) {
    const std::size_t n = g.size();
    if (n > 32) throw SizeCapError("graph has more than 32 vertices");
    if (n == 0) return {Permutation{}};
    const std::vector<int> cls = refine_classes(g);

    // Process small classes first; ties broken by vertex index (ids are in
    // file order, which fixes the output order).
    std::vector<int> class_size(*std::max_element(cls.begin(), cls.end()) + 1, 0);
    for (int c : cls) ++class_size[c];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (class_size[cls[a]] != class_size[cls[b]]) return class_size[cls[a]] < class_size[cls[b]];
        return a < b;
    });

    Permutation partial(n, -1);
    std::vector<bool> used(n, false);
    std::vector<Permutation> out;
    backtrack(g, cls, order, 0, partial, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> brute_force_automorphisms(const ColoredGraph& g) {
    const std::size_t n = g.size();
    if (n > 10) throw SizeCapError("brute-force oracle is capped at 10 vertices");
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        if (preserves(g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// Multiplication table of a permutation list (composition p*q = p after q).
MulTable permutation_table(const std::vector<Permutation>& perms) {
    const int n = static_cast<int>(perms.size());
    if (n == 0) throw Error("empty permutation list");
    const std::size_t deg = perms[0].size();
    auto compose_perm = [&](const Permutation& p, const Permutation& q) {
        Permutation r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
        return r;
    };
    auto find = [&](const Permutation& p) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    MulTable table;
    table.t.assign(n, std::vector<int>(n, -1));
    Permutation id(deg);
    std::iota(id.begin(), id.end(), 0);
    table.id = find(id);
    if (table.id < 0) throw Error("permutation list lacks the identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = find(compose_perm(perms[i], perms[j]));
            if (k < 0) throw Error("permutation list is not closed under composition");
            table.t[i][j] = k;
        }
    return table;
}

}  // namespace

std::optional<std::string> identify_graph_group(const ColoredGraph& g) {
    const auto auts = graph_automorphisms(g);
    if (auts.size() > 64) throw SizeCapError("automorphism group larger than 64");
    return match_named_group(fingerprint(permutation_table(auts)));
}

std::optional<Claw> find_invariant_claw(const ColoredGraph& g,
                                        const std::vector<Permutation>& auts) {
    const std::size_t n = g.size();
    std::vector<bool> fixed(n, true);
    for (const auto& p : auts)
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] != static_cast<int>(i)) fixed[i] = false;
    for (std::size_t e = 0; e < n; ++e) {
        if (!fixed[e]) continue;
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < n; ++i)
            if (i != e && fixed[i] && g.multiplicity(e, i) == 1) candidates.push_back(i);
        if (candidates.size() < 3) continue;
        const std::size_t m = candidates.size();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t c = b + 1; c < m; ++c) {
                    const std::size_t va = candidates[a], vb = candidates[b], vc = candidates[c];
                    if (g.multiplicity(va, vb) == 0 && g.multiplicity(va, vc) == 0 &&
                        g.multiplicity(vb, vc) == 0)
                        return Claw{e, {va, vb, vc}};
                }
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_invariant_edge(
    const ColoredGraph& g, const std::vector<Permutation>& auts) {
    const std::size_t n = g.size();
    std::vector<bool> fixed(n, true);
    for (const auto& p : auts)
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] != static_cast<int>(i)) fixed[i] = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (fixed[i] && fixed[j] && g.multiplicity(i, j) == 1) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace duval
