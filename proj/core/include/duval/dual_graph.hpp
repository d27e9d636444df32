#ifndef DUVAL_DUAL_GRAPH_HPP
#define DUVAL_DUAL_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace duval {

// Colored multigraph of negative curves: vertices are (-1)- or (-2)-curves,
// edge multiplicities are intersection numbers.  No loops.
class ColoredGraph {
public:
    struct Vertex {
        std::string id;
        int self_intersection;  // -1 or -2
    };

    ColoredGraph() = default;
    ColoredGraph(std::vector<Vertex> vertices,
                 std::vector<std::tuple<std::string, std::string, int>> edges);

    static ColoredGraph from_json_text(const std::string& text);
    std::string to_json_text() const;

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int multiplicity(std::size_t a, std::size_t b) const { return mult_[a][b]; }
    std::size_t index_of(const std::string& id) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<int>> mult_;
};

// A vertex permutation: perm[i] is the image index of vertex i.
using Permutation = std::vector<int>;

// All color- and multiplicity-preserving vertex permutations, found by
// backtracking over iteratively refined candidate classes.  Deterministic
// output order; vertex count capped at 32.
std::vector<Permutation> graph_automorphisms(const ColoredGraph& g);

// Full enumeration over all permutations; the test oracle.  Cap 10.
std::vector<Permutation> brute_force_automorphisms(const ColoredGraph& g);

// Name of Aut(graph) from the named-group table, via the permutation
// group's fingerprint; absent when the fingerprint matches no table entry.
std::optional<std::string> identify_graph_group(const ColoredGraph& g);

struct Claw {
    std::size_t center;
    std::vector<std::size_t> leaves;  // exactly three
};

// A vertex E and three vertices E1,E2,E3, all fixed by every permutation in
// auts, with multiplicity exactly 1 on each E-E_i edge and no edges among
// the E_i.
std::optional<Claw> find_invariant_claw(const ColoredGraph& g,
                                        const std::vector<Permutation>& auts);

// A multiplicity-1 edge whose two endpoints are fixed by every permutation.
std::optional<std::pair<std::size_t, std::size_t>> find_invariant_edge(
    const ColoredGraph& g, const std::vector<Permutation>& auts);

}  // namespace duval

#endif
