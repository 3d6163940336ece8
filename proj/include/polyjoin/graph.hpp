#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/bits.hpp"

namespace polyjoin {

/// Finite simple undirected graph with integer vertex labels.
/// Immutable after construction; all operations are pure.
class Graph {
public:
    Graph() = default;

    /// Validates: distinct labels, no loops, endpoints present; duplicate
    /// edges are collapsed. Labels must be non-negative.
    Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;

    /// Position of label v in the sorted vertex list; throws if absent.
    int index_of(int v) const;

    /// Adjacency of vertex at index i, as a bitset over vertex indices.
    const Bits& adjacency(int index) const { return adj_[index]; }

    std::vector<int> open_neighborhood(int v) const;
    std::vector<int> closed_neighborhood(int v) const;

    Graph induced_subgraph(const std::vector<int>& keep) const;
    /// G with the given vertices removed (complement convenience).
    Graph without(const std::vector<int>& drop) const;

    /// Degree-1 vertices in increasing label order.
    std::vector<int> leaves() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<int> verts_;                    // sorted
    std::vector<std::pair<int, int>> edges_;    // sorted, first < second
    std::vector<Bits> adj_;                     // by vertex index
};

/// L_n: vertices 1..n, edges {i, i+1}. Requires n >= 1.
Graph path_graph(int n);

/// C_n: L_n plus the closing edge {n, 1}. Requires n >= 3.
Graph cycle_graph(int n);

/// K_{1,n-1}: vertex 1 adjacent to 2..n. Requires n >= 1.
Graph star_graph(int n);

/// G[H]: vertices are pairs (u, v) relabeled 1..|V(G)||V(H)| in
/// lexicographic order; (u1,v1)(u2,v2) is an edge iff u1 u2 in E(G), or
/// u1 = u2 and v1 v2 in E(H).
Graph lexicographic_product(const Graph& g, const Graph& h);

/// True iff G is acyclic. Equivalent to "no induced cycle" since any
/// shortest cycle is induced.
bool is_forest(const Graph& g);

bool is_connected(const Graph& g);

/// True iff G is (isomorphic to) some L_n: a connected forest with all
/// degrees <= 2. The single vertex counts as L_1.
bool is_path_shape(const Graph& g);

/// Decode a Pruefer sequence over labels 1..n into a labeled tree.
Graph tree_from_pruefer(const std::vector<int>& seq, int n);

/// Visit all n^(n-2) labeled trees on vertices 1..n, each exactly once,
/// in lexicographic Pruefer-sequence order. Requires n >= 1.
void enumerate_trees(int n, const std::function<void(const Graph&)>& fn);

/// Number of labeled trees on n vertices (Cayley).
uint64_t labeled_tree_count(int n);

/// Uniformly random labeled tree on 1..n from a seeded PRNG.
Graph random_tree(int n, uint64_t seed);

/// Canonical AHU code; equal codes iff isomorphic, for forests.
std::string forest_iso_code(const Graph& g);

}  // namespace polyjoin
