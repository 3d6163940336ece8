#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyjoin/bits.hpp"
#include "polyjoin/graph.hpp"

namespace polyjoin {

/// Facet-based simplicial complex. Faces are implicit: every subset of a
/// facet is a face. The complex {∅} (only the empty face) is the canonical
/// "empty complex"; the void complex is not representable and constructors
/// normalize to {∅}. The vertex set is always the union of the facets.
/// Immutable after construction.
class SimplicialComplex {
public:
    /// The {∅} complex.
    SimplicialComplex();

    /// Build from facet lists; unknown vertices are rejected, facets are
    /// antichain-reduced, and all subsets become faces.
    static SimplicialComplex from_facets(const std::vector<int>& vertices,
                                         const std::vector<std::vector<int>>& facets);

    /// The full simplex on the given vertices ({∅} when empty).
    static SimplicialComplex simplex(const std::vector<int>& vertices);

    const std::vector<int>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    bool has_vertex(int v) const;
    int index_of(int v) const;

    /// Facets as sorted label lists, in a deterministic order.
    std::vector<std::vector<int>> facets() const;
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const std::vector<Bits>& facet_bits() const { return facets_; }

    /// True iff this is {∅}.
    bool is_empty_complex() const;

    /// dim K = max facet dimension; {∅} has dimension -1.
    int dim() const;

    bool contains_face(const std::vector<int>& face) const;

    /// Single facet covering the whole vertex set. True for {∅} as the
    /// degenerate (-1)-simplex.
    bool is_simplex() const;

    /// st_K(v): faces σ with σ ∪ {v} ∈ K.
    SimplicialComplex star(int v) const;
    /// dl_K(v): faces avoiding v.
    SimplicialComplex deletion(int v) const;
    /// lk_K(v): faces σ with σ ∪ {v} ∈ K and v ∉ σ.
    SimplicialComplex link(int v) const;

    /// Face counts per dimension, starting at f_{-1} = 1.
    std::vector<long long> f_vector(long long max_faces = 50'000'000) const;

    /// All faces of each dimension d >= 0, as vertex-index bitsets, each
    /// dimension sorted. Throws if the face count exceeds max_faces.
    std::vector<std::vector<Bits>> faces_by_dimension(long long max_faces = 50'000'000) const;

    /// Fast path for complexes with at most 64 vertices: faces as index
    /// masks. Dimension d faces are at position d.
    std::vector<std::vector<uint64_t>> faces_by_dimension_u64(long long max_faces = 50'000'000) const;

    /// Memoization key: facets renamed by first occurrence and sorted.
    /// Equal keys imply isomorphic complexes. Optionally reports the
    /// original-label -> canonical-id renaming.
    std::string canonical_key(std::map<int, int>* rename = nullptr) const;

    /// Full face-set equality under identical labels.
    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    static SimplicialComplex from_index_facets(std::vector<int> verts, std::vector<Bits> facets);

    std::vector<int> verts_;    // sorted labels; empty for {∅}
    std::vector<Bits> facets_;  // antichain over vertex indices, sorted; {∅} keeps one empty facet
};

/// Simplicial join K * L. Vertices are made disjoint and relabeled
/// canonically: K's vertex of rank i becomes i+1, L's vertex of rank j
/// becomes |V(K)| + j + 1. Optional out-params receive the label maps.
SimplicialComplex join_complexes(const SimplicialComplex& k, const SimplicialComplex& l,
                                 std::map<int, int>* left_labels = nullptr,
                                 std::map<int, int>* right_labels = nullptr);

/// I(G): faces are the independent sets of G.
SimplicialComplex independence_complex(const Graph& g);

/// Polyhedral join Z*_K(X, ∅) realized as a complex: faces are unions
/// ⋃_{i∈σ} τ_i over σ ∈ K with τ_i a face of the complex assigned to i.
/// Vertex (i, ℓ) with i of rank p in V(K) and ℓ of rank q in the assigned
/// complex becomes offset(p) + q + 1 with offset(p) = Σ_{p'<p} |V(X_{p'})|.
/// Optionally reports, per result vertex label, the (K vertex, X label) pair.
SimplicialComplex polyhedral_join_realize(
    const SimplicialComplex& k, const std::map<int, SimplicialComplex>& assignment,
    std::map<int, std::pair<int, int>>* label_origin = nullptr);

/// Components of the geometric realization; vertices are connected when
/// they share a face. {∅} has no components.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k);

/// Union and intersection of face sets (facet-level computation).
SimplicialComplex union_complexes(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersect_complexes(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace polyjoin
