#pragma once

#include <map>
#include <memory>

#include "polyjoin/complex.hpp"
#include "polyjoin/graph.hpp"

namespace polyjoin {

struct SheddingCertificate;
using CertPtr = std::shared_ptr<const SheddingCertificate>;

/// Recursive witness of s-vertex-decomposability. An internal node names
/// the s-shedding vertex v and the witness w with dl_K(v) = st_K(w); its
/// children certify deletion(K, v) and link(K, v). Leaves assert that the
/// associated complex is a (nonempty) simplex or {∅}.
struct SheddingCertificate {
    enum class Kind { Simplex, Empty, Node };
    Kind kind = Kind::Empty;
    int v = -1;
    int w = -1;
    CertPtr del;
    CertPtr lk;

    static CertPtr leaf_simplex();
    static CertPtr leaf_empty();
    static CertPtr node(int v, int w, CertPtr del, CertPtr lk);

    int node_count() const;
};

/// True iff deletion(K, v) = star(K, w) as face sets. Always false for
/// v = w. Unknown vertices are rejected.
bool check_shedding_pair(const SimplicialComplex& k, int v, int w);

/// Exhaustive search for a certificate: ordered pairs (v, w) ascending by
/// label with the v loop outer, recursing on deletion and link, memoized
/// on the canonical facet encoding. Returns nullptr when no certificate
/// exists.
CertPtr is_s_vertex_decomposable(const SimplicialComplex& k);

/// Constructive certificate for I(G) of a forest G, no search: pick the
/// smallest-labeled leaf l with neighbour v; then dl_{I(G)}(v) =
/// I(G \ {v}) = I(G \ N(l)) = st_{I(G)}(l), and the children come from
/// G \ {v} and G \ N[v]. Rejects non-forests.
CertPtr forest_certificate(const Graph& g);

/// Recomputes every node condition: the shedding-pair identity, child
/// complex identities, and leaf tags.
bool validate_certificate(const SimplicialComplex& k, const CertPtr& cert);

/// Björner–Wachs vertex decomposability: some vertex v has deletion and
/// link vertex-decomposable and no facet of lk_K(v) is a facet of
/// dl_K(v). Exhaustive vertex search, memoized.
bool is_vertex_decomposable(const SimplicialComplex& k);

/// Certificate for join_complexes(k, l) given certificates of the parts.
/// left_labels / right_labels are the join's label maps.
CertPtr join_certificates(const CertPtr& cert_k, const CertPtr& cert_l,
                          const std::map<int, int>& left_labels,
                          const std::map<int, int>& right_labels);

}  // namespace polyjoin
