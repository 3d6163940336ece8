#include "polyjoin/shedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace polyjoin {

CertPtr SheddingCertificate::leaf_simplex() {
    static const CertPtr c = std::make_shared<const SheddingCertificate>(
        SheddingCertificate{Kind::Simplex, -1, -1, nullptr, nullptr});
    return c;
}

CertPtr SheddingCertificate::leaf_empty() {
    static const CertPtr c = std::make_shared<const SheddingCertificate>(
        SheddingCertificate{Kind::Empty, -1, -1, nullptr, nullptr});
    return c;
}

CertPtr SheddingCertificate::node(int v, int w, CertPtr del, CertPtr lk) {
    return std::make_shared<const SheddingCertificate>(
        SheddingCertificate{Kind::Node, v, w, std::move(del), std::move(lk)});
}

int SheddingCertificate::node_count() const {
    if (kind != Kind::Node) return 1;
    return 1 + del->node_count() + lk->node_count();
}

bool check_shedding_pair(const SimplicialComplex& k, int v, int w) {
    if (!k.has_vertex(v) || !k.has_vertex(w))
        throw std::invalid_argument("check_shedding_pair: unknown vertex");
    return k.deletion(v) == k.star(w);
}

namespace {

CertPtr relabel(const CertPtr& cert, const std::map<int, int>& map) {
    if (!cert || cert->kind != SheddingCertificate::Kind::Node) return cert;
    return SheddingCertificate::node(map.at(cert->v), map.at(cert->w),
                                     relabel(cert->del, map), relabel(cert->lk, map));
}

std::map<int, int> invert(const std::map<int, int>& map) {
    std::map<int, int> inv;
    for (const auto& [a, b] : map) inv[b] = a;
    return inv;
}

CertPtr svd_search(const SimplicialComplex& k,
                   std::unordered_map<std::string, CertPtr>& memo) {
    if (k.is_empty_complex()) return SheddingCertificate::leaf_empty();
    if (k.is_simplex()) return SheddingCertificate::leaf_simplex();

    std::map<int, int> rename;
    std::string key = k.canonical_key(&rename);
    if (auto it = memo.find(key); it != memo.end()) return relabel(it->second, invert(rename));

    CertPtr found;
    for (int v : k.vertices()) {
        for (int w : k.vertices()) {
            if (v == w || !check_shedding_pair(k, v, w)) continue;
            CertPtr cd = svd_search(k.deletion(v), memo);
            if (!cd) continue;
            CertPtr cl = svd_search(k.link(v), memo);
            if (!cl) continue;
            found = SheddingCertificate::node(v, w, std::move(cd), std::move(cl));
            break;
        }
        if (found) break;
    }
    memo[key] = relabel(found, rename);
    return found;
}

}  // namespace

CertPtr is_s_vertex_decomposable(const SimplicialComplex& k) {
    std::unordered_map<std::string, CertPtr> memo;
    return svd_search(k, memo);
}

CertPtr forest_certificate(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("forest_certificate: input has a cycle");
    if (g.edge_count() == 0) {
        return g.vertex_count() == 0 ? SheddingCertificate::leaf_empty()
                                     : SheddingCertificate::leaf_simplex();
    }
    int leaf = g.leaves().front();  // smallest-labeled leaf
    int v = g.open_neighborhood(leaf).front();
    return SheddingCertificate::node(v, leaf, forest_certificate(g.without({v})),
                                     forest_certificate(g.without(g.closed_neighborhood(v))));
}

bool validate_certificate(const SimplicialComplex& k, const CertPtr& cert) {
    if (!cert) return false;
    switch (cert->kind) {
        case SheddingCertificate::Kind::Empty: return k.is_empty_complex();
        case SheddingCertificate::Kind::Simplex:
            return !k.is_empty_complex() && k.is_simplex();
        case SheddingCertificate::Kind::Node: {
            if (!k.has_vertex(cert->v) || !k.has_vertex(cert->w)) return false;
            if (!check_shedding_pair(k, cert->v, cert->w)) return false;
            return validate_certificate(k.deletion(cert->v), cert->del) &&
                   validate_certificate(k.link(cert->v), cert->lk);
        }
    }
    return false;
}

namespace {

bool vd_search(const SimplicialComplex& k, std::unordered_map<std::string, bool>& memo) {
    if (k.is_empty_complex() || k.is_simplex()) return true;
    std::string key = k.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int v : k.vertices()) {
        SimplicialComplex dl = k.deletion(v);
        SimplicialComplex lk = k.link(v);
        // Shedding condition: no facet of the link stays maximal after
        // deleting v.
        auto dl_facets = dl.facets();
        std::sort(dl_facets.begin(), dl_facets.end());
        bool shedding = true;
        for (const auto& f : lk.facets())
            if (std::binary_search(dl_facets.begin(), dl_facets.end(), f)) {
                shedding = false;
                break;
            }
        if (!shedding) continue;
        if (vd_search(dl, memo) && vd_search(lk, memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& k) {
    std::unordered_map<std::string, bool> memo;
    return vd_search(k, memo);
}

CertPtr join_certificates(const CertPtr& cert_k, const CertPtr& cert_l,
                          const std::map<int, int>& left_labels,
                          const std::map<int, int>& right_labels) {
    if (!cert_k || !cert_l) throw std::invalid_argument("join_certificates: null certificate");
    using Kind = SheddingCertificate::Kind;
    // {∅} is the join unit; K * L = L.
    if (cert_k->kind == Kind::Empty) return relabel(cert_l, right_labels);
    if (cert_l->kind == Kind::Empty) return relabel(cert_k, left_labels);
    if (cert_k->kind == Kind::Node) {
        // dl_{K*L}(v) = dl_K(v) * L = st_K(w) * L = st_{K*L}(w).
        return SheddingCertificate::node(
            left_labels.at(cert_k->v), left_labels.at(cert_k->w),
            join_certificates(cert_k->del, cert_l, left_labels, right_labels),
            join_certificates(cert_k->lk, cert_l, left_labels, right_labels));
    }
    if (cert_l->kind == Kind::Node) {
        return SheddingCertificate::node(
            right_labels.at(cert_l->v), right_labels.at(cert_l->w),
            join_certificates(cert_k, cert_l->del, left_labels, right_labels),
            join_certificates(cert_k, cert_l->lk, left_labels, right_labels));
    }
    return SheddingCertificate::leaf_simplex();  // simplex * simplex
}

}  // namespace polyjoin
