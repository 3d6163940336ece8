#include "polyjoin/engine.hpp"

#include <chrono>
#include <stdexcept>

#include "polyjoin/closed_forms.hpp"
#include "polyjoin/homology.hpp"

namespace polyjoin {

namespace {

ExprPtr decompose_rec(const SimplicialComplex& k, const CertPtr& cert,
                      const std::map<int, std::string>& atom,
                      std::vector<DecompositionStep>* trace) {
    using Kind = SheddingCertificate::Kind;
    switch (cert->kind) {
        case Kind::Empty:
            if (trace) trace->push_back({-1, "empty"});
            return expr_empty();
        case Kind::Simplex: {
            if (trace) trace->push_back({-1, "simplex"});
            std::vector<ExprPtr> factors;
            for (int v : k.vertices()) factors.push_back(expr_atom(atom.at(v)));
            return join_all(std::move(factors));
        }
        case Kind::Node: {
            SimplicialComplex lk = k.link(cert->v);
            SimplicialComplex dl = k.deletion(cert->v);
            if (lk.is_empty_complex()) {
                // v is isolated in K: K = ⟨{v}⟩ ⊔ dl_K(v).
                if (trace) trace->push_back({cert->v, "disjoint"});
                ExprPtr d_lk = decompose_rec(lk, cert->lk, atom, trace);
                ExprPtr d_del = decompose_rec(dl, cert->del, atom, trace);
                return disjoint_all({expr_atom(atom.at(cert->v)), std::move(d_del),
                                     std::move(d_lk)});
            }
            if (trace) trace->push_back({cert->v, "split"});
            ExprPtr d_lk = decompose_rec(lk, cert->lk, atom, trace);
            ExprPtr d_del = decompose_rec(dl, cert->del, atom, trace);
            return wedge_all({suspend_iter(d_lk, 1),
                              join2(d_lk, expr_atom(atom.at(cert->v))), std::move(d_del)});
        }
    }
    throw std::logic_error("decompose: unknown certificate node");
}

}  // namespace

ExprPtr decompose(const SimplicialComplex& k, const CertPtr& cert,
                  const std::map<int, std::string>& atom_of_vertex,
                  std::vector<DecompositionStep>* trace) {
    if (!validate_certificate(k, cert))
        throw std::invalid_argument("decompose: certificate does not certify the complex");
    for (int v : k.vertices())
        if (!atom_of_vertex.count(v))
            throw std::invalid_argument("decompose: no atom for vertex " + std::to_string(v));
    return decompose_rec(k, cert, atom_of_vertex, trace);
}

DecompositionReport decompose_report(const SimplicialComplex& k, const CertPtr& cert,
                                     const std::map<int, std::string>& atom_of_vertex) {
    DecompositionReport rep;
    rep.complex_summary = std::to_string(k.vertex_count()) + " vertices, " +
                          std::to_string(k.facet_count()) + " facets";
    rep.certificate_nodes = cert ? cert->node_count() : 0;
    ExprPtr e = decompose(k, cert, atom_of_vertex, &rep.trace);
    rep.normal_form = normalize(e);
    return rep;
}

ForestLexResult decompose_forest_lex(const Graph& g, const Graph& h) {
    if (!is_forest(g)) throw std::invalid_argument("decompose_forest_lex: G is not a forest");
    SimplicialComplex ig = independence_complex(g);
    CertPtr cert = forest_certificate(g);
    std::map<int, std::string> atoms;
    for (int v : ig.vertices()) atoms[v] = "X";
    ForestLexResult out;
    out.expr = decompose(ig, cert, atoms);
    out.normal_form = normalize(out.expr);
    BettiVector bh = reduced_homology(independence_complex(h));
    if (bh.torsion)
        throw std::invalid_argument(
            "decompose_forest_lex: I(H) has torsion, outside the wedge-of-spheres hypothesis");
    out.betti = betti(out.normal_form, {{"X", bh}});
    return out;
}

VerifyReport verify_instance(const Graph& g, const Graph& h, long long max_faces) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.engine = decompose_forest_lex(g, h).betti;

    SimplicialComplex ig = independence_complex(g);
    SimplicialComplex ih = independence_complex(h);
    std::map<int, SimplicialComplex> assign;
    for (int v : ig.vertices()) assign.emplace(v, ih);
    rep.oracle = reduced_homology(polyhedral_join_realize(ig, assign), max_faces);

    if (is_path_shape(g)) {
        BettiVector bh = reduced_homology(ih);
        // Closed form needs |I(H)| ≃ ⋁_n S^k: a single-degree wedge.
        if (bh.b.empty()) {
            rep.closed_form = lex_Lm_spheres(g.vertex_count(), 0, 0).to_betti();
        } else if (bh.b.size() == 1 && bh.b.begin()->first >= 0) {
            rep.closed_form =
                lex_Lm_spheres(g.vertex_count(), bh.b.begin()->second, bh.b.begin()->first)
                    .to_betti();
        }
    }
    rep.agree = rep.engine == rep.oracle &&
                (!rep.closed_form || *rep.closed_form == rep.oracle);
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    return rep;
}

}  // namespace polyjoin
