#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/graph.hpp"
#include "polyjoin/homotopy.hpp"
#include "polyjoin/shedding.hpp"

namespace polyjoin {

/// One decomposition step: which rule fired at which vertex.
/// Rules: "simplex", "empty", "disjoint" (isolated vertex split) and
/// "split" (suspension-wedge splitting at an s-shedding vertex).
struct DecompositionStep {
    int vertex = -1;
    std::string rule;
};

struct DecompositionReport {
    std::string complex_summary;
    int certificate_nodes = 0;
    NormalForm normal_form;
    std::vector<DecompositionStep> trace;
};

/// Decompose the polyhedral join over K following a shedding certificate:
///   (a) K a simplex on σ: JOIN of the atoms of σ;
///   (b) K = {∅}: EMPTY;
///   (c) node (v, w) with lk_K(v) = {∅}: K = ⟨{v}⟩ ⊔ dl_K(v), so
///       DISJOINT(atom(v), decomposition of the deletion);
///   (d) node (v, w) otherwise:
///       Σ D_lk ∨ (D_lk * atom(v)) ∨ D_del.
/// The certificate is validated first; every vertex of K needs an atom.
ExprPtr decompose(const SimplicialComplex& k, const CertPtr& cert,
                  const std::map<int, std::string>& atom_of_vertex,
                  std::vector<DecompositionStep>* trace = nullptr);

DecompositionReport decompose_report(const SimplicialComplex& k, const CertPtr& cert,
                                     const std::map<int, std::string>& atom_of_vertex);

struct ForestLexResult {
    ExprPtr expr;            // over the single atom "X"
    NormalForm normal_form;
    BettiVector betti;       // under X -> reduced Betti of I(H)
};

/// Symbolic homotopy type of I(G[H]) for a forest G: decompose the
/// polyhedral join over I(G) with one atom X and evaluate X at the reduced
/// Betti vector of I(H). Rejects non-forests and torsion in I(H).
ForestLexResult decompose_forest_lex(const Graph& g, const Graph& h);

struct VerifyReport {
    BettiVector engine;
    BettiVector oracle;
    std::optional<BettiVector> closed_form;  // present when G is a path L_m
                                             // and I(H) is a single-degree wedge
    bool agree = false;
    double ms = 0.0;
};

/// Cross-check one (G, H) instance: engine Betti vs exact homology of the
/// realized polyhedral join, and the Theorem-backed closed form when it
/// applies. Mismatches are reported, not thrown.
VerifyReport verify_instance(const Graph& g, const Graph& h, long long max_faces = 5'000'000);

}  // namespace polyjoin
