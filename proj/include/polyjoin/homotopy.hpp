#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyjoin/betti.hpp"

namespace polyjoin {

struct HomotopyExpr;
using ExprPtr = std::shared_ptr<const HomotopyExpr>;

/// Symbolic homotopy-type expression. EMPTY is the join unit and stands
/// for S^{-1}; SUSP(e, r) means e * S^{r-1} (unreduced suspension, r-fold).
struct HomotopyExpr {
    enum class Kind { Empty, Sphere, Atom, Join, Wedge, Disjoint, Susp };
    Kind kind = Kind::Empty;
    int dim = 0;                    // Sphere: d >= 0; Susp: r >= 1
    std::string atom;               // Atom id
    std::vector<ExprPtr> children;  // Join/Wedge/Disjoint: any arity; Susp: one
};

ExprPtr expr_empty();
ExprPtr expr_sphere(int d);
ExprPtr expr_atom(std::string id);
ExprPtr join2(ExprPtr a, ExprPtr b);
ExprPtr join_all(std::vector<ExprPtr> parts);
/// Empty wedge denotes the one-point space.
ExprPtr wedge_all(std::vector<ExprPtr> parts);
ExprPtr disjoint_all(std::vector<ExprPtr> parts);
/// suspend_iter(e, 0) = e.
ExprPtr suspend_iter(ExprPtr e, int r);

std::string expr_to_string(const ExprPtr& e);

/// One wedge summand Σ^r X_1^{*k_1} * ... * X_m^{*k_m}.
/// (r = 0, no powers) denotes ∅; (r >= 1, no powers) denotes S^{r-1}.
struct JoinTerm {
    int susp = 0;
    std::map<std::string, int> powers;  // values > 0

    auto operator<=>(const JoinTerm&) const = default;
};

JoinTerm term_sphere(int d);
JoinTerm term_atom(const std::string& id);
std::string term_to_string(const JoinTerm& t);

/// Canonical wedge of join terms, with extra_components counting disjoint
/// union splits that survive at top level (each adds 1 to reduced b_0).
/// No summands and no extra components denotes the one-point space.
struct NormalForm {
    std::map<JoinTerm, mpz_class> summands;  // term -> multiplicity > 0
    long long extra_components = 0;

    bool is_empty_space() const;
    bool is_point() const { return summands.empty() && extra_components == 0; }
    mpz_class summand_count() const;
    void add_term(const JoinTerm& t, const mpz_class& mult);

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm nf_empty();
NormalForm nf_point();
NormalForm nf_sphere(int d);
NormalForm nf_atom(const std::string& id);

/// Join of normal forms. ∅ is the unit; a join against a space with
/// disjoint components rewrites them into wedge summands:
/// (X ⊔ Y) * Z ≃ (X*Z) ∨ (Y*Z) ∨ ΣZ, applied per extra component.
NormalForm nf_join(const NormalForm& a, const NormalForm& b);
/// Wedge: summands and extra components add.
NormalForm nf_wedge(const NormalForm& a, const NormalForm& b);
/// Disjoint union: ∅ drops out; otherwise one extra component appears.
NormalForm nf_disjoint(const NormalForm& a, const NormalForm& b);
/// r-fold suspension: join with S^{r-1}; Σ^r ∅ = S^{r-1}.
NormalForm nf_suspend(const NormalForm& a, int r);

NormalForm normalize(const ExprPtr& e);

/// An expression whose normalize() equals nf (for round-trip checks).
ExprPtr embed(const NormalForm& nf);

std::string nf_to_string(const NormalForm& nf);

using AtomAssignment = std::map<std::string, BettiVector>;

/// Betti vector of ⋁_n S^k: n in degree k.
BettiVector sphere_wedge_assignment(const mpz_class& n, int k);

/// Reduced Betti vectors under wedge (pointwise sum), join (degree-shifted
/// convolution; torsion-free Künneth), and suspension (degree shift).
BettiVector betti_add(const BettiVector& a, const BettiVector& b);
BettiVector betti_join(const BettiVector& a, const BettiVector& b);
BettiVector betti_suspend(const BettiVector& a, int r);

/// Evaluate a normal form under a torsion-free atom assignment. Throws if
/// an atom is unassigned or an assigned vector carries torsion.
BettiVector betti(const NormalForm& nf, const AtomAssignment& atoms);

}  // namespace polyjoin
