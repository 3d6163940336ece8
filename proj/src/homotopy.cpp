#include "polyjoin/homotopy.hpp"

#include <stdexcept>

namespace polyjoin {

namespace {

ExprPtr make(HomotopyExpr e) { return std::make_shared<const HomotopyExpr>(std::move(e)); }

}  // namespace

ExprPtr expr_empty() {
    static const ExprPtr e = make({HomotopyExpr::Kind::Empty, 0, {}, {}});
    return e;
}

ExprPtr expr_sphere(int d) {
    if (d < 0) throw std::invalid_argument("expr_sphere: dimension must be >= 0 (S^{-1} is EMPTY)");
    return make({HomotopyExpr::Kind::Sphere, d, {}, {}});
}

ExprPtr expr_atom(std::string id) {
    return make({HomotopyExpr::Kind::Atom, 0, std::move(id), {}});
}

ExprPtr join_all(std::vector<ExprPtr> parts) {
    return make({HomotopyExpr::Kind::Join, 0, {}, std::move(parts)});
}

ExprPtr join2(ExprPtr a, ExprPtr b) { return join_all({std::move(a), std::move(b)}); }

ExprPtr wedge_all(std::vector<ExprPtr> parts) {
    return make({HomotopyExpr::Kind::Wedge, 0, {}, std::move(parts)});
}

ExprPtr disjoint_all(std::vector<ExprPtr> parts) {
    return make({HomotopyExpr::Kind::Disjoint, 0, {}, std::move(parts)});
}

ExprPtr suspend_iter(ExprPtr e, int r) {
    if (r < 0) throw std::invalid_argument("suspend_iter: r must be >= 0");
    if (r == 0) return e;
    return make({HomotopyExpr::Kind::Susp, r, {}, {std::move(e)}});
}

std::string expr_to_string(const ExprPtr& e) {
    using K = HomotopyExpr::Kind;
    auto joined = [](const std::vector<ExprPtr>& cs, const char* sep) {
        std::string s;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (i) s += sep;
            s += expr_to_string(cs[i]);
        }
        return s;
    };
    switch (e->kind) {
        case K::Empty: return "empty";
        case K::Sphere: return "S^" + std::to_string(e->dim);
        case K::Atom: return e->atom;
        case K::Join: return e->children.empty() ? "empty" : "(" + joined(e->children, " * ") + ")";
        case K::Wedge: return e->children.empty() ? "pt" : "(" + joined(e->children, " v ") + ")";
        case K::Disjoint:
            return e->children.empty() ? "empty" : "(" + joined(e->children, " u ") + ")";
        case K::Susp:
            return "S[" + std::to_string(e->dim) + "](" + expr_to_string(e->children[0]) + ")";
    }
    return {};
}

JoinTerm term_sphere(int d) {
    JoinTerm t;
    t.susp = d + 1;
    return t;
}

JoinTerm term_atom(const std::string& id) {
    JoinTerm t;
    t.powers[id] = 1;
    return t;
}

std::string term_to_string(const JoinTerm& t) {
    std::string s;
    if (t.powers.empty()) return t.susp == 0 ? "empty" : "S^" + std::to_string(t.susp - 1);
    if (t.susp > 0) s += "S[" + std::to_string(t.susp) + "]";
    bool first = true;
    for (const auto& [a, p] : t.powers) {
        if (!first || t.susp > 0) s += first ? "(" : " * ";
        first = false;
        s += a;
        if (p > 1) s += "^*" + std::to_string(p);
    }
    if (t.susp > 0) s += ")";
    return s;
}

bool NormalForm::is_empty_space() const {
    return extra_components == 0 && summands.size() == 1 &&
           summands.begin()->first == JoinTerm{} && summands.begin()->second == 1;
}

mpz_class NormalForm::summand_count() const {
    mpz_class n = 0;
    for (const auto& [t, m] : summands) n += m;
    return n;
}

void NormalForm::add_term(const JoinTerm& t, const mpz_class& mult) {
    if (mult == 0) return;
    auto [it, fresh] = summands.emplace(t, mult);
    if (!fresh) it->second += mult;
}

NormalForm nf_empty() {
    NormalForm nf;
    nf.add_term(JoinTerm{}, 1);
    return nf;
}

NormalForm nf_point() { return NormalForm{}; }

NormalForm nf_sphere(int d) {
    NormalForm nf;
    nf.add_term(term_sphere(d), 1);
    return nf;
}

NormalForm nf_atom(const std::string& id) {
    NormalForm nf;
    nf.add_term(term_atom(id), 1);
    return nf;
}

namespace {

JoinTerm term_join(const JoinTerm& a, const JoinTerm& b) {
    JoinTerm t = a;
    t.susp += b.susp;
    for (const auto& [id, p] : b.powers) t.powers[id] += p;
    return t;
}

JoinTerm term_suspend(const JoinTerm& a, int r) {
    JoinTerm t = a;
    t.susp += r;
    return t;
}

}  // namespace

NormalForm nf_join(const NormalForm& a, const NormalForm& b) {
    // ∅ is the join unit; checked first so that disjointness survives it.
    if (a.is_empty_space()) return b;
    if (b.is_empty_space()) return a;
    // Both factors are non-empty. Components split into wedge summands:
    // (X ⊔ Y) * Z ≃ (X*Z) ∨ (Y*Z) ∨ ΣZ, once per extra component, and
    // crossed components contribute Σ∅*... = S^1 each.
    NormalForm out;
    for (const auto& [ta, ma] : a.summands)
        for (const auto& [tb, mb] : b.summands) out.add_term(term_join(ta, tb), ma * mb);
    if (a.extra_components > 0)
        for (const auto& [tb, mb] : b.summands)
            out.add_term(term_suspend(tb, 1), mb * mpz_of(a.extra_components));
    if (b.extra_components > 0)
        for (const auto& [ta, ma] : a.summands)
            out.add_term(term_suspend(ta, 1), ma * mpz_of(b.extra_components));
    if (a.extra_components > 0 && b.extra_components > 0)
        out.add_term(term_sphere(1),
                     mpz_of(a.extra_components) * mpz_of(b.extra_components));
    return out;
}

NormalForm nf_wedge(const NormalForm& a, const NormalForm& b) {
    NormalForm out = a;
    for (const auto& [t, m] : b.summands) out.add_term(t, m);
    out.extra_components += b.extra_components;
    return out;
}

NormalForm nf_disjoint(const NormalForm& a, const NormalForm& b) {
    if (a.is_empty_space()) return b;
    if (b.is_empty_space()) return a;
    NormalForm out = nf_wedge(a, b);
    out.extra_components += 1;
    return out;
}

NormalForm nf_suspend(const NormalForm& a, int r) {
    if (r < 0) throw std::invalid_argument("nf_suspend: r must be >= 0");
    if (r == 0) return a;
    return nf_join(a, nf_sphere(r - 1));
}

NormalForm normalize(const ExprPtr& e) {
    using K = HomotopyExpr::Kind;
    switch (e->kind) {
        case K::Empty: return nf_empty();
        case K::Sphere: return nf_sphere(e->dim);
        case K::Atom: return nf_atom(e->atom);
        case K::Join: {
            NormalForm out = nf_empty();
            for (const auto& c : e->children) out = nf_join(out, normalize(c));
            return out;
        }
        case K::Wedge: {
            NormalForm out = nf_point();
            for (const auto& c : e->children) out = nf_wedge(out, normalize(c));
            return out;
        }
        case K::Disjoint: {
            NormalForm out = nf_empty();
            for (const auto& c : e->children) out = nf_disjoint(out, normalize(c));
            return out;
        }
        case K::Susp: return nf_suspend(normalize(e->children[0]), e->dim);
    }
    throw std::logic_error("normalize: unknown node kind");
}

ExprPtr embed(const NormalForm& nf) {
    std::vector<ExprPtr> summands;
    for (const auto& [t, m] : nf.summands) {
        if (!m.fits_ulong_p())
            throw std::invalid_argument("embed: summand multiplicity too large to expand");
        std::vector<ExprPtr> factors;
        if (t.susp > 0) factors.push_back(expr_sphere(t.susp - 1));
        for (const auto& [id, p] : t.powers)
            for (int i = 0; i < p; ++i) factors.push_back(expr_atom(id));
        ExprPtr term = factors.empty() ? expr_empty() : join_all(std::move(factors));
        for (unsigned long i = 0; i < m.get_ui(); ++i) summands.push_back(term);
    }
    ExprPtr wedge = wedge_all(std::move(summands));
    if (nf.extra_components == 0) return wedge;
    std::vector<ExprPtr> parts{wedge};
    for (long long i = 0; i < nf.extra_components; ++i) parts.push_back(wedge_all({}));
    return disjoint_all(std::move(parts));
}

std::string nf_to_string(const NormalForm& nf) {
    if (nf.is_point()) return "pt";
    std::string s;
    for (const auto& [t, m] : nf.summands) {
        if (!s.empty()) s += " v ";
        if (m != 1) s += m.get_str() + ".";
        s += term_to_string(t);
    }
    if (nf.extra_components > 0)
        s += " (+" + std::to_string(nf.extra_components) + " components)";
    return s;
}

BettiVector sphere_wedge_assignment(const mpz_class& n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("sphere_wedge_assignment: n, k must be >= 0");
    BettiVector v;
    v.set(k, n);
    return v;
}

BettiVector betti_add(const BettiVector& a, const BettiVector& b) {
    BettiVector out = a;
    for (const auto& [d, v] : b.b) out.add(d, v);
    out.torsion = a.torsion || b.torsion;
    return out;
}

BettiVector betti_join(const BettiVector& a, const BettiVector& b) {
    BettiVector out;
    for (const auto& [p, x] : a.b)
        for (const auto& [q, y] : b.b) out.add(p + q + 1, x * y);
    out.torsion = a.torsion || b.torsion;
    return out;
}

BettiVector betti_suspend(const BettiVector& a, int r) {
    BettiVector out;
    for (const auto& [d, v] : a.b) out.set(d + r, v);
    out.torsion = a.torsion;
    return out;
}

BettiVector betti(const NormalForm& nf, const AtomAssignment& atoms) {
    for (const auto& [id, v] : atoms)
        if (v.torsion)
            throw std::invalid_argument("betti: atom '" + id + "' carries torsion");
    BettiVector unit;
    unit.set(-1, 1);  // the empty space, join unit
    BettiVector total;
    for (const auto& [t, m] : nf.summands) {
        BettiVector term = unit;
        if (t.susp > 0) term = betti_suspend(term, t.susp);
        for (const auto& [id, p] : t.powers) {
            auto it = atoms.find(id);
            if (it == atoms.end())
                throw std::invalid_argument("betti: atom '" + id + "' is not assigned");
            for (int i = 0; i < p; ++i) term = betti_join(term, it->second);
        }
        for (const auto& [d, v] : term.b) total.add(d, v * m);
    }
    total.add(0, mpz_of(nf.extra_components));
    return total;
}

}  // namespace polyjoin
