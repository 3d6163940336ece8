#include "polyjoin/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyjoin {

namespace {

// Keep only maximal sets. Equal-cardinality sets can only be equal, so
// subset tests are needed across cardinality classes only.
std::vector<Bits> antichain_reduce(std::vector<Bits> fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::vector<Bits> keep;
    keep.reserve(fs.size());
    // fs is sorted by (count, words); scan from largest down.
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        bool dominated = false;
        for (const Bits& k : keep) {
            if (k.count() <= it->count()) break;  // keep is descending in count
            if (it->is_subset_of(k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(*it);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace

SimplicialComplex::SimplicialComplex() { facets_.push_back(Bits(0)); }

SimplicialComplex SimplicialComplex::from_index_facets(std::vector<int> verts,
                                                       std::vector<Bits> facets) {
    facets = antichain_reduce(std::move(facets));
    if (facets.empty() || (facets.size() == 1 && facets[0].none())) {
        return SimplicialComplex();  // normalize void and {∅} alike
    }
    // Prune vertices that appear in no facet.
    Bits used(static_cast<int>(verts.size()));
    for (const Bits& f : facets) used |= f;
    if (used.count() == static_cast<int>(verts.size())) {
        SimplicialComplex k;
        k.verts_ = std::move(verts);
        k.facets_ = std::move(facets);
        return k;
    }
    std::vector<int> old_pos = used.positions();
    std::vector<int> new_verts;
    new_verts.reserve(old_pos.size());
    std::vector<int> remap(verts.size(), -1);
    for (size_t i = 0; i < old_pos.size(); ++i) {
        remap[old_pos[i]] = static_cast<int>(i);
        new_verts.push_back(verts[old_pos[i]]);
    }
    std::vector<Bits> nf;
    nf.reserve(facets.size());
    for (const Bits& f : facets) {
        Bits g(static_cast<int>(new_verts.size()));
        f.for_each([&](int p) { g.set(remap[p]); });
        nf.push_back(std::move(g));
    }
    std::sort(nf.begin(), nf.end());
    SimplicialComplex k;
    k.verts_ = std::move(new_verts);
    k.facets_ = std::move(nf);
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<int>& vertices,
                                                 const std::vector<std::vector<int>>& facets) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto idx = [&](int v) {
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v)
            throw std::invalid_argument("from_facets: facet vertex " + std::to_string(v) +
                                        " is not in the vertex set");
        return static_cast<int>(it - vs.begin());
    };
    std::vector<Bits> fb;
    fb.reserve(facets.size());
    for (const auto& f : facets) {
        Bits b(static_cast<int>(vs.size()));
        for (int v : f) b.set(idx(v));
        fb.push_back(std::move(b));
    }
    return from_index_facets(std::move(vs), std::move(fb));
}

SimplicialComplex SimplicialComplex::simplex(const std::vector<int>& vertices) {
    return from_facets(vertices, {vertices});
}

bool SimplicialComplex::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

int SimplicialComplex::index_of(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw std::invalid_argument("complex: unknown vertex " + std::to_string(v));
    return static_cast<int>(it - verts_.begin());
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (const Bits& f : facets_) {
        std::vector<int> labels;
        labels.reserve(f.count());
        f.for_each([&](int p) { labels.push_back(verts_[p]); });
        out.push_back(std::move(labels));
    }
    return out;
}

bool SimplicialComplex::is_empty_complex() const { return verts_.empty(); }

int SimplicialComplex::dim() const {
    int d = -1;
    for (const Bits& f : facets_) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::contains_face(const std::vector<int>& face) const {
    Bits b(vertex_count());
    for (int v : face) {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) return false;
        b.set(static_cast<int>(it - verts_.begin()));
    }
    for (const Bits& f : facets_)
        if (b.is_subset_of(f)) return true;
    return false;
}

bool SimplicialComplex::is_simplex() const { return facets_.size() == 1; }

SimplicialComplex SimplicialComplex::star(int v) const {
    int p = index_of(v);
    std::vector<Bits> fs;
    for (const Bits& f : facets_)
        if (f.test(p)) fs.push_back(f);
    return from_index_facets(verts_, std::move(fs));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
    int p = index_of(v);
    std::vector<Bits> fs;
    fs.reserve(facets_.size());
    for (Bits f : facets_) {
        f.reset(p);
        fs.push_back(std::move(f));
    }
    return from_index_facets(verts_, std::move(fs));
}

SimplicialComplex SimplicialComplex::link(int v) const {
    int p = index_of(v);
    std::vector<Bits> fs;
    for (const Bits& f : facets_)
        if (f.test(p)) {
            Bits g = f;
            g.reset(p);
            fs.push_back(std::move(g));
        }
    return from_index_facets(verts_, std::move(fs));
}

namespace {

/// Depth-first enumeration of all nonempty faces. A face is a set of
/// vertex positions contained in at least one facet; each DFS node carries
/// the list of facets containing the current face, which shrinks fast.
/// Once a single facet remains, the subtree is all subsets of its
/// remaining vertices and is emitted without further filtering.
template <typename RecordFn>
void enumerate_faces(const std::vector<Bits>& facets, int n, long long max_faces,
                     const RecordFn& record) {
    std::vector<std::vector<int32_t>> scratch(n + 1);
    long long total = 0;
    auto bump = [&] {
        if (++total > max_faces)
            throw std::runtime_error("face enumeration exceeds cap of " +
                                     std::to_string(max_faces) + " faces");
    };

    auto emit_subsets = [&](auto&& self, int depth, int last, const Bits& facet) -> void {
        facet.for_each([&](int p) {
            if (p <= last) return;
            bump();
            record(depth, p);
            self(self, depth + 1, p, facet);
        });
    };

    auto dfs = [&](auto&& self, int depth, int last, const std::vector<int32_t>& ids) -> void {
        if (ids.size() == 1) {
            emit_subsets(emit_subsets, depth, last, facets[ids[0]]);
            return;
        }
        Bits candidates(n);
        for (int32_t id : ids) candidates |= facets[id];
        candidates.for_each([&](int p) {
            if (p <= last) return;
            auto& child = scratch[depth];
            child.clear();
            for (int32_t id : ids)
                if (facets[id].test(p)) child.push_back(id);
            bump();
            record(depth, p);
            self(self, depth + 1, p, child);
        });
    };
    std::vector<int32_t> all(facets.size());
    std::iota(all.begin(), all.end(), 0);
    if (!facets.empty() && !(facets.size() == 1 && facets[0].none())) dfs(dfs, 0, -1, all);
}

}  // namespace

std::vector<std::vector<uint64_t>> SimplicialComplex::faces_by_dimension_u64(
    long long max_faces) const {
    const int n = vertex_count();
    if (n > 64) throw std::invalid_argument("faces_by_dimension_u64: more than 64 vertices");
    if (is_empty_complex()) return {};
    std::vector<std::vector<uint64_t>> out(dim() + 1);
    std::vector<uint64_t> path(n + 1, 0);
    enumerate_faces(facets_, n, max_faces, [&](int depth, int p) {
        uint64_t mask = (depth == 0 ? 0 : path[depth - 1]) | (uint64_t{1} << p);
        path[depth] = mask;
        out[depth].push_back(mask);
    });
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

std::vector<std::vector<Bits>> SimplicialComplex::faces_by_dimension(long long max_faces) const {
    const int n = vertex_count();
    if (is_empty_complex()) return {};
    std::vector<std::vector<Bits>> out(dim() + 1);
    std::vector<Bits> path(n + 1, Bits(n));
    enumerate_faces(facets_, n, max_faces, [&](int depth, int p) {
        Bits mask = depth == 0 ? Bits(n) : path[depth - 1];
        mask.set(p);
        path[depth] = mask;
        out[depth].push_back(std::move(mask));
    });
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

std::vector<long long> SimplicialComplex::f_vector(long long max_faces) const {
    std::vector<long long> f(dim() + 2, 0);
    f[0] = 1;  // f_{-1}
    if (is_empty_complex()) return f;
    enumerate_faces(facets_, vertex_count(), max_faces, [&](int depth, int) { ++f[depth + 1]; });
    return f;
}

std::string SimplicialComplex::canonical_key(std::map<int, int>* rename_out) const {
    auto fl = facets();  // sorted label lists
    std::sort(fl.begin(), fl.end());
    std::map<int, int> rename;
    for (const auto& f : fl)
        for (int v : f)
            if (!rename.count(v)) {
                int next = static_cast<int>(rename.size());
                rename[v] = next;
            }
    if (rename_out) *rename_out = rename;
    for (auto& f : fl) {
        for (int& v : f) v = rename[v];
        std::sort(f.begin(), f.end());
    }
    std::sort(fl.begin(), fl.end());
    std::string key;
    for (const auto& f : fl) {
        for (int v : f) {
            key += static_cast<char>('a' + v % 26);
            if (v >= 26) key += std::to_string(v / 26);
        }
        key += '|';
    }
    return key;
}

SimplicialComplex join_complexes(const SimplicialComplex& k, const SimplicialComplex& l,
                                 std::map<int, int>* left_labels,
                                 std::map<int, int>* right_labels) {
    const int nk = k.vertex_count(), nl = l.vertex_count();
    std::vector<int> verts(nk + nl);
    std::iota(verts.begin(), verts.end(), 1);
    if (left_labels) {
        left_labels->clear();
        for (int i = 0; i < nk; ++i) (*left_labels)[k.vertices()[i]] = 1 + i;
    }
    if (right_labels) {
        right_labels->clear();
        for (int j = 0; j < nl; ++j) (*right_labels)[l.vertices()[j]] = 1 + nk + j;
    }
    std::vector<std::vector<int>> fs;
    fs.reserve(k.facet_bits().size() * l.facet_bits().size());
    for (const Bits& fk : k.facet_bits())
        for (const Bits& fl : l.facet_bits()) {
            std::vector<int> u;
            u.reserve(fk.count() + fl.count());
            fk.for_each([&](int p) { u.push_back(1 + p); });
            fl.for_each([&](int q) { u.push_back(1 + nk + q); });
            fs.push_back(std::move(u));
        }
    return SimplicialComplex::from_facets(verts, fs);
}

namespace {

void bron_kerbosch(const Graph& g, Bits r, Bits p, Bits x, std::vector<Bits>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbours in P.
    int pivot = -1, best = -1;
    Bits px = p | x;
    px.for_each([&](int u) {
        int c = (p & g.adjacency(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bits cand = p;
    if (pivot >= 0) cand.subtract(g.adjacency(pivot));
    cand.for_each([&](int v) {
        Bits r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.adjacency(v), x & g.adjacency(v), out);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
    const int n = g.vertex_count();
    // Maximal independent sets of G = maximal cliques of the complement.
    Graph comp = [&] {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!g.adjacency(i).test(j)) es.emplace_back(g.vertices()[i], g.vertices()[j]);
        return Graph(g.vertices(), std::move(es));
    }();
    Bits p(n);
    for (int i = 0; i < n; ++i) p.set(i);
    std::vector<Bits> maximal;
    bron_kerbosch(comp, Bits(n), p, Bits(n), maximal);
    std::vector<std::vector<int>> fs;
    fs.reserve(maximal.size());
    for (const Bits& m : maximal) {
        std::vector<int> f;
        m.for_each([&](int i) { f.push_back(comp.vertices()[i]); });
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(g.vertices(), fs);
}

SimplicialComplex polyhedral_join_realize(const SimplicialComplex& k,
                                          const std::map<int, SimplicialComplex>& assignment,
                                          std::map<int, std::pair<int, int>>* label_origin) {
    const auto& kv = k.vertices();
    std::vector<const SimplicialComplex*> parts;
    std::vector<int> offset(kv.size() + 1, 0);
    for (size_t p = 0; p < kv.size(); ++p) {
        auto it = assignment.find(kv[p]);
        if (it == assignment.end())
            throw std::invalid_argument("polyhedral_join_realize: no complex assigned to vertex " +
                                        std::to_string(kv[p]));
        parts.push_back(&it->second);
        offset[p + 1] = offset[p] + it->second.vertex_count();
    }
    const int total = offset[kv.size()];
    std::vector<int> verts(total);
    std::iota(verts.begin(), verts.end(), 1);
    if (label_origin) {
        label_origin->clear();
        for (size_t p = 0; p < kv.size(); ++p)
            for (int q = 0; q < parts[p]->vertex_count(); ++q)
                (*label_origin)[offset[p] + q + 1] = {kv[p], parts[p]->vertices()[q]};
    }

    std::vector<Bits> unions;
    // One union per choice of a facet in each factor of a facet of K.
    for (const Bits& sigma : k.facet_bits()) {
        std::vector<int> ps = sigma.positions();
        Bits acc(total);
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == ps.size()) {
                unions.push_back(acc);
                return;
            }
            int p = ps[i];
            for (const Bits& f : parts[p]->facet_bits()) {
                Bits save = acc;
                f.for_each([&](int q) { acc.set(offset[p] + q); });
                self(self, i + 1);
                acc = std::move(save);
            }
        };
        rec(rec, 0);
        if (unions.size() > 20'000'000)
            throw std::runtime_error("polyhedral_join_realize: facet explosion");
    }
    std::vector<std::vector<int>> fs;
    fs.reserve(unions.size());
    for (const Bits& u : unions) {
        std::vector<int> f;
        u.for_each([&](int p) { f.push_back(p + 1); });
        fs.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(verts, fs);
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k) {
    if (k.is_empty_complex()) return {};
    const int n = k.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (const Bits& f : k.facet_bits()) {
        auto ps = f.positions();
        for (size_t i = 1; i < ps.size(); ++i) parent[find(find, ps[0])] = find(find, ps[i]);
    }
    std::map<int, std::vector<std::vector<int>>> groups;  // root -> facet lists
    auto fl = k.facets();
    for (size_t i = 0; i < fl.size(); ++i) {
        int root = find(find, k.facet_bits()[i].positions()[0]);
        groups[root].push_back(fl[i]);
    }
    std::vector<SimplicialComplex> out;
    for (auto& [root, fs] : groups) {
        std::vector<int> vs;
        for (const auto& f : fs) vs.insert(vs.end(), f.begin(), f.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.push_back(SimplicialComplex::from_facets(vs, fs));
    }
    std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices() < b.vertices();
    });
    return out;
}

SimplicialComplex union_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<int> vs = a.vertices();
    vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto fs = a.facets();
    auto fb = b.facets();
    fs.insert(fs.end(), fb.begin(), fb.end());
    return SimplicialComplex::from_facets(vs, fs);
}

SimplicialComplex intersect_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<int> vs = a.vertices();
    vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<std::vector<int>> fs;
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) {
            std::vector<int> common;
            std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                  std::back_inserter(common));
            fs.push_back(std::move(common));
        }
    return SimplicialComplex::from_facets(vs, fs);
}

}  // namespace polyjoin
