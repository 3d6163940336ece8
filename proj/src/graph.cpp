#include "polyjoin/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace polyjoin {

Graph::Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("graph: duplicate vertex label");
    for (int v : vertices)
        if (v < 0) throw std::invalid_argument("graph: negative vertex label");
    verts_ = std::move(vertices);

    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const int n = vertex_count();
    adj_.assign(n, Bits(n));
    for (auto [u, v] : edges) {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("graph: edge endpoint not a vertex");
        int iu = index_of(u), iv = index_of(v);
        adj_[iu].set(iv);
        adj_[iv].set(iu);
    }
    edges_ = std::move(edges);
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

int Graph::index_of(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw std::invalid_argument("graph: unknown vertex " + std::to_string(v));
    return static_cast<int>(it - verts_.begin());
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return adj_[index_of(u)].test(index_of(v));
}

int Graph::degree(int v) const { return adj_[index_of(v)].count(); }

std::vector<int> Graph::open_neighborhood(int v) const {
    std::vector<int> out;
    adj_[index_of(v)].for_each([&](int i) { out.push_back(verts_[i]); });
    return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> out = open_neighborhood(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Graph Graph::induced_subgraph(const std::vector<int>& keep) const {
    for (int v : keep)
        if (!has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
    std::set<int> in(keep.begin(), keep.end());
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (in.count(u) && in.count(v)) es.emplace_back(u, v);
    return Graph(std::vector<int>(in.begin(), in.end()), std::move(es));
}

Graph Graph::without(const std::vector<int>& drop) const {
    std::set<int> out(drop.begin(), drop.end());
    std::vector<int> keep;
    for (int v : verts_)
        if (!out.count(v)) keep.push_back(v);
    return induced_subgraph(keep);
}

std::vector<int> Graph::leaves() const {
    std::vector<int> out;
    for (int v : verts_)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(std::move(vs), std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph p = path_graph(n);
    auto es = p.edges();
    es.emplace_back(1, n);
    return Graph(p.vertices(), std::move(es));
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<std::pair<int, int>> es;
    for (int i = 2; i <= n; ++i) es.emplace_back(1, i);
    return Graph(std::move(vs), std::move(es));
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const auto& gv = g.vertices();
    const auto& hv = h.vertices();
    const int nh = h.vertex_count();
    // Pair (gv[i], hv[j]) gets label 1 + i*nh + j: lexicographic order on
    // pairs of sorted labels.
    auto label = [&](int i, int j) { return 1 + i * nh + j; };

    std::vector<int> vs(static_cast<size_t>(g.vertex_count()) * nh);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<std::pair<int, int>> es;
    for (int i1 = 0; i1 < g.vertex_count(); ++i1)
        for (int j1 = 0; j1 < nh; ++j1)
            for (int i2 = i1; i2 < g.vertex_count(); ++i2) {
                int j2lo = (i2 == i1) ? j1 + 1 : 0;
                for (int j2 = j2lo; j2 < nh; ++j2) {
                    bool adj = g.adjacency(i1).test(i2) ||
                               (i1 == i2 && h.adjacency(j1).test(j2));
                    if (adj) es.emplace_back(label(i1, j1), label(i2, j2));
                }
            }
    return Graph(std::move(vs), std::move(es));
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

bool is_forest(const Graph& g) {
    UnionFind uf(g.vertex_count());
    for (auto [u, v] : g.edges())
        if (!uf.unite(g.index_of(u), g.index_of(v))) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        g.adjacency(x).for_each([&](int y) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                q.push(y);
            }
        });
    }
    return reached == n;
}

bool is_path_shape(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    if (!is_forest(g) || !is_connected(g)) return false;
    for (int v : g.vertices())
        if (g.degree(v) > 2) return false;
    return true;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("tree_from_pruefer: n must be >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("tree_from_pruefer: sequence length must be n-2");
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    if (n == 1) return Graph(std::move(vs), {});

    std::vector<int> deg(n + 1, 1);
    for (int x : seq) {
        if (x < 1 || x > n) throw std::invalid_argument("tree_from_pruefer: label out of range");
        ++deg[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaf;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaf.push(v);
    std::vector<std::pair<int, int>> es;
    for (int x : seq) {
        int l = leaf.top();
        leaf.pop();
        es.emplace_back(l, x);
        if (--deg[x] == 1) leaf.push(x);
    }
    int a = leaf.top();
    leaf.pop();
    int b = leaf.top();
    es.emplace_back(a, b);
    return Graph(std::move(vs), std::move(es));
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
    if (n <= 2) {
        fn(path_graph(n));
        return;
    }
    std::vector<int> seq(n - 2, 1);
    while (true) {
        fn(tree_from_pruefer(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
}

uint64_t labeled_tree_count(int n) {
    if (n < 1) throw std::invalid_argument("labeled_tree_count: n must be >= 1");
    if (n <= 2) return 1;
    uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= static_cast<uint64_t>(n);
    return c;
}

Graph random_tree(int n, uint64_t seed) {
    if (n <= 2) return path_graph(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    return tree_from_pruefer(seq, n);
}

namespace {

std::string ahu_rooted(const Graph& g, int root_idx, const std::vector<Bits>& adj) {
    // Iterative post-order; children codes sorted before concatenation.
    const int n = g.vertex_count();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root_idx};
    std::vector<bool> seen(n, false);
    seen[root_idx] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        adj[x].for_each([&](int y) {
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                stack.push_back(y);
            }
        });
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        std::vector<std::string> kids;
        adj[x].for_each([&](int y) {
            if (parent[y] == x) kids.push_back(std::move(code[y]));
        });
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ")";
        code[x] = std::move(s);
    }
    return code[root_idx];
}

std::vector<int> tree_centers(const Graph& g, const std::vector<int>& comp) {
    // Strip leaves layer by layer within one component (vertex indices).
    if (comp.size() == 1) return comp;
    std::vector<int> deg(g.vertex_count(), 0), alive = comp;
    for (int x : comp) deg[x] = g.adjacency(x).count();
    std::vector<int> cur;
    for (int x : comp)
        if (deg[x] <= 1) cur.push_back(x);
    int remaining = static_cast<int>(comp.size());
    std::vector<bool> removed(g.vertex_count(), false);
    while (remaining > 2) {
        std::vector<int> next;
        for (int x : cur) {
            removed[x] = true;
            --remaining;
            g.adjacency(x).for_each([&](int y) {
                if (!removed[y] && --deg[y] == 1) next.push_back(y);
            });
        }
        cur = std::move(next);
    }
    std::vector<int> centers;
    for (int x : comp)
        if (!removed[x]) centers.push_back(x);
    return centers;
}

}  // namespace

std::string forest_iso_code(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("forest_iso_code: input has a cycle");
    const int n = g.vertex_count();
    std::vector<Bits> adj;
    adj.reserve(n);
    for (int i = 0; i < n; ++i) adj.push_back(g.adjacency(i));

    std::vector<bool> seen(n, false);
    std::vector<std::string> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            adj[x].for_each([&](int y) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            });
        }
        std::string best;
        for (int c : tree_centers(g, comp)) {
            std::string s2 = ahu_rooted(g, c, adj);
            if (best.empty() || s2 < best) best = std::move(s2);
        }
        comps.push_back(std::move(best));
    }
    std::sort(comps.begin(), comps.end());
    std::string out;
    for (auto& c : comps) {
        out += c;
        out += '|';
    }
    return out;
}

}  // namespace polyjoin
