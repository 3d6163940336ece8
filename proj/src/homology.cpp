#include "polyjoin/homology.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace polyjoin {

namespace {

struct OverflowBail {};

template <typename Z>
struct Ops;

template <>
struct Ops<long long> {
    static long long sub_mul(long long x, long long m, long long y) {
        long long p, r;
        if (__builtin_mul_overflow(m, y, &p) || __builtin_sub_overflow(x, p, &r))
            throw OverflowBail{};
        return r;
    }
    static bool is_unit(long long v) { return v == 1 || v == -1; }
    static long long quot(long long a, long long b) { return a / b; }
    static mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
};

template <>
struct Ops<mpz_class> {
    static mpz_class sub_mul(const mpz_class& x, const mpz_class& m, const mpz_class& y) {
        return x - m * y;
    }
    static bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }
    static mpz_class quot(const mpz_class& a, const mpz_class& b) { return a / b; }
    static mpz_class to_mpz(const mpz_class& v) { return v; }
};

/// Classical Smith normal form on a small dense residual matrix.
/// Returns the pivots (absolute values, divisibility chain).
std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> a) {
    std::vector<mpz_class> pivots;
    const int nr = static_cast<int>(a.size());
    const int nc = nr ? static_cast<int>(a[0].size()) : 0;
    int s = 0;
    while (s < nr && s < nc) {
        // Locate minimal nonzero |entry| in the lower-right block.
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = s; i < nr; ++i)
            for (int j = s; j < nc; ++j)
                if (a[i][j] != 0) {
                    mpz_class v = abs(a[i][j]);
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        std::swap(a[s], a[pi]);
        for (int i = 0; i < nr; ++i) std::swap(a[i][s], a[i][pj]);

        bool clean = true;
        for (int i = s + 1; i < nr && clean; ++i)
            if (a[i][s] % a[s][s] != 0) clean = false;
        for (int j = s + 1; j < nc && clean; ++j)
            if (a[s][j] % a[s][s] != 0) clean = false;
        if (!clean) {
            // One round of remainder reduction, then re-pick the pivot.
            for (int i = s + 1; i < nr; ++i)
                if (a[i][s] != 0) {
                    mpz_class q = a[i][s] / a[s][s];
                    for (int j = s; j < nc; ++j) a[i][j] -= q * a[s][j];
                }
            for (int j = s + 1; j < nc; ++j)
                if (a[s][j] != 0) {
                    mpz_class q = a[s][j] / a[s][s];
                    for (int i = s; i < nr; ++i) a[i][j] -= q * a[i][s];
                }
            continue;
        }
        // Zero out row and column s (quotients are exact).
        for (int i = s + 1; i < nr; ++i)
            if (a[i][s] != 0) {
                mpz_class q = a[i][s] / a[s][s];
                for (int j = s; j < nc; ++j) a[i][j] -= q * a[s][j];
            }
        for (int j = s + 1; j < nc; ++j) a[s][j] = 0;
        // Divisibility of the remaining block; if violated, fold the
        // offending row into row s and restart this pivot.
        bool divides = true;
        for (int i = s + 1; i < nr && divides; ++i)
            for (int j = s + 1; j < nc; ++j)
                if (a[i][j] % a[s][s] != 0) {
                    for (int jj = s; jj < nc; ++jj) a[s][jj] += a[i][jj];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        pivots.push_back(abs(a[s][s]));
        ++s;
    }
    return pivots;
}

/// Sparse integer elimination computing rank and elementary divisors.
///
/// Unit pivots are pulled out in three tiers: weight-1 rows and columns
/// (pure deletions, zero fill), then minimal-fill unit pivots (row
/// operations, possible fill), and finally whatever residual remains is
/// handed to the dense classical algorithm. Deleted rows and columns are
/// tombstoned; column lists may hold stale row ids and are re-validated
/// against the (always sorted) row storage on use.
template <typename Z>
class SparseEliminator {
public:
    SparseEliminator(const SparseIntMatrix& m)
        : nr_(m.n_rows),
          nc_(m.n_cols),
          rows_(m.n_rows),
          cols_(m.n_cols),
          rw_(m.n_rows, 0),
          cw_(m.n_cols, 0),
          row_dead_(m.n_rows, false),
          col_dead_(m.n_cols, false) {
        std::vector<Triplet> ts = m.entries;
        std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (size_t i = 0; i < ts.size(); ++i) {
            if (ts[i].value == 0) continue;
            if (i && ts[i].row == ts[i - 1].row && ts[i].col == ts[i - 1].col)
                throw std::invalid_argument("smith_normal_form: duplicate entry");
            if (ts[i].row < 0 || ts[i].row >= nr_ || ts[i].col < 0 || ts[i].col >= nc_)
                throw std::invalid_argument("smith_normal_form: entry out of bounds");
            rows_[ts[i].row].emplace_back(ts[i].col, Z(static_cast<long>(ts[i].value)));
            cols_[ts[i].col].push_back(ts[i].row);
            ++rw_[ts[i].row];
            ++cw_[ts[i].col];
        }
    }

    SNFResult run() {
        for (int r = 0; r < nr_; ++r)
            if (rw_[r] > 0) heap_.push({rw_[r], r});
        for (int c = 0; c < nc_; ++c)
            if (cw_[c] == 1) colq_.push_back(c);
        while (true) {
            drain_weight1_cols();
            // Lazily validated min-weight row heap; stuck rows (no unit
            // entry) re-enter when modified.
            if (heap_.empty()) break;
            auto [w, r] = heap_.top();
            heap_.pop();
            if (row_dead_[r] || rw_[r] != w || stuck_[r]) continue;
            compact_row(r);
            int c = -1, best_cw = 0;
            for (const auto& [col, val] : rows_[r])
                if (Ops<Z>::is_unit(val) && (c < 0 || cw_[col] < best_cw)) {
                    c = col;
                    best_cw = cw_[col];
                }
            if (c < 0) {
                stuck_[r] = true;  // all entries of this row are non-unit
                continue;
            }
            eliminate(r, c);
        }
        finish_dense();
        SNFResult out;
        out.rank = rank_;
        out.divisors = std::move(divisors_);
        return out;
    }

private:
    // Entry lookup in a sorted row; returns index or -1.
    int find_in_row(int r, int c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return -1;
        return static_cast<int>(it - row.begin());
    }

    bool entry_live(int r, int idx) const { return !col_dead_[rows_[r][idx].first]; }

    void compact_row(int r) {
        auto& row = rows_[r];
        std::erase_if(row, [&](const auto& e) { return col_dead_[e.first]; });
    }

    void touch_row(int k) {
        stuck_[k] = false;
        if (!row_dead_[k] && rw_[k] > 0) heap_.push({rw_[k], k});
    }

    // Weight-1 column c at row r (unit entry): the transposed free case.
    // Clearing row r by column operations touches nothing else, so the
    // whole row is deleted with zero fill.
    void eliminate_weight1_col(int c, int r) {
        for (const auto& [c2, v2] : rows_[r]) {
            if (col_dead_[c2]) continue;
            if (--cw_[c2] == 1 && c2 != c) colq_.push_back(c2);
        }
        rows_[r].clear();
        row_dead_[r] = true;
        rw_[r] = 0;
        cols_[c].clear();
        col_dead_[c] = true;
        ++rank_;
    }

    void drain_weight1_cols() {
        while (!colq_.empty()) {
            int c = colq_.front();
            colq_.pop_front();
            if (col_dead_[c] || cw_[c] != 1) continue;
            int live_row = -1, idx = -1;
            for (int k : cols_[c]) {
                if (row_dead_[k]) continue;
                int i = find_in_row(k, c);
                if (i >= 0) {
                    live_row = k;
                    idx = i;
                    break;
                }
            }
            if (live_row < 0) {  // stale column; it is actually empty
                col_dead_[c] = true;
                cols_[c].clear();
                cw_[c] = 0;
                continue;
            }
            if (!Ops<Z>::is_unit(rows_[live_row][idx].second)) continue;
            eliminate_weight1_col(c, live_row);
        }
    }

    // General unit pivot (r, c): clear column c with row operations, then
    // drop row r and column c. Clearing row r afterwards would use column
    // operations that touch nothing else, so it is a plain deletion.
    void eliminate(int r, int c) {
        compact_row(r);
        int pidx = find_in_row(r, c);
        assert(pidx >= 0);
        const Z pv = rows_[r][pidx].second;  // ±1
        std::vector<int> targets;
        for (int k : cols_[c]) {
            if (row_dead_[k] || k == r) continue;
            if (find_in_row(k, c) >= 0) targets.push_back(k);
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int k : targets) row_subtract(k, r, c, pv);

        for (const auto& [c2, v2] : rows_[r]) {
            if (col_dead_[c2]) continue;
            if (--cw_[c2] == 1 && c2 != c) colq_.push_back(c2);
        }
        rows_[r].clear();
        row_dead_[r] = true;
        rw_[r] = 0;
        cols_[c].clear();
        col_dead_[c] = true;
        ++rank_;
        drain_weight1_cols();
    }

    // row_k -= (M[k,c] / pv) * row_r, merging the two sorted rows.
    void row_subtract(int k, int r, int c, const Z& pv) {
        const auto& src = rows_[r];
        auto& dst = rows_[k];
        int kidx = find_in_row(k, c);
        assert(kidx >= 0);
        Z m = Ops<Z>::quot(dst[kidx].second, pv);
        std::vector<std::pair<int32_t, Z>> out;
        out.reserve(dst.size() + src.size());
        size_t i = 0, j = 0;
        int live = 0;
        while (i < dst.size() || j < src.size()) {
            if (j < src.size() && col_dead_[src[j].first]) {
                ++j;
                continue;
            }
            if (i < dst.size() && col_dead_[dst[i].first]) {
                ++i;
                continue;
            }
            if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
                out.push_back(dst[i++]);
                ++live;
            } else if (i == dst.size() || src[j].first < dst[i].first) {
                Z nv = Ops<Z>::sub_mul(Z(0), m, src[j].second);
                if (nv != 0) {
                    out.emplace_back(src[j].first, std::move(nv));
                    cols_[src[j].first].push_back(k);
                    ++cw_[src[j].first];
                    ++live;
                }
                ++j;
            } else {
                Z nv = Ops<Z>::sub_mul(dst[i].second, m, src[j].second);
                if (nv != 0) {
                    out.emplace_back(dst[i].first, std::move(nv));
                    ++live;
                } else {
                    if (--cw_[dst[i].first] == 1) colq_.push_back(dst[i].first);
                }
                ++i;
                ++j;
            }
        }
        dst = std::move(out);
        rw_[k] = live;
        if (live == 0) {
            row_dead_[k] = true;  // row cancelled completely
        } else {
            touch_row(k);
        }
    }

    void finish_dense() {
        std::vector<int> live_rows, live_cols;
        std::vector<int> col_map(nc_, -1);
        for (int r = 0; r < nr_; ++r)
            if (!row_dead_[r] && rw_[r] > 0) live_rows.push_back(r);
        for (int c = 0; c < nc_; ++c)
            if (!col_dead_[c] && cw_[c] > 0) {
                col_map[c] = static_cast<int>(live_cols.size());
                live_cols.push_back(c);
            }
        if (live_rows.empty() || live_cols.empty()) return;
        std::vector<std::vector<mpz_class>> dense(
            live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows_[live_rows[i]])
                if (!col_dead_[c]) dense[i][col_map[c]] = Ops<Z>::to_mpz(v);
        std::vector<mpz_class> pivots = dense_snf(std::move(dense));
        rank_ += static_cast<long long>(pivots.size());
        for (mpz_class& p : pivots)
            if (p > 1) divisors_.push_back(std::move(p));
    }

    int nr_, nc_;
    std::vector<std::vector<std::pair<int32_t, Z>>> rows_;
    std::vector<std::vector<int32_t>> cols_;
    std::vector<int32_t> rw_, cw_;
    std::vector<bool> row_dead_, col_dead_;
    std::deque<int32_t> rowq_, colq_;
    long long rank_ = 0;
    std::vector<mpz_class> divisors_;
};

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) {
    try {
        return SparseEliminator<long long>(m).run();
    } catch (const OverflowBail&) {
        return SparseEliminator<mpz_class>(m).run();
    }
}

namespace {

template <typename FaceT, typename SubFn>
SparseIntMatrix boundary_matrix(const std::vector<FaceT>& upper, const std::vector<FaceT>& lower,
                                SubFn subfaces) {
    SparseIntMatrix m;
    m.n_rows = static_cast<int>(lower.size());
    m.n_cols = static_cast<int>(upper.size());
    std::vector<FaceT> subs;
    for (size_t j = 0; j < upper.size(); ++j) {
        subs.clear();
        subfaces(upper[j], subs);
        for (size_t i = 0; i < subs.size(); ++i) {
            auto it = std::lower_bound(lower.begin(), lower.end(), subs[i]);
            assert(it != lower.end() && *it == subs[i]);
            m.entries.push_back({static_cast<int32_t>(it - lower.begin()),
                                 static_cast<int32_t>(j), (i % 2 == 0) ? 1LL : -1LL});
        }
    }
    return m;
}

void u64_subfaces(uint64_t face, std::vector<uint64_t>& out) {
    for (uint64_t rest = face; rest;) {
        uint64_t low = rest & (~rest + 1);
        out.push_back(face ^ low);
        rest ^= low;
    }
}

void bits_subfaces(const Bits& face, std::vector<Bits>& out) {
    face.for_each([&](int p) {
        Bits g = face;
        g.reset(p);
        out.push_back(std::move(g));
    });
}

}  // namespace

ChainComplexData boundary_matrices(const SimplicialComplex& k, long long max_faces) {
    ChainComplexData data;
    data.faces = k.faces_by_dimension(max_faces);
    const int top = static_cast<int>(data.faces.size()) - 1;
    data.boundary.resize(top + 1);
    if (top < 0) return data;
    // Augmentation: every vertex maps to the empty face with sign +1.
    data.boundary[0].n_rows = 1;
    data.boundary[0].n_cols = static_cast<int>(data.faces[0].size());
    for (int j = 0; j < data.boundary[0].n_cols; ++j)
        data.boundary[0].entries.push_back({0, j, 1});
    for (int d = 1; d <= top; ++d)
        data.boundary[d] = boundary_matrix(data.faces[d], data.faces[d - 1], bits_subfaces);
#ifndef NDEBUG
    // ∂∘∂ = 0, verified on small complexes only.
    for (int d = 1; d <= top; ++d) {
        const auto& a = data.boundary[d - 1];
        const auto& b = data.boundary[d];
        if (static_cast<long long>(a.entries.size()) * b.entries.size() > 4'000'000) continue;
        std::map<std::pair<int, int>, long long> prod;
        std::vector<std::vector<std::pair<int, long long>>> acols(a.n_cols);
        for (const auto& t : a.entries) acols[t.col].emplace_back(t.row, t.value);
        for (const auto& t : b.entries)
            for (const auto& [r, v] : acols[t.row]) prod[{r, t.col}] += v * t.value;
        for (const auto& [rc, v] : prod) assert(v == 0 && "boundary of boundary must vanish");
    }
#endif
    return data;
}

namespace {

template <typename FaceT, typename SubFn>
BettiVector homology_from_faces(const std::vector<std::vector<FaceT>>& faces, SubFn subfaces) {
    BettiVector out;
    const int top = static_cast<int>(faces.size()) - 1;
    if (top < 0) {
        out.set(-1, 1);  // the complex {∅}
        return out;
    }
    std::vector<long long> rank(top + 2, 0);
    rank[0] = faces[0].empty() ? 0 : 1;  // augmentation
    for (int d = 1; d <= top; ++d) {
        SparseIntMatrix m = boundary_matrix(faces[d], faces[d - 1], subfaces);
        SNFResult snf = smith_normal_form(m);
        rank[d] = snf.rank;
        if (!snf.divisors.empty()) out.torsion = true;
    }
    out.set(-1, mpz_class(1) - mpz_of(rank[0]));
    for (int d = 0; d <= top; ++d)
        out.set(d, mpz_of(static_cast<long long>(faces[d].size())) - mpz_of(rank[d]) -
                        mpz_of(rank[d + 1]));
    return out;
}

}  // namespace

BettiVector reduced_homology(const SimplicialComplex& k, long long max_faces) {
    if (k.vertex_count() <= 64) {
        auto faces = k.faces_by_dimension_u64(max_faces);
        return homology_from_faces<uint64_t>(faces, u64_subfaces);
    }
    auto faces = k.faces_by_dimension(max_faces);
    return homology_from_faces<Bits>(faces, bits_subfaces);
}

}  // namespace polyjoin
