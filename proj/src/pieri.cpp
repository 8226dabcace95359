#include "qhgrass/pieri.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhgrass {

namespace {

// k-subsets of {0,..,n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - pos); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

void check_homogeneous(const Expansion& e, const Partition& mu, int grade) {
    const int n = e.rect().n;
    for (const auto& [key, coeff] : e.terms()) {
        const int want = mu.size() + grade - key.lam.size() - key.d * n;
        if (want < 0 || !coeff.value.is_homogeneous_of_degree(want))
            throw std::logic_error("pieri expansion violates degree homogeneity");
    }
}

// Partitions lambda with loop lambda[d] = mu + eps, eps in {0,1}^m, i.e. the
// outer shapes of vertical-strip diagrams over mu. Returns (lambda, d, rows).
struct ColumnTarget {
    Partition lam;
    int d;
    std::vector<int> grown_rows; // rows i with lambda[d]_i = mu_i + 1
};

std::vector<ColumnTarget> column_targets(const Partition& mu, int max_boxes) {
    const Rect r = mu.rect();
    std::vector<ColumnTarget> out;
    for (int d = 0; d <= 1; ++d) {
        for (int rr = 0; rr <= std::min(max_boxes, r.m); ++rr) {
            for_each_subset(r.m, rr, [&](const std::vector<int>& sel) {
                std::vector<int> loop(mu.parts());
                std::vector<int> rows;
                for (int i : sel) {
                    ++loop[i];
                    rows.push_back(i + 1);
                }
                std::vector<int> lam(r.m);
                if (d == 0) {
                    lam = loop;
                } else {
                    // invert lambda[1]_1 = lambda_m + (n-m) + 1, lambda[1]_i = lambda_{i-1} + 1
                    for (int j = 1; j < r.m; ++j) lam[j - 1] = loop[j] - 1;
                    lam[r.m - 1] = loop[0] - r.width() - 1;
                }
                for (int j = 0; j < r.m; ++j)
                    if (lam[j] < 0 || lam[j] > r.width() || (j > 0 && lam[j] > lam[j - 1])) return;
                out.push_back({Partition(r, std::move(lam)), d, std::move(rows)});
            });
        }
    }
    return out;
}

} // namespace

TPoly wt_v(const AddableBox& alpha) { return linear_diff(alpha.u, alpha.r - alpha.b); }
LinearFactor wt_v_factor(const AddableBox& alpha) { return {alpha.u, alpha.r - alpha.b}; }

TPoly wt_h(const HAddableBox& alpha, int n) {
    return linear_diff(n + 1 - (alpha.c - alpha.rt), alpha.s);
}
LinearFactor wt_h_factor(const HAddableBox& alpha, int n) {
    return {n + 1 - (alpha.c - alpha.rt), alpha.s};
}

std::vector<AddableBox> addable_candidates(const CylindricSkew& skew) {
    const Rect& r = skew.rect();
    const Partition& mu = skew.inner();
    std::vector<AddableBox> out;
    for (int i = 1; i <= r.m; ++i) {
        if (skew.outer_loop().row(i) == mu.part(i) && mu.part(i) >= 1) {
            AddableBox a;
            a.row = i;
            a.col = mu.part(i);
            a.u = mu.part(i) + (r.m - i + 1);
            a.r = r.m - i + 1;
            a.b = 0;
            for (const Box& bx : skew.boxes())
                if (bx.row > i) ++a.b;
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Extension> extensions(const CylindricSkew& skew, int p) {
    std::vector<Extension> out;
    StripClass sc = classify_strip(skew);
    if (!sc.vertical || *sc.vertical > p) return out;
    const int need = p - *sc.vertical;
    std::vector<AddableBox> cands = addable_candidates(skew);
    if (need > static_cast<int>(cands.size())) return out;
    std::vector<int> strip_rows;
    for (const Box& bx : skew.boxes()) strip_rows.push_back(bx.row);
    for_each_subset(static_cast<int>(cands.size()), need, [&](const std::vector<int>& sel) {
        Extension ext;
        for (int ci : sel) ext.added.push_back(cands[ci]);
        for (AddableBox& a : ext.added) {
            a.b = 0;
            for (int row : strip_rows)
                if (row > a.row) ++a.b;
            for (const AddableBox& other : ext.added)
                if (other.row > a.row) ++a.b;
            if (!(a.u > a.r - a.b && a.r - a.b >= 1))
                throw std::logic_error("addable box weight out of range");
            ext.weights.push_back(wt_v_factor(a));
        }
        out.push_back(std::move(ext));
    });
    return out;
}

Expansion column_pieri(int p, const Partition& mu) {
    const Rect r = mu.rect();
    if (p < 1 || p > r.m) {
        std::ostringstream os;
        os << "column_pieri: p = " << p << " outside [1, " << r.m << "]";
        throw InvalidP(os.str());
    }
    Expansion e(r);
    for (const ColumnTarget& t : column_targets(mu, p)) {
        CylindricSkew skew(t.lam, t.d, mu);
        FactoredSum coeff;
        for (const Extension& ext : extensions(skew, p)) coeff.push_back(ext.weights);
        if (!coeff.empty()) e.add_factored(t.lam, t.d, std::move(coeff));
    }
    check_homogeneous(e, mu, p);
    return e;
}

namespace {

struct RowTarget {
    Partition lam;
    int d;
};

std::vector<RowTarget> row_targets(const Partition& mu, int k) {
    const Rect r = mu.rect();
    std::vector<RowTarget> out;
    // d = 0: horizontal strips are exactly the shapes interlacing with mu.
    std::vector<int> lam(r.m);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == r.m) {
            out.push_back({Partition(r, lam), 0});
            return;
        }
        const int lo = mu.part(i + 1);
        const int hi = std::min(i == 0 ? r.width() : mu.part(i), lo + (k - used));
        for (int v = lo; v <= hi; ++v) {
            lam[i] = v;
            self(self, i + 1, used + (v - lo));
        }
    };
    rec(rec, 0, 0);
    // d = 1: the diagram has |lam| + n - |mu| boxes, so |lam| <= |mu| + k - n.
    const int bound = mu.size() + k - r.n;
    if (bound >= 0) {
        std::vector<int> small(r.m);
        auto rec1 = [&](auto&& self, int i, int left, int cap) -> void {
            if (i == r.m) {
                Partition lam1(r, small);
                LoopRows loop = loop_rows(lam1, 1);
                for (int row = 1; row <= r.m; ++row)
                    if (loop.row(row) < mu.part(row)) return;
                out.push_back({std::move(lam1), 1});
                return;
            }
            for (int v = std::min(left, cap); v >= 0; --v) {
                small[i] = v;
                self(self, i + 1, left - v, v);
            }
        };
        rec1(rec1, 0, bound, r.width());
    }
    return out;
}

} // namespace

Expansion row_pieri_direct(int k, const Partition& mu) {
    const Rect r = mu.rect();
    if (k < 1 || k > r.width()) {
        std::ostringstream os;
        os << "row_pieri: k = " << k << " outside [1, " << r.width() << "]";
        throw InvalidK(os.str());
    }
    const Partition mut = transpose(mu);
    Expansion e(r);
    for (const RowTarget& t : row_targets(mu, k)) {
        CylindricSkew skew(t.lam, t.d, mu);
        StripClass sc = classify_strip(skew);
        if (!sc.horizontal || *sc.horizontal > k) continue;
        const int need = k - *sc.horizontal;
        std::vector<bool> occupied(r.width() + 1, false);
        for (const Box& bx : skew.boxes()) occupied[column_residue(r, bx.col)] = true;
        std::vector<HAddableBox> cands;
        for (int j = 1; j <= r.width(); ++j) {
            if (!occupied[j] && mut.part(j) >= 1) {
                HAddableBox a;
                a.row = mut.part(j);
                a.col = j;
                a.s = r.m - mut.part(j) + j;
                a.c = r.width() - j + 1;
                cands.push_back(a);
            }
        }
        if (need > static_cast<int>(cands.size())) continue;
        std::vector<int> strip_res;
        for (const Box& bx : skew.boxes()) strip_res.push_back(column_residue(r, bx.col));
        FactoredSum coeff;
        for_each_subset(static_cast<int>(cands.size()), need, [&](const std::vector<int>& sel) {
            std::vector<LinearFactor> prod;
            for (int ci : sel) {
                HAddableBox a = cands[ci];
                a.rt = 0;
                for (int res : strip_res)
                    if (res > a.col) ++a.rt;
                for (int cj : sel)
                    if (cands[cj].col > a.col) ++a.rt;
                if (r.n + 1 - (a.c - a.rt) <= a.s)
                    throw std::logic_error("horizontal weight out of range");
                prod.push_back(wt_h_factor(a, r.n));
            }
            coeff.push_back(std::move(prod));
        });
        if (!coeff.empty()) e.add_factored(t.lam, t.d, std::move(coeff));
    }
    check_homogeneous(e, mu, k);
    return e;
}

Expansion row_pieri(int k, const Partition& mu) {
    const Rect r = mu.rect();
    if (k < 1 || k > r.width()) {
        std::ostringstream os;
        os << "row_pieri: k = " << k << " outside [1, " << r.width() << "]";
        throw InvalidK(os.str());
    }
    // Level-rank route: column rule on the transposed rectangle, mapped back
    // by conjugation and t_i -> -t_{n+1-i}.
    Expansion e = level_rank_dual(column_pieri(k, transpose(mu)));
    Expansion direct = row_pieri_direct(k, mu);
    if (!(e == direct)) throw std::logic_error("row pieri routes disagree");
    return e;
}

std::map<TermKey, Int> postnikov_pieri(PieriShape shape, int size, const Partition& mu) {
    std::map<TermKey, Int> out;
    if (shape == PieriShape::Column) {
        if (size < 1 || size > mu.rect().m) throw InvalidP("postnikov_pieri: bad p");
        for (const ColumnTarget& t : column_targets(mu, size)) {
            CylindricSkew skew(t.lam, t.d, mu);
            StripClass sc = classify_strip(skew);
            if (sc.vertical && *sc.vertical == size) out[TermKey{t.d, t.lam}] = 1;
        }
    } else {
        if (size < 1 || size > mu.rect().width()) throw InvalidK("postnikov_pieri: bad k");
        for (const RowTarget& t : row_targets(mu, size)) {
            CylindricSkew skew(t.lam, t.d, mu);
            StripClass sc = classify_strip(skew);
            if (sc.horizontal && *sc.horizontal == size) out[TermKey{t.d, t.lam}] = 1;
        }
    }
    return out;
}

Expansion apply_column_pieri(int p, const Expansion& e) {
    Expansion out(e.rect());
    for (const auto& [key, coeff] : e.terms()) {
        Expansion piece = column_pieri(p, key.lam);
        for (const auto& [pkey, pcoeff] : piece.terms())
            out.add(pkey.lam, key.d + pkey.d, coeff.value * pcoeff.value);
    }
    return out;
}

} // namespace qhgrass
