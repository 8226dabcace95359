#include "qhgrass/localization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qhgrass {

std::vector<SSYT> enumerate_ssyt(const std::vector<int>& shape, int alphabet) {
    std::vector<int> rows;
    for (int x : shape)
        if (x > 0) rows.push_back(x);
    std::vector<SSYT> out;
    if (static_cast<int>(rows.size()) > alphabet) return out;
    SSYT t;
    for (int len : rows) t.rows.push_back(std::vector<int>(len, 0));
    std::vector<Box> order;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < rows[i]; ++j) order.push_back({i, j});
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = order[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);     // weak along rows
        if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1); // strict down columns
        for (int v = lo; v <= alphabet; ++v) {
            t.rows[i][j] = v;
            self(self, k + 1);
        }
        t.rows[i][j] = 0;
    };
    rec(rec, 0);
    return out;
}

XSpec xspec_from_upsteps(const Partition& eta) {
    BoundarySteps bs = boundary_steps(eta);
    XSpec x;
    for (int u : bs.up) x.values.push_back(TPoly::var(u));
    return x;
}

XSpec xspec_identity(int mprime) {
    XSpec x;
    for (int i = 1; i <= mprime; ++i) x.values.push_back(TPoly::var(i));
    return x;
}

TPoly factorial_schur(const std::vector<int>& shape, const XSpec& x,
                      const std::function<int(int)>& tmap) {
    const int alphabet = static_cast<int>(x.values.size());
    std::vector<int> rows;
    for (int v : shape)
        if (v > 0) rows.push_back(v);
    if (static_cast<int>(rows.size()) > alphabet) return TPoly::zero();
    if (rows.empty()) return TPoly::constant(1);
    auto shift = [&](int idx) { return tmap ? tmap(idx) : idx; };

    const int ncols = rows[0];
    std::vector<int> height(ncols);
    for (int j = 1; j <= ncols; ++j)
        height[j - 1] = static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                                       [&](int r) { return r >= j; }));

    // Transfer right to left over column fillings (strictly increasing down);
    // a filling couples to the next column by weak increase along rows. Each
    // state accumulates the full sum over tableaux of the columns to its
    // right, so the result is exactly the tableau sum.
    using State = std::vector<int>;
    std::map<State, TPoly> prev;
    bool first = true;
    for (int c = ncols; c >= 1; --c) {
        const int h = height[c - 1];
        std::map<State, TPoly> cur;
        State st(h);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == h) {
                TPoly w = TPoly::constant(1);
                for (int i = 1; i <= h; ++i) {
                    TPoly f = x.values[st[i - 1] - 1] - TPoly::var(shift(st[i - 1] + c - i));
                    if (f.is_zero()) return;
                    w = w * f;
                }
                if (first) {
                    cur.emplace(st, std::move(w));
                    return;
                }
                TPoly acc;
                for (const auto& [nxt, val] : prev) {
                    bool ok = true;
                    for (std::size_t i = 0; i < nxt.size(); ++i)
                        if (st[i] > nxt[i]) { ok = false; break; }
                    if (ok) acc += val;
                }
                if (!acc.is_zero()) cur.emplace(st, w * acc);
                return;
            }
            for (int v = lo; v <= alphabet - (h - pos - 1); ++v) {
                st[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
        if (cur.empty()) return TPoly::zero();
        prev = std::move(cur);
        first = false;
    }
    TPoly out;
    for (const auto& [st, val] : prev) out += val;
    return out;
}

TPoly xi(const Partition& gamma, const Partition& eta) {
    if (gamma.rect() != eta.rect()) throw DomainError("xi: mismatched rectangles");
    return factorial_schur(gamma.parts(), xspec_from_upsteps(eta));
}

std::vector<LinearFactor> xi_diag(const Partition& eta) {
    const Rect& r = eta.rect();
    BoundarySteps bs = boundary_steps(eta);
    std::vector<LinearFactor> out;
    for (int i = 1; i <= r.m; ++i)
        for (int j = 1; j <= eta.part(i); ++j) out.push_back({bs.up[r.m - i], bs.side[j - 1]});
    return out;
}

TPoly xi_diag_expanded(const Partition& eta) {
    TPoly p = TPoly::constant(1);
    for (const LinearFactor& f : xi_diag(eta)) p = p * linear_diff(f.a, f.b);
    return p;
}

Partition join_and_cut(const Partition& lam, const Partition& mu) {
    const Rect rl = lam.rect();
    const Rect rm = mu.rect();
    if (rl.m != rm.m || rl.n != rm.n + 1)
        throw DomainError("join_and_cut: lambda must live one column wider than mu");
    const int m = rl.m;
    int r = 0;
    for (int i = 1; i <= m; ++i) {
        const int diff = lam.part(i) - mu.part(i);
        if (diff != 0 && diff != 1) {
            std::ostringstream os;
            os << "join_and_cut: lambda/mu is not a vertical strip at row " << i;
            throw NotVerticalStrip(os.str());
        }
        r += diff;
    }
    std::vector<int> parts;
    int j = 0;
    for (int i = 1; i <= m; ++i) {
        if (lam.part(i) == mu.part(i)) {
            ++j;
            parts.push_back(mu.part(i) - i + r + j);
        }
    }
    return Partition(Rect{m - r, rl.n}, std::move(parts));
}

TPoly psi_factor(const Partition& eta, const std::vector<int>& iota, int j) {
    BoundarySteps bs = boundary_steps(eta);
    return linear_diff(bs.up[iota[j - 1] + j - 2], iota[j - 1]);
}

TPoly psi(const Partition& eta, int pprime) {
    const int mp = eta.rect().m;
    if (pprime == 0) return TPoly::constant(1);
    if (pprime < 0 || mp - pprime + 1 <= 0) return TPoly::zero();
    BoundarySteps bs = boundary_steps(eta);
    TPoly out;
    std::vector<int> iota(pprime);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == pprime) {
            TPoly prod = TPoly::constant(1);
            for (int j = 1; j <= pprime; ++j) {
                TPoly f = linear_diff(bs.up[iota[j - 1] + j - 2], iota[j - 1]);
                if (f.is_zero()) return;
                prod = prod * f;
            }
            out += prod;
            return;
        }
        for (int v = lo; v <= mp - pprime + 1; ++v) {
            iota[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

std::map<Partition, TPoly> huangli_column_pieri(int p, const Partition& mu) {
    const Rect r = mu.rect();
    if (p < 1 || p > r.m) throw InvalidP("huangli_column_pieri: p outside [1, m]");
    const Rect wide{r.m, r.n + 1};
    std::map<Partition, TPoly> out;
    const int subsets = 1 << r.m;
    for (int mask = 0; mask < subsets; ++mask) {
        std::vector<int> parts(r.m);
        int rr = 0;
        for (int i = 0; i < r.m; ++i) {
            parts[i] = mu.parts()[i] + ((mask >> i) & 1);
            rr += (mask >> i) & 1;
        }
        if (rr > p) continue;
        bool valid = parts[0] <= wide.width();
        for (int i = 1; valid && i < r.m; ++i) valid = parts[i] <= parts[i - 1];
        if (!valid) continue;
        Partition lam(wide, parts);
        Partition cut = join_and_cut(lam, mu);
        if (p - rr > cut.rect().m) continue;
        TPoly c = factorial_schur(std::vector<int>(p - rr, 1), xspec_from_upsteps(cut));
        if (!c.is_zero()) out.emplace(std::move(lam), std::move(c));
    }
    return out;
}

std::vector<std::vector<Box>> excited_column_diagrams(int k, const Partition& eta) {
    std::vector<std::vector<Box>> out;
    const Rect& r = eta.rect();
    if (k > r.m) return out;
    std::vector<Box> init;
    for (int i = 1; i <= k; ++i) {
        if (eta.part(i) < 1) return out; // column not contained
        init.push_back({i, 1});
    }
    std::set<std::vector<Box>> seen;
    std::vector<std::vector<Box>> queue{init};
    seen.insert(init);
    while (!queue.empty()) {
        std::vector<Box> d = queue.back();
        queue.pop_back();
        out.push_back(d);
        std::set<Box> occ(d.begin(), d.end());
        for (std::size_t idx = 0; idx < d.size(); ++idx) {
            Box b = d[idx];
            Box tgt{b.row + 1, b.col + 1};
            if (tgt.row > r.m || eta.part(tgt.row) < tgt.col) continue;
            if (occ.count(tgt) || occ.count({b.row + 1, b.col}) || occ.count({b.row, b.col + 1}))
                continue;
            std::vector<Box> nd = d;
            nd[idx] = tgt;
            std::sort(nd.begin(), nd.end());
            if (seen.insert(nd).second) queue.push_back(nd);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TPoly xi_column_via_excited(int k, const Partition& eta) {
    BoundarySteps bs = boundary_steps(eta);
    const int m = eta.rect().m;
    TPoly out;
    for (const auto& diagram : excited_column_diagrams(k, eta)) {
        TPoly prod = TPoly::constant(1);
        for (const Box& b : diagram)
            prod = prod * linear_diff(bs.up[m - b.row], bs.side[b.col - 1]);
        out += prod;
    }
    return out;
}

} // namespace qhgrass
