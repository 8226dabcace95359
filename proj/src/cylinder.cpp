#include "qhgrass/cylinder.hpp"

#include <sstream>

namespace qhgrass {

LoopRows loop_rows(const Partition& lam, int d) {
    const Rect& r = lam.rect();
    if (d != 0 && d != 1) throw DomainError("loop_rows: only shifts d in {0,1} are supported");
    LoopRows lr{r, d, {}};
    lr.rows.resize(r.m);
    if (d == 0) {
        lr.rows = lam.parts();
    } else {
        // lambda[1]_j = l_{j-1} + 1 with l_0 = lambda_m + (n-m).
        lr.rows[0] = lam.part(r.m) + r.width() + 1;
        for (int i = 2; i <= r.m; ++i) lr.rows[i - 1] = lam.part(i - 1) + 1;
    }
    return lr;
}

int column_residue(const Rect& rect, int col) {
    return (col - 1) % rect.width() + 1;
}

CylindricSkew::CylindricSkew(const Partition& lam, int d, const Partition& mu)
    : rect_(lam.rect()), d_(d), lam_(lam), mu_(mu), loop_(loop_rows(lam, d)) {
    if (mu.rect() != rect_) throw DomainError("cylindric skew: mismatched rectangles");
    for (int i = 1; i <= rect_.m; ++i) {
        if (loop_.row(i) < mu.part(i)) {
            std::ostringstream os;
            os << "cylindric skew: loop row " << i << " has " << loop_.row(i)
               << " < inner " << mu.part(i);
            throw NotContained(os.str());
        }
        for (int j = mu.part(i) + 1; j <= loop_.row(i); ++j) boxes_.push_back({i, j});
    }
}

StripClass classify_strip(const CylindricSkew& skew) {
    const Rect& r = skew.rect();
    std::vector<int> per_row(r.m + 1, 0), per_col(r.width() + 1, 0);
    for (const Box& b : skew.boxes()) {
        ++per_row[b.row];
        ++per_col[column_residue(r, b.col)];
    }
    StripClass sc;
    bool v = true, h = true;
    for (int i = 1; i <= r.m; ++i) v = v && per_row[i] <= 1;
    for (int j = 1; j <= r.width(); ++j) h = h && per_col[j] <= 1;
    if (v) sc.vertical = skew.box_count();
    if (h) sc.horizontal = skew.box_count();
    return sc;
}

} // namespace qhgrass
