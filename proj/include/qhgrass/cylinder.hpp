#pragma once

// Cylindric loops and skew shapes: the d-shifted boundary loop of a partition
// on the cylinder Z^2 / (-m, n-m)Z, written in the canonical window of rows
// 1..m, and the box diagrams between two loops.

#include <optional>
#include <vector>

#include "qhgrass/shapes.hpp"

namespace qhgrass {

// Row lengths of the loop lambda[d] in the canonical window. Only shifts
// d in {0, 1} occur in degree reasons for Pieri products.
struct LoopRows {
    Rect rect;
    int d = 0;
    std::vector<int> rows; // rows[i-1] = lambda[d]_i, weakly decreasing off the seam

    int row(int i) const { return rows[i - 1]; } // 1-based
};

LoopRows loop_rows(const Partition& lam, int d);

// Boxes of skew diagrams are in canonical coordinates: row in 1..m, column
// >= 1, columns beyond the rectangle width belonging to the wrapped copy.
// Column residue in 1..n-m; two boxes with equal residue lie in the same
// cylinder column. Rows in the window are already canonical.
int column_residue(const Rect& rect, int col);

// The cylindric skew diagram lambda[d]/mu: in row i the columns
// mu_i+1 .. lambda[d]_i. Construction requires lambda[d]_i >= mu_i rowwise.
class CylindricSkew {
public:
    CylindricSkew(const Partition& lam, int d, const Partition& mu); // throws NotContained

    const Rect& rect() const { return rect_; }
    int d() const { return d_; }
    const Partition& outer() const { return lam_; }
    const Partition& inner() const { return mu_; }
    const LoopRows& outer_loop() const { return loop_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    int box_count() const { return static_cast<int>(boxes_.size()); }

private:
    Rect rect_;
    int d_;
    Partition lam_, mu_;
    LoopRows loop_;
    std::vector<Box> boxes_;
};

// vertical holds the box count when no two boxes share a cylinder row,
// horizontal when no two share a cylinder column; both hold for diagrams
// that are single diagonals (in particular the empty one).
struct StripClass {
    std::optional<int> vertical;
    std::optional<int> horizontal;
};

StripClass classify_strip(const CylindricSkew& skew);

} // namespace qhgrass
