#pragma once

// Partitions in an m x (n-m) rectangle, boundary step data, Grassmann
// permutations, graded enumeration and n-core reduction.

#include <compare>
#include <optional>
#include <vector>

#include "qhgrass/errors.hpp"
#include "qhgrass/poly.hpp"

namespace qhgrass {

// A lattice box, row and column both 1-based (row 1 on top).
struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// The Grassmannian parameters. Rows m may be 0 for the degenerate rectangle
// that only holds the empty partition (it shows up as a join_and_cut image).
struct Rect {
    int m = 0;
    int n = 0;

    int width() const { return n - m; }
    bool operator==(const Rect&) const = default;
    auto operator<=>(const Rect&) const = default;
};

// Weakly decreasing parts, padded with zeros to exactly m entries, each bound
// by the rectangle width.
class Partition {
public:
    Partition(Rect rect, std::vector<int> parts); // validates; throws InvalidPartition

    static Partition empty(Rect rect) { return Partition(rect, {}); }
    static Partition column(Rect rect, int p); // (1)^p
    static Partition row(Rect rect, int k);    // (k)

    const Rect& rect() const { return rect_; }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i - 1]; } // 1-based
    int size() const;                               // number of boxes
    bool is_empty() const { return size() == 0; }
    // Height of column j (number of parts >= j).
    int column_height(int j) const;
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    // Graded order: by size, then descending lexicographic on parts. This is
    // the enumeration and output order everywhere.
    bool operator<(const Partition& o) const;

private:
    Rect rect_;
    std::vector<int> parts_;
};

Partition make_partition(const Rect& rect, const std::vector<int>& parts);
Partition transpose(const Partition& lam); // into Rect(n-m, n)

// Boundary path steps numbered 1..n from the lower-left corner of the
// rectangle: up[k-1] is the k-th vertical step counted bottom-up
// (up[k-1] = lambda_{m-k+1} + k), side is the sorted complement.
struct BoundarySteps {
    std::vector<int> up;
    std::vector<int> side;
};
BoundarySteps boundary_steps(const Partition& lam);

// One-line window [u_1..u_m | s_1..s_{n-m}] of the Grassmann permutation.
std::vector<int> grassmann_perm(const Partition& lam);

Int binomial(int n, int k);

// All partitions in the rectangle in graded order. Throws TooLarge when
// binomial(n, m) exceeds the cap.
std::vector<Partition> enumerate_partitions(const Rect& rect, long long cap = 1000000);

// A partition with a fixed number of rows but unbounded part size, as
// produced by classical products in a wide ambient rectangle.
struct WidePartition {
    std::vector<int> parts; // weakly decreasing, padded to the row count

    int rows() const { return static_cast<int>(parts.size()); }
    bool operator<(const WidePartition& o) const { return parts < o.parts; }
    bool operator==(const WidePartition&) const = default;
};

struct RimHookReduction {
    Partition core;           // n-core, fits the target rectangle
    int d = 0;                // number of n-hooks removed
    std::vector<int> heights; // hook heights in removal order
    int sign = 1;             // prod (-1)^(height_i - m)
};

// Removes n-hooks via beta-numbers until the n-core remains. Returns nullopt
// when the core does not fit the target rectangle (the class vanishes).
// The (core, d, sign) triple is independent of removal order; the recorded
// heights follow the deterministic largest-beta-first order.
std::optional<RimHookReduction> n_core_reduce(const WidePartition& gamma, int n, const Rect& target);

} // namespace qhgrass
