#include "qhgrass/shapes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qhgrass {

namespace {

std::string shape_str(const Rect& r, const std::vector<int>& parts) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ") in Rect(" << r.m << "," << r.n << ")";
    return os.str();
}

} // namespace

Partition::Partition(Rect rect, std::vector<int> parts) : rect_(rect), parts_(std::move(parts)) {
    if (rect_.m < 0 || rect_.m >= rect_.n)
        throw InvalidPartition("rectangle requires 0 <= m < n");
    if (static_cast<int>(parts_.size()) > rect_.m)
        throw InvalidPartition("too many parts: " + shape_str(rect_, parts_));
    parts_.resize(rect_.m, 0);
    for (int i = 0; i < rect_.m; ++i) {
        if (parts_[i] < 0 || parts_[i] > rect_.width() || (i > 0 && parts_[i] > parts_[i - 1]))
            throw InvalidPartition("not a partition in the rectangle: " + shape_str(rect_, parts_));
    }
}

Partition Partition::column(Rect rect, int p) {
    return Partition(rect, std::vector<int>(p, 1));
}

Partition Partition::row(Rect rect, int k) {
    return Partition(rect, {k});
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

int Partition::column_height(int j) const {
    int h = 0;
    while (h < rect_.m && parts_[h] >= j) ++h;
    return h;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rect_ != rect_) return false;
    for (int i = 0; i < rect_.m; ++i)
        if (parts_[i] < inner.parts_[i]) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    if (rect_ != o.rect_) return rect_ < o.rect_;
    int sa = size(), sb = o.size();
    if (sa != sb) return sa < sb;
    return parts_ > o.parts_; // descending lex within a degree
}

Partition make_partition(const Rect& rect, const std::vector<int>& parts) {
    return Partition(rect, parts);
}

Partition transpose(const Partition& lam) {
    const Rect& r = lam.rect();
    std::vector<int> cols(r.width());
    for (int j = 1; j <= r.width(); ++j) cols[j - 1] = lam.column_height(j);
    return Partition(Rect{r.width(), r.n}, std::move(cols));
}

BoundarySteps boundary_steps(const Partition& lam) {
    const Rect& r = lam.rect();
    BoundarySteps bs;
    bs.up.resize(r.m);
    for (int k = 1; k <= r.m; ++k) bs.up[k - 1] = lam.part(r.m - k + 1) + k;
    std::set<int> ups(bs.up.begin(), bs.up.end());
    for (int j = 1; j <= r.n; ++j)
        if (!ups.count(j)) bs.side.push_back(j);
    return bs;
}

std::vector<int> grassmann_perm(const Partition& lam) {
    BoundarySteps bs = boundary_steps(lam);
    std::vector<int> w = std::move(bs.up);
    w.insert(w.end(), bs.side.begin(), bs.side.end());
    return w;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<Partition> enumerate_partitions(const Rect& rect, long long cap) {
    if (binomial(rect.n, rect.m) > cap) {
        std::ostringstream os;
        os << "enumerate_partitions: binomial(" << rect.n << "," << rect.m << ") exceeds cap " << cap;
        throw TooLarge(os.str());
    }
    std::vector<Partition> out;
    std::vector<int> cur(rect.m);
    auto rec = [&](auto&& self, int i, int bound) -> void {
        if (i == rect.m) {
            out.emplace_back(rect, cur);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, rect.width());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RimHookReduction> n_core_reduce(const WidePartition& gamma, int n, const Rect& target) {
    const int m = gamma.rows();
    if (m != target.m)
        throw InvalidPartition("n_core_reduce: row count does not match the target rectangle");
    for (int i = 0; i < m; ++i)
        if (gamma.parts[i] < 0 || (i > 0 && gamma.parts[i] > gamma.parts[i - 1]))
            throw InvalidPartition("n_core_reduce: input is not a partition");
    std::set<int> beta;
    for (int i = 0; i < m; ++i) beta.insert(gamma.parts[i] + m - 1 - i);
    RimHookReduction red{Partition::empty(target), 0, {}, 1};
    // Removing an n-hook moves one beta-number down by n onto a free slot; the
    // hook height is one more than the count of beta-numbers jumped over.
    for (;;) {
        int pick = -1;
        for (auto it = beta.rbegin(); it != beta.rend(); ++it) {
            if (*it >= n && !beta.count(*it - n)) {
                pick = *it;
                break;
            }
        }
        if (pick < 0) break;
        int height = 1;
        for (int b : beta)
            if (pick - n < b && b < pick) ++height;
        beta.erase(pick);
        beta.insert(pick - n);
        red.heights.push_back(height);
        if ((height - m) & 1) red.sign = -red.sign;
    }
    red.d = static_cast<int>(red.heights.size());
    std::vector<int> sorted(beta.rbegin(), beta.rend());
    std::vector<int> core(m);
    for (int i = 0; i < m; ++i) core[i] = sorted[i] - (m - 1 - i);
    if (m > 0 && core[0] > target.width()) return std::nullopt;
    red.core = Partition(target, std::move(core));
    return red;
}

} // namespace qhgrass
