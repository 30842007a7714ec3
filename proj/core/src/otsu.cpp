#include "pcseg/otsu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pcseg {

namespace {

// Occupied gray levels and O(1) squared-error lookup for runs of them.
// Boundaries and classes below are expressed as indices into `levels`.
class SupportView {
public:
    explicit SupportView(const Histogram& h) : h_(&h), levels_(h.supportLevels()) {}

    int size() const { return static_cast<int>(levels_.size()); }
    int level(int i) const { return levels_[static_cast<std::size_t>(i)]; }

    // SSE of the class holding support levels [a, b).
    double cost(int a, int b) const {
        return h_->range(levels_[static_cast<std::size_t>(a)],
                         levels_[static_cast<std::size_t>(b - 1)] + 1)
            .sse;
    }

    // Canonical threshold for a class boundary at support index i.
    int thresholdAt(int i) const { return levels_[static_cast<std::size_t>(i)]; }

    // Maps a threshold vector to boundary indices; validates that every
    // class is nonempty. Returned vector is [0, b1, ..., b_{m-1}, M].
    std::vector<int> boundaries(const std::vector<int>& thresholds) const {
        std::vector<int> b;
        b.reserve(thresholds.size() + 2);
        b.push_back(0);
        int prevT = 0;
        for (const int t : thresholds) {
            if (t <= prevT || t >= h_->levels()) {
                throw DomainError("thresholds must be strictly increasing inside (0, G)");
            }
            prevT = t;
            const auto it = std::lower_bound(levels_.begin(), levels_.end(), t);
            const int idx = static_cast<int>(it - levels_.begin());
            if (idx <= b.back() || idx >= size()) {
                throw DomainError("threshold leaves an empty brightness range");
            }
            b.push_back(idx);
        }
        b.push_back(size());
        return b;
    }

    std::vector<int> thresholds(const std::vector<int>& boundaries) const {
        std::vector<int> t;
        t.reserve(boundaries.size() - 2);
        for (std::size_t i = 1; i + 1 < boundaries.size(); ++i) {
            t.push_back(thresholdAt(boundaries[i]));
        }
        return t;
    }

    RangePartition partition(const Histogram& h, const std::vector<int>& boundaries) const {
        RangePartition p;
        p.m = static_cast<int>(boundaries.size()) - 1;
        p.thresholds = thresholds(boundaries);
        p.E = h.totalSse(p.thresholds);
        p.sigma = h.sigmaFor(p.E);
        return p;
    }

private:
    const Histogram* h_;
    std::vector<int> levels_;
};

bool lexLess(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Better candidate under the global tie rule: smaller E, then smaller vector.
const RangePartition& better(const RangePartition& a, const RangePartition& b) {
    if (a.E != b.E) {
        return a.E < b.E ? a : b;
    }
    return lexLess(b.thresholds, a.thresholds) ? b : a;
}

// Exhaustive enumeration of `classes`-way splits of support range [sLo, sHi).
// Returns interior boundary indices of the best split; ties resolve to the
// lexicographically smallest tuple because candidates are visited in
// ascending order and replaced only on strict improvement.
struct WindowSplit {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<int> interior;
};

void enumerateSplits(const SupportView& sv, int sLo, int sHi, int classes, int from, double acc,
                     std::vector<int>& current, WindowSplit& best) {
    if (acc >= best.cost) {
        return; // partial cost already not better
    }
    if (static_cast<int>(current.size()) == classes - 1) {
        const double total = acc + sv.cost(from, sHi);
        if (total < best.cost) {
            best.cost = total;
            best.interior = current;
        }
        return;
    }
    const int remaining = classes - 1 - static_cast<int>(current.size());
    for (int p = from + 1; p <= sHi - remaining; ++p) {
        current.push_back(p);
        enumerateSplits(sv, sLo, sHi, classes, p, acc + sv.cost(from, p), current, best);
        current.pop_back();
    }
}

WindowSplit bestWindowSplit(const SupportView& sv, int sLo, int sHi, int classes) {
    WindowSplit best;
    std::vector<int> current;
    enumerateSplits(sv, sLo, sHi, classes, sLo, 0.0, current, best);
    return best;
}

// Suffix dynamic program: table[j][i] = minimal squared error of covering
// support levels [i, M) with j classes.
std::vector<std::vector<double>> suffixTables(const SupportView& sv, int mMax) {
    const int M = sv.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> table(static_cast<std::size_t>(mMax) + 1,
                                           std::vector<double>(static_cast<std::size_t>(M) + 1, inf));
    for (int i = 0; i < M; ++i) {
        table[1][static_cast<std::size_t>(i)] = sv.cost(i, M);
    }
    for (int j = 2; j <= mMax; ++j) {
        for (int i = 0; i + j <= M; ++i) {
            double bestCost = inf;
            for (int p = i + 1; p <= M - (j - 1); ++p) {
                const double c = sv.cost(i, p) + table[j - 1][static_cast<std::size_t>(p)];
                if (c < bestCost) {
                    bestCost = c;
                }
            }
            table[j][static_cast<std::size_t>(i)] = bestCost;
        }
    }
    return table;
}

// Reconstructs the lexicographically smallest optimal boundary list for m
// classes: at each step the smallest feasible class end achieving the table
// value is taken, which fixes the smallest next threshold first.
std::vector<int> reconstruct(const SupportView& sv, const std::vector<std::vector<double>>& table, int m) {
    const int M = sv.size();
    std::vector<int> boundaries{0};
    int i = 0;
    for (int rem = m; rem >= 2; --rem) {
        const double target = table[rem][static_cast<std::size_t>(i)];
        int chosen = -1;
        for (int p = i + 1; p <= M - (rem - 1); ++p) {
            if (sv.cost(i, p) + table[rem - 1][static_cast<std::size_t>(p)] == target) {
                chosen = p;
                break;
            }
        }
        if (chosen < 0) {
            throw InternalError("dp reconstruction found no matching split");
        }
        boundaries.push_back(chosen);
        i = chosen;
    }
    boundaries.push_back(M);
    return boundaries;
}

std::vector<int> trivialBoundaries(int M) {
    return {0, M};
}

std::vector<int> finestBoundaries(int M) {
    std::vector<int> b(static_cast<std::size_t>(M) + 1);
    for (int i = 0; i <= M; ++i) {
        b[static_cast<std::size_t>(i)] = i;
    }
    return b;
}

// Splits one range of `base` at its best position; the candidate with the
// largest error decrease wins, ties resolve to the lexicographically
// smallest resulting threshold vector (earliest range, earliest position).
std::vector<int> bestSingleSplit(const SupportView& sv, const std::vector<int>& base) {
    const int m = static_cast<int>(base.size()) - 1;
    double bestDrop = -std::numeric_limits<double>::infinity();
    int bestRange = -1;
    int bestPos = -1;
    for (int r = 0; r < m; ++r) {
        const int lo = base[static_cast<std::size_t>(r)];
        const int hi = base[static_cast<std::size_t>(r) + 1];
        if (hi - lo < 2) {
            continue;
        }
        const double whole = sv.cost(lo, hi);
        for (int p = lo + 1; p < hi; ++p) {
            const double drop = whole - (sv.cost(lo, p) + sv.cost(p, hi));
            if (drop > bestDrop) {
                bestDrop = drop;
                bestRange = r;
                bestPos = p;
            }
        }
    }
    if (bestRange < 0) {
        throw DomainError("no range can be split further");
    }
    std::vector<int> out = base;
    out.insert(out.begin() + bestRange + 1, bestPos);
    return out;
}

// Merges the adjacent range pair with the smallest error increase; ties
// resolve to the lexicographically smallest resulting threshold vector
// (removing the later boundary keeps the smaller threshold in place).
std::vector<int> bestPairMerge(const SupportView& sv, const std::vector<int>& base) {
    const int m = static_cast<int>(base.size()) - 1;
    if (m < 2) {
        throw DomainError("nothing to merge");
    }
    double bestRise = std::numeric_limits<double>::infinity();
    int bestR = -1;
    for (int r = 0; r + 1 < m; ++r) {
        const int lo = base[static_cast<std::size_t>(r)];
        const int mid = base[static_cast<std::size_t>(r) + 1];
        const int hi = base[static_cast<std::size_t>(r) + 2];
        const double rise = sv.cost(lo, hi) - sv.cost(lo, mid) - sv.cost(mid, hi);
        if (rise <= bestRise) {
            bestRise = rise;
            bestR = r;
        }
    }
    std::vector<int> out = base;
    out.erase(out.begin() + bestR + 1);
    return out;
}

RangePartition refine(const Histogram& h, const RangePartition& p, int maxWindow) {
    RangePartition out = p;
    for (int l = 2; l <= maxWindow; ++l) {
        out = byPartsOptimize(h, out, l);
    }
    return out;
}

} // namespace

RangePartition dpOptimalThresholds(const Histogram& h, int m) {
    const SupportView sv(h);
    if (m < 1 || m > sv.size()) {
        throw DomainError("class count must be between 1 and the number of occupied gray levels");
    }
    const auto table = suffixTables(sv, m);
    return sv.partition(h, reconstruct(sv, table, m));
}

std::vector<RangePartition> dpOptimalSequence(const Histogram& h, int mMax) {
    const SupportView sv(h);
    if (mMax < 1 || mMax > sv.size()) {
        throw DomainError("class count must be between 1 and the number of occupied gray levels");
    }
    const auto table = suffixTables(sv, mMax);
    std::vector<RangePartition> out;
    out.reserve(static_cast<std::size_t>(mMax));
    for (int m = 1; m <= mMax; ++m) {
        out.push_back(sv.partition(h, reconstruct(sv, table, m)));
    }
    return out;
}

RangePartition byPartsOptimize(const Histogram& h, const RangePartition& start, int window) {
    if (window < 2) {
        throw DomainError("window must span at least two ranges");
    }
    const SupportView sv(h);
    if (start.m != static_cast<int>(start.thresholds.size()) + 1 || start.m > sv.size()) {
        throw DomainError("invalid start partition");
    }
    std::vector<int> b = sv.boundaries(start.thresholds);
    const int m = static_cast<int>(b.size()) - 1;
    if (m >= 2) {
        const int lw = std::min(window, m);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int w = 0; w + lw <= m; ++w) {
                const int sLo = b[static_cast<std::size_t>(w)];
                const int sHi = b[static_cast<std::size_t>(w) + static_cast<std::size_t>(lw)];
                double current = 0.0;
                for (int r = w; r < w + lw; ++r) {
                    current += sv.cost(b[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(r) + 1]);
                }
                WindowSplit split = bestWindowSplit(sv, sLo, sHi, lw);
                if (split.cost < current) {
                    for (int r = 0; r < lw - 1; ++r) {
                        b[static_cast<std::size_t>(w + 1 + r)] = split.interior[static_cast<std::size_t>(r)];
                    }
                    changed = true;
                }
            }
        }
    }
    return sv.partition(h, b);
}

std::vector<RangePartition> buildSequence(const Histogram& h, int maxWindow) {
    if (maxWindow < 2) {
        throw DomainError("window must span at least two ranges");
    }
    const SupportView sv(h);
    const int M = sv.size();

    std::vector<RangePartition> best(static_cast<std::size_t>(M) + 1);
    best[1] = sv.partition(h, trivialBoundaries(M));
    if (M == 1) {
        return {best[1]};
    }
    best[static_cast<std::size_t>(M)] = sv.partition(h, finestBoundaries(M));

    // Ascending chain: split the most rewarding range, then re-optimize.
    {
        RangePartition cur = best[1];
        for (int m = 2; m < M; ++m) {
            cur = refine(h, sv.partition(h, bestSingleSplit(sv, sv.boundaries(cur.thresholds))), maxWindow);
            best[static_cast<std::size_t>(m)] = cur;
        }
    }
    // Descending chain: merge the cheapest adjacent pair, then re-optimize.
    {
        RangePartition cur = best[static_cast<std::size_t>(M)];
        for (int m = M - 1; m >= 2; --m) {
            cur = refine(h, sv.partition(h, bestPairMerge(sv, sv.boundaries(cur.thresholds))), maxWindow);
            best[static_cast<std::size_t>(m)] = better(best[static_cast<std::size_t>(m)], cur);
        }
    }
    // Propagate improvements between neighboring m until a fixed point; each
    // replacement strictly lowers some E, so this settles quickly.
    for (int round = 0; round < 8; ++round) {
        bool changed = false;
        for (int m = 1; m < M; ++m) {
            if (best[static_cast<std::size_t>(m) + 1].E == 0.0) {
                continue;
            }
            RangePartition cand = refine(
                h, sv.partition(h, bestSingleSplit(sv, sv.boundaries(best[static_cast<std::size_t>(m)].thresholds))),
                maxWindow);
            if (cand.E < best[static_cast<std::size_t>(m) + 1].E) {
                best[static_cast<std::size_t>(m) + 1] = cand;
                changed = true;
            }
        }
        for (int m = M; m >= 2; --m) {
            RangePartition cand = refine(
                h, sv.partition(h, bestPairMerge(sv, sv.boundaries(best[static_cast<std::size_t>(m)].thresholds))),
                maxWindow);
            if (cand.E < best[static_cast<std::size_t>(m) - 1].E) {
                best[static_cast<std::size_t>(m) - 1] = cand;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }

    std::vector<RangePartition> out;
    out.reserve(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        out.push_back(std::move(best[static_cast<std::size_t>(m)]));
    }
    return out;
}

std::vector<std::vector<int>> partitionClasses(const Histogram& h, const RangePartition& p) {
    const SupportView sv(h);
    const auto b = sv.boundaries(p.thresholds);
    std::vector<std::vector<int>> classes;
    classes.reserve(b.size() - 1);
    for (std::size_t r = 0; r + 1 < b.size(); ++r) {
        std::vector<int> cls;
        for (int i = b[r]; i < b[r + 1]; ++i) {
            cls.push_back(sv.level(i));
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool negateInvarianceCheck(const Histogram& h, int m) {
    const RangePartition direct = dpOptimalThresholds(h, m);
    const auto directClasses = partitionClasses(h, direct);

    const Histogram neg = h.negated();
    const RangePartition mirrored = dpOptimalThresholds(neg, m);
    auto mirroredClasses = partitionClasses(neg, mirrored);

    const int g = h.levels();
    for (auto& cls : mirroredClasses) {
        for (int& level : cls) {
            level = g - 1 - level;
        }
        std::reverse(cls.begin(), cls.end());
    }
    std::reverse(mirroredClasses.begin(), mirroredClasses.end());

    if (mirroredClasses == directClasses) {
        return true;
    }
    // Distinct class families can only coexist at equal squared error; then
    // the tie-break applied in the original orientation selects one family
    // for both computations and the partitions coincide.
    std::vector<int> reflectedThresholds;
    for (std::size_t r = 1; r < mirroredClasses.size(); ++r) {
        reflectedThresholds.push_back(mirroredClasses[r].front());
    }
    const double reflectedE = h.totalSse(reflectedThresholds);
    const double tol = 1e-9 * std::max(1.0, direct.E);
    return std::abs(reflectedE - direct.E) <= tol;
}

} // namespace pcseg
