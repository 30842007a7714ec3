#pragma once

#include <vector>

#include "pcseg/histogram.hpp"

namespace pcseg {

/// A division of the working gray range into m contiguous brightness ranges.
///
/// Thresholds are kept in canonical form: each threshold equals the smallest
/// occupied gray level of the range to its right, so partitions with equal
/// squared error have exactly one representation.
struct RangePartition {
    int m = 1;
    std::vector<int> thresholds; ///< m-1 strictly increasing gray levels
    double E = 0.0;              ///< total squared error
    double sigma = 0.0;          ///< sqrt(E/N)
};

/// Globally optimal m-range partition by dynamic programming over prefix
/// statistics. O(M^2 * m) for M occupied gray levels. Ties are broken by the
/// lexicographically smallest canonical threshold vector.
/// Throws DomainError unless 1 <= m <= distinctLevels().
RangePartition dpOptimalThresholds(const Histogram& h, int m);

/// All optima for m = 1..mMax from a single dynamic program.
std::vector<RangePartition> dpOptimalSequence(const Histogram& h, int mMax);

/// Iterative windowed re-optimization: every run of `window` consecutive
/// ranges has its interior thresholds re-optimized by exhaustive enumeration
/// while the exterior ones stay fixed. Sweeps left to right and repeats until
/// a full sweep leaves the squared error unchanged. Never increases E.
RangePartition byPartsOptimize(const Histogram& h, const RangePartition& start, int window);

/// Full sequence of threshold partitions for m = 1..M built without the
/// dynamic program: the trivial ends are given, intermediate partitions come
/// from single-range splits (downward in m: adjacent-pair merges), each
/// refined by windowed re-optimization with windows 2..maxWindow, and the
/// better candidate per m is kept.
std::vector<RangePartition> buildSequence(const Histogram& h, int maxWindow);

/// True when the optimal partition of the negated histogram (g -> G-1-g),
/// reflected back, induces the same pixel classes as the optimal partition
/// of h. Distinct equal-error optima count as invariant: the tie-break is
/// applied in the original orientation.
bool negateInvarianceCheck(const Histogram& h, int m);

/// Occupied gray levels grouped by the partition's ranges.
std::vector<std::vector<int>> partitionClasses(const Histogram& h, const RangePartition& p);

} // namespace pcseg
