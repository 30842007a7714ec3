#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcseg/errors.hpp"

namespace pcseg {

/// Statistics of one brightness range: pixel count, intensity sum and the
/// sum of squared deviations from the range mean.
struct RangeStats {
    std::uint64_t n = 0;
    std::uint64_t sum = 0;
    double sse = 0.0;

    /// Mean intensity. Only meaningful when n > 0.
    double mean() const { return static_cast<double>(sum) / static_cast<double>(n); }
};

/// Brightness histogram with prefix statistics.
///
/// Counts and intensity sums are kept in integer arithmetic; squared-error
/// queries are answered in O(1) from the prefix arrays and evaluated in
/// double precision only at query time, so repeated range queries never
/// accumulate drift.
class Histogram {
public:
    /// Builds from raw per-level counts. The number of levels is counts.size().
    explicit Histogram(std::vector<std::uint64_t> counts);

    /// Number of representable gray levels G (range is [0, G)).
    int levels() const { return static_cast<int>(counts_.size()); }

    /// Total pixel count N.
    std::uint64_t total() const { return prefixCount_.back(); }

    /// Number of gray levels that actually occur (M).
    int distinctLevels() const { return distinct_; }

    std::uint64_t countAt(int level) const;

    /// Statistics of the half-open brightness range [lo, hi). O(1).
    RangeStats range(int lo, int hi) const;

    /// Total squared error of the piecewise-constant approximation defined by
    /// a strictly increasing threshold vector. Thresholds split [0, G) into
    /// ranges [0,t1), [t1,t2), ..., [tk,G); each pixel is replaced by its
    /// range mean.
    double totalSse(std::span<const int> thresholds) const;

    /// totalSse with no thresholds: N times the global variance.
    double globalSse() const;

    /// Standard deviation corresponding to a squared error: sqrt(E/N).
    double sigmaFor(double sse) const;

    /// Ascending list of gray levels with nonzero count.
    std::vector<int> supportLevels() const;

    /// Histogram of the negated image: level g maps to G-1-g.
    Histogram negated() const;

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> prefixCount_;
    std::vector<std::uint64_t> prefixSum_;
    std::vector<std::uint64_t> prefixSumSq_;
    int distinct_ = 0;
};

/// Counts pixels into a histogram with `levels` bins.
/// Throws EmptyImageError on an empty sequence and DomainError when a pixel
/// value is outside [0, levels).
Histogram buildHistogram(std::span<const std::uint16_t> pixels, int levels);

} // namespace pcseg
