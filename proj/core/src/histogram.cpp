#include "pcseg/histogram.hpp"

#include <algorithm>
#include <cmath>

namespace pcseg {

Histogram::Histogram(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw DomainError("histogram needs at least one gray level");
    }
    const std::size_t g = counts_.size();
    prefixCount_.assign(g + 1, 0);
    prefixSum_.assign(g + 1, 0);
    prefixSumSq_.assign(g + 1, 0);
    for (std::size_t i = 0; i < g; ++i) {
        const std::uint64_t c = counts_[i];
        const std::uint64_t v = static_cast<std::uint64_t>(i);
        prefixCount_[i + 1] = prefixCount_[i] + c;
        prefixSum_[i + 1] = prefixSum_[i] + c * v;
        prefixSumSq_[i + 1] = prefixSumSq_[i] + c * v * v;
        if (c > 0) {
            ++distinct_;
        }
    }
    if (prefixCount_.back() == 0) {
        throw EmptyImageError("histogram has zero total count");
    }
}

std::uint64_t Histogram::countAt(int level) const {
    if (level < 0 || level >= levels()) {
        throw DomainError("gray level out of range");
    }
    return counts_[static_cast<std::size_t>(level)];
}

RangeStats Histogram::range(int lo, int hi) const {
    if (lo < 0 || hi > levels() || lo >= hi) {
        throw DomainError("invalid brightness range");
    }
    RangeStats s;
    s.n = prefixCount_[static_cast<std::size_t>(hi)] - prefixCount_[static_cast<std::size_t>(lo)];
    s.sum = prefixSum_[static_cast<std::size_t>(hi)] - prefixSum_[static_cast<std::size_t>(lo)];
    if (s.n > 0) {
        const std::uint64_t sumSq =
            prefixSumSq_[static_cast<std::size_t>(hi)] - prefixSumSq_[static_cast<std::size_t>(lo)];
        const double sum = static_cast<double>(s.sum);
        const double sse = static_cast<double>(sumSq) - sum * sum / static_cast<double>(s.n);
        s.sse = std::max(0.0, sse);
    }
    return s;
}

double Histogram::totalSse(std::span<const int> thresholds) const {
    int prev = 0;
    double e = 0.0;
    for (const int t : thresholds) {
        if (t <= prev || t >= levels()) {
            throw DomainError("thresholds must be strictly increasing inside (0, G)");
        }
        e += range(prev, t).sse;
        prev = t;
    }
    e += range(prev, levels()).sse;
    return e;
}

double Histogram::globalSse() const { return totalSse({}); }

double Histogram::sigmaFor(double sse) const {
    return std::sqrt(std::max(0.0, sse) / static_cast<double>(total()));
}

std::vector<int> Histogram::supportLevels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(distinct_));
    for (int g = 0; g < levels(); ++g) {
        if (counts_[static_cast<std::size_t>(g)] > 0) {
            out.push_back(g);
        }
    }
    return out;
}

Histogram Histogram::negated() const {
    std::vector<std::uint64_t> rev(counts_.rbegin(), counts_.rend());
    return Histogram(std::move(rev));
}

Histogram buildHistogram(std::span<const std::uint16_t> pixels, int levels) {
    if (pixels.empty()) {
        throw EmptyImageError();
    }
    if (levels <= 0) {
        throw DomainError("level count must be positive");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(levels), 0);
    for (const std::uint16_t p : pixels) {
        if (static_cast<int>(p) >= levels) {
            throw DomainError("pixel value exceeds gray range");
        }
        ++counts[p];
    }
    return Histogram(std::move(counts));
}

} // namespace pcseg
