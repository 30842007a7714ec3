#pragma once

#include <cstdint>

#include "pcseg/errors.hpp"

namespace pcseg {

/// Pixel count and intensity sum of one pixel set; the unit of all
/// incremental squared-error arithmetic. The mean is derived.
struct SetStats {
    std::uint64_t n = 0;
    std::uint64_t sum = 0;

    double mean() const { return static_cast<double>(sum) / static_cast<double>(n); }
};

/// Exact increase in total squared error when two sets are fully merged:
/// (I1 - I2)^2 / (1/n1 + 1/n2). Always nonnegative.
double deltaEMerge(const SetStats& a, const SetStats& b);

/// Population coefficient sqrt(n2*(n1-k) / (n1*(n2+k))) weighing the donor
/// and recipient mean distances in the reclassification test. Strictly
/// decreasing in k and always below 1.
double correctionAlpha(std::uint64_t n1, std::uint64_t n2, std::uint64_t k);

struct MoveDelta {
    enum class Kind { Merge, Correct };
    Kind kind = Kind::Correct;
    std::uint64_t k = 0;    ///< moved pixel count
    double meanMoved = 0.0; ///< mean brightness of the moved subset
    double deltaE = 0.0;    ///< signed squared-error increment
    double alpha = 0.0;     ///< population coefficient (Correct only)
};

/// Exact change in total squared error when a subset of k pixels with
/// intensity sum `movedSum` leaves `donor` and joins `recipient`:
/// (I-I2)^2 / (1/k + 1/n2) - (I-I1)^2 / (1/k - 1/n1).
/// The subset moves intact, so its internal scatter cancels and the value
/// is exact for any subset, not only for k identical pixels.
/// Throws DomainError unless 1 <= k < donor.n (k == donor.n is a merge).
MoveDelta deltaECorrect(const SetStats& donor, const SetStats& recipient, std::uint64_t k,
                        std::uint64_t movedSum);

/// Sign of deltaECorrect: -1, 0 or +1. Uses cross-multiplied 128-bit integer
/// arithmetic whenever the operand magnitudes permit (always the case for
/// 8-bit images up to 512x512), otherwise an extended-precision comparison
/// with a 1e-12 relative zero guard.
int deltaECorrectSign(const SetStats& donor, const SetStats& recipient, std::uint64_t k,
                      std::uint64_t movedSum);

} // namespace pcseg
