#include "pcseg/delta.hpp"

#include <algorithm>
#include <cmath>

namespace pcseg {

namespace {

void requireLive(const SetStats& s) {
    if (s.n == 0) {
        throw DomainError("set is empty");
    }
}

void requireProperSubset(const SetStats& donor, std::uint64_t k) {
    if (k == 0) {
        throw DomainError("moved subset is empty");
    }
    if (k >= donor.n) {
        throw DomainError("subset as large as its donor must be merged, not reclassified");
    }
}

} // namespace

double deltaEMerge(const SetStats& a, const SetStats& b) {
    requireLive(a);
    requireLive(b);
    const double d = a.mean() - b.mean();
    const double weight =
        static_cast<double>(a.n) * static_cast<double>(b.n) / static_cast<double>(a.n + b.n);
    return d * d * weight;
}

double correctionAlpha(std::uint64_t n1, std::uint64_t n2, std::uint64_t k) {
    if (n1 == 0 || n2 == 0) {
        throw DomainError("set is empty");
    }
    requireProperSubset(SetStats{n1, 0}, k);
    return std::sqrt(static_cast<double>(n2) * static_cast<double>(n1 - k) /
                     (static_cast<double>(n1) * static_cast<double>(n2 + k)));
}

MoveDelta deltaECorrect(const SetStats& donor, const SetStats& recipient, std::uint64_t k,
                        std::uint64_t movedSum) {
    requireLive(donor);
    requireLive(recipient);
    requireProperSubset(donor, k);

    const double i = static_cast<double>(movedSum) / static_cast<double>(k);
    const double toRecipient = i - recipient.mean();
    const double fromDonor = i - donor.mean();
    const double gain = toRecipient * toRecipient * static_cast<double>(k) *
                        static_cast<double>(recipient.n) / static_cast<double>(recipient.n + k);
    const double loss = fromDonor * fromDonor * static_cast<double>(k) *
                        static_cast<double>(donor.n) / static_cast<double>(donor.n - k);

    MoveDelta md;
    md.kind = MoveDelta::Kind::Correct;
    md.k = k;
    md.meanMoved = i;
    md.deltaE = gain - loss;
    md.alpha = correctionAlpha(donor.n, recipient.n, k);
    return md;
}

int deltaECorrectSign(const SetStats& donor, const SetStats& recipient, std::uint64_t k,
                      std::uint64_t movedSum) {
    requireLive(donor);
    requireLive(recipient);
    requireProperSubset(donor, k);

    // With s = movedSum, the sign of deltaECorrect equals the sign of
    //   (s*n2 - sum2*k)^2 * n1*(n1-k)  -  (s*n1 - sum1*k)^2 * n2*(n2+k).
    const long double a = static_cast<long double>(movedSum) * recipient.n -
                          static_cast<long double>(recipient.sum) * k;
    const long double b = static_cast<long double>(movedSum) * donor.n -
                          static_cast<long double>(donor.sum) * k;
    const long double t1 =
        a * a * static_cast<long double>(donor.n) * static_cast<long double>(donor.n - k);
    const long double t2 =
        b * b * static_cast<long double>(recipient.n) * static_cast<long double>(recipient.n + k);

    constexpr long double exactLimit = 8e37L; // headroom below 2^127
    constexpr std::uint64_t operandLimit = 1ULL << 47; // keeps raw products inside 128 bits
    const std::uint64_t maxOperand =
        std::max({donor.n, donor.sum, recipient.n, recipient.sum, k, movedSum});
    if (t1 < exactLimit && t2 < exactLimit && maxOperand < operandLimit) {
        const __int128 ea = static_cast<__int128>(movedSum) * recipient.n -
                            static_cast<__int128>(recipient.sum) * k;
        const __int128 eb =
            static_cast<__int128>(movedSum) * donor.n - static_cast<__int128>(donor.sum) * k;
        const __int128 e1 = ea * ea * static_cast<__int128>(donor.n) *
                            static_cast<__int128>(donor.n - k);
        const __int128 e2 = eb * eb * static_cast<__int128>(recipient.n) *
                            static_cast<__int128>(recipient.n + k);
        if (e1 == e2) {
            return 0;
        }
        return e1 < e2 ? -1 : 1;
    }
    const long double diff = t1 - t2;
    const long double guard = 1e-12L * std::max(t1, t2);
    if (std::abs(diff) <= guard) {
        return 0;
    }
    return diff < 0 ? -1 : 1;
}

} // namespace pcseg
