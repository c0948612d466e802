#include "pipad/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace pipad {

ByteHistogram byte_histogram(std::span<const std::uint8_t> bytes) {
    ByteHistogram h;
    for (std::uint8_t b : bytes) ++h.counts[b];
    h.total = bytes.size();
    return h;
}

HistogramSummary summarize(const ByteHistogram& histogram) {
    if (histogram.total == 0) throw std::domain_error("empty histogram");
    HistogramSummary s;
    s.mean = static_cast<double>(histogram.total) / 256.0;
    double sq = 0.0;
    for (std::uint64_t c : histogram.counts) {
        double d = static_cast<double>(c) - s.mean;
        sq += d * d;
    }
    s.stddev = std::sqrt(sq / 256.0);
    s.cv = s.stddev / s.mean;
    return s;
}

double chi_square_uniform(const ByteHistogram& histogram) {
    if (histogram.total < 256 * 5)
        throw std::domain_error("chi-square needs at least 5 expected counts per bin (1280 bytes)");
    double expected = static_cast<double>(histogram.total) / 256.0;
    double stat = 0.0;
    for (std::uint64_t c : histogram.counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

BigUint keyspace_size(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::domain_error("k must not exceed n");
    if (n > 0xffffffffull) throw std::domain_error("n beyond 2^32 - 1 is not supported");
    if (k > n - k) k = n - k;
    BigUint result(1);
    // C(n, k) = prod_{i=1..k} (n - k + i) / i, exact at every step.
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= static_cast<std::uint32_t>(n - k + i);
        std::uint32_t rem = result.div_mod(static_cast<std::uint32_t>(i));
        (void)rem;  // always 0: each prefix is itself a binomial coefficient
    }
    return result;
}

std::vector<std::uint8_t> nibbles_to_bytes(std::span<const std::uint8_t> nibbles) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(nibbles.size() / 2);
    for (std::size_t i = 0; i + 1 < nibbles.size(); i += 2)
        bytes.push_back(static_cast<std::uint8_t>((nibbles[i] << 4) | nibbles[i + 1]));
    return bytes;
}

}  // namespace pipad
