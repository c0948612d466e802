#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "pipad/bignum.hpp"

namespace pipad {

struct ByteHistogram {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

struct HistogramSummary {
    double mean = 0.0;    // expected count per bin, total / 256
    double stddev = 0.0;  // population standard deviation over the bins
    double cv = 0.0;      // stddev / mean
};

ByteHistogram byte_histogram(std::span<const std::uint8_t> bytes);

// Throws std::domain_error on an empty histogram.
HistogramSummary summarize(const ByteHistogram& histogram);

// Chi-square statistic against the uniform distribution, 255 degrees of
// freedom. Requires an expected count of at least 5 per bin (total >= 1280).
double chi_square_uniform(const ByteHistogram& histogram);

// Exact binomial coefficient C(n, k).
BigUint keyspace_size(std::uint64_t n, std::uint64_t k);

// Pads store nibbles; bytes pair them big-endian: byte j is nibbles
// (2j, 2j+1). A trailing unpaired nibble is dropped.
std::vector<std::uint8_t> nibbles_to_bytes(std::span<const std::uint8_t> nibbles);

}  // namespace pipad
