#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pipad {

// Positions index the fractional hex digits of pi, 0-based: position 0 is
// the '2' of 3.243f6a88...
//
// The engine works in IEEE doubles. Every modular reduction it performs is
// exact while the modulus stays at or below 2^24, which is the advertised
// validity bound for both mod_pow16 and the digit positions served.
inline constexpr std::int64_t kBbpValidityLimit = std::int64_t{1} << 24;

struct BbpEngineConfig {
    int digits_per_evaluation = 8;  // digits taken (and trusted) per window
    int hex_window = 16;            // digits converted per window
    double series_epsilon = 1e-17;  // tail term cutoff

    void validate() const;  // throws std::invalid_argument
};

// A run of consecutive fractional hex digits, stored as nibble values 0-15.
struct DigitBlock {
    std::int64_t start = 0;
    std::vector<std::uint8_t> digits;

    std::string to_hex() const;
    bool operator==(const DigitBlock&) const = default;
};

// 16^exponent mod modulus via left-to-right binary exponentiation in
// doubles. Exact (integer-valued) for moduli up to 2^24; modulus 1 gives 0.
// Throws std::domain_error when the modulus leaves the validity range.
double mod_pow16(std::int64_t exponent, double modulus);

// Fractional part of sum_k 16^(position-k)/(8k+m), m in {1, 4, 5, 6}.
// Terms with k < position go through mod_pow16; the tail is summed
// directly until a term drops below epsilon (at most 100 extra terms).
double series_sum(int m, std::int64_t position, double epsilon = 1e-17);

// First `count` hex digits of frac(|x|), lowercase.
std::string fraction_to_hex(double x, int count);

// `count` consecutive fractional hex digits of pi starting at `position`.
// Advances in steps of config.digits_per_evaluation, taking exactly that
// many digits from each 4-series evaluation. Deterministic; the result is
// independent of the step size.
DigitBlock pi_hex_at(std::int64_t position, std::int64_t count,
                     const BbpEngineConfig& config = {});

}  // namespace pipad
