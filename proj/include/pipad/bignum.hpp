#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pipad {

// Unsigned big integer, just wide enough for exact combinatorics: multiply
// and divide by machine words, addition, and decimal rendering.
class BigUint {
  public:
    BigUint() = default;  // zero
    explicit BigUint(std::uint64_t value);

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator*=(std::uint32_t factor);
    BigUint& operator+=(const BigUint& other);

    // In-place division; returns the remainder. Throws on divisor 0.
    std::uint32_t div_mod(std::uint32_t divisor);

    bool operator==(const BigUint&) const = default;

    std::string to_string() const;  // decimal

    // Rounded scientific rendering, e.g. "2.76e+53" at 3 significant digits.
    std::string to_scientific(int significant_digits = 3) const;

  private:
    // Base 2^32 limbs, least significant first, no trailing zero limbs.
    std::vector<std::uint32_t> limbs_;
    void trim();
};

}  // namespace pipad
