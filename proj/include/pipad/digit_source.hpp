#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pipad/bbp.hpp"

namespace pipad {

enum class SourceKind { computed, pi_file, pool_file };

const char* to_string(SourceKind kind);

struct DigitSourceSpec {
    SourceKind kind = SourceKind::computed;
    std::filesystem::path path;  // required for the file kinds
    BbpEngineConfig engine;      // used by the computed kind
};

// Smallest pool that serves every 5-hex-digit block address with the
// default 256-nibble pad: 16^5 + 256 digits.
inline constexpr std::int64_t kDefaultPoolDigits = 1048832;

// An immutable, addressable pool of hex digits: pi computed on demand, a
// precomputed pi digit file, or an arbitrary shared random-pool file.
// Digit files are ASCII hex, upper or lower case, with whitespace ignored;
// they hold fractional digits only (no leading "3.").
//
// A source never changes after open_source returns; concurrent read_block
// calls are safe.
class DigitSource {
  public:
    SourceKind kind() const { return kind_; }
    std::int64_t validity_limit() const { return limit_; }

    // `length` nibbles starting at `position`. Throws std::out_of_range
    // when [position, position + length) leaves the validity limit.
    DigitBlock read_block(std::int64_t position, std::int64_t length) const;

  private:
    friend DigitSource open_source(const DigitSourceSpec& spec);
    DigitSource() = default;

    SourceKind kind_ = SourceKind::computed;
    std::int64_t limit_ = 0;
    std::vector<std::uint8_t> pool_;  // parsed digits for the file kinds
    BbpEngineConfig engine_;
};

DigitSource open_source(const DigitSourceSpec& spec);

}  // namespace pipad
