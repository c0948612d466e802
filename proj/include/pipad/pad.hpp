#pragma once

#include <array>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pipad/digit_source.hpp"

namespace pipad {

inline constexpr int kAddressCount = 10;
inline constexpr int kAddressNibbles = 5;
inline constexpr std::uint32_t kAddressSpace = 1u << 20;  // 16^5

// The ten 20-bit block addresses carved from a passphrase digest.
using AddressSet = std::array<std::uint32_t, kAddressCount>;

struct PadConfig {
    int pad_nibbles = 256;
    int rounds = 1;

    void validate() const;
};

struct PadProvenance {
    SourceKind source = SourceKind::computed;
    int rounds = 1;
};

// Pad nibbles plus where they came from. Passphrases are never stored.
struct OneTimePad {
    std::vector<std::uint8_t> nibbles;
    std::optional<PadProvenance> provenance;

    std::string to_hex() const;
};

// SHA-256 over exactly the passphrase bytes (no trailing newline, no
// transformation), rendered as 64 lowercase hex characters.
std::string hash_passphrase(std::string_view passphrase);

// Splits the first 50 digest characters into ten consecutive 5-character
// chunks; chunk i parses big-endian as address a_i. The last 14 characters
// of the digest are unused.
AddressSet derive_addresses(std::string_view digest_hex);

// XORs each address with the 20-bit value packed big-endian from previous
// pad nibbles [5i, 5i+4]. An all-zero pad leaves the addresses unchanged;
// applying the same pad twice restores them.
AddressSet chain_addresses(const AddressSet& addresses,
                           std::span<const std::uint8_t> previous_pad);

// Nibble-wise XOR of equal-length blocks; order-independent.
DigitBlock xor_combine(std::span<const DigitBlock> blocks);

// The full pipeline: per round, hash the passphrase, carve ten addresses,
// chain them with the previous round's pad, fetch ten digit blocks, and
// XOR everything together. Deterministic for fixed inputs.
OneTimePad generate_pad(std::span<const std::string> passphrases, const PadConfig& config,
                        const DigitSource& source);

// XORs message bytes with pad bytes (nibble pairs, big-endian). Self-inverse.
// The message must fit in pad_nibbles / 2 bytes.
std::vector<std::uint8_t> apply_pad(std::span<const std::uint8_t> message, const OneTimePad& pad);

// Pad files hold the nibbles as lowercase hex, no separators, with a
// trailing newline.
std::string default_pad_filename(std::time_t when);
void write_pad_file(const OneTimePad& pad, const std::filesystem::path& path);
OneTimePad read_pad_file(const std::filesystem::path& path);

}  // namespace pipad
