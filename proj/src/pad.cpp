#include "pipad/pad.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pipad/hex.hpp"

namespace pipad {

void PadConfig::validate() const {
    if (pad_nibbles < 1) throw std::invalid_argument("pad_nibbles must be at least 1");
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
}

std::string OneTimePad::to_hex() const { return nibbles_to_hex(nibbles); }

std::string hash_passphrase(std::string_view passphrase) {
    if (passphrase.empty()) throw std::invalid_argument("passphrase must not be empty");
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (EVP_Digest(passphrase.data(), passphrase.size(), md, &md_len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out += nibble_to_char(static_cast<std::uint8_t>(md[i] >> 4));
        out += nibble_to_char(static_cast<std::uint8_t>(md[i] & 0x0f));
    }
    return out;
}

AddressSet derive_addresses(std::string_view digest_hex) {
    if (digest_hex.size() != 64)
        throw std::invalid_argument("digest must be exactly 64 hex characters");
    AddressSet addresses{};
    for (int i = 0; i < kAddressCount; ++i) {
        std::uint32_t value = 0;
        for (int j = 0; j < kAddressNibbles; ++j) {
            int v = char_to_nibble(digest_hex[static_cast<std::size_t>(i * kAddressNibbles + j)]);
            if (v < 0) throw std::invalid_argument("digest contains a non-hex character");
            value = value * 16 + static_cast<std::uint32_t>(v);
        }
        addresses[static_cast<std::size_t>(i)] = value;
    }
    return addresses;
}

AddressSet chain_addresses(const AddressSet& addresses,
                           std::span<const std::uint8_t> previous_pad) {
    if (previous_pad.size() < static_cast<std::size_t>(kAddressCount * kAddressNibbles))
        throw std::invalid_argument("previous pad must hold at least 50 nibbles");
    AddressSet chained{};
    for (int i = 0; i < kAddressCount; ++i) {
        std::uint32_t packed = 0;
        for (int j = 0; j < kAddressNibbles; ++j)
            packed = packed * 16 + previous_pad[static_cast<std::size_t>(i * kAddressNibbles + j)];
        chained[static_cast<std::size_t>(i)] = addresses[static_cast<std::size_t>(i)] ^ packed;
    }
    return chained;
}

DigitBlock xor_combine(std::span<const DigitBlock> blocks) {
    if (blocks.empty()) throw std::invalid_argument("nothing to combine");
    const std::size_t n = blocks.front().digits.size();
    for (const DigitBlock& b : blocks)
        if (b.digits.size() != n)
            throw std::invalid_argument("blocks must all have the same length");
    DigitBlock out;
    out.start = blocks.front().start;
    out.digits.assign(n, 0);
    for (const DigitBlock& b : blocks)
        for (std::size_t i = 0; i < n; ++i) out.digits[i] ^= b.digits[i];
    return out;
}

OneTimePad generate_pad(std::span<const std::string> passphrases, const PadConfig& config,
                        const DigitSource& source) {
    config.validate();
    if (passphrases.size() != static_cast<std::size_t>(config.rounds))
        throw std::invalid_argument("need exactly one passphrase per round");
    const std::int64_t need = static_cast<std::int64_t>(kAddressSpace) + config.pad_nibbles;
    if (source.validity_limit() < need)
        throw std::invalid_argument("source too small: addresses reach up to digit " +
                                    std::to_string(need) + " but the source holds " +
                                    std::to_string(source.validity_limit()));

    DigitBlock pad;
    pad.digits.assign(static_cast<std::size_t>(config.pad_nibbles), 0);

    for (int round = 0; round < config.rounds; ++round) {
        AddressSet addresses =
            derive_addresses(hash_passphrase(passphrases[static_cast<std::size_t>(round)]));
        // In the first round the pad is all zero and chaining would be a
        // no-op; skipping it keeps short pads valid for single rounds.
        if (round > 0) addresses = chain_addresses(addresses, pad.digits);

        std::vector<DigitBlock> blocks;
        blocks.reserve(kAddressCount + 1);
        blocks.push_back(pad);
        for (std::uint32_t address : addresses)
            blocks.push_back(source.read_block(address, config.pad_nibbles));
        pad = xor_combine(blocks);
    }

    OneTimePad out;
    out.nibbles = std::move(pad.digits);
    out.provenance = PadProvenance{source.kind(), config.rounds};
    return out;
}

std::vector<std::uint8_t> apply_pad(std::span<const std::uint8_t> message, const OneTimePad& pad) {
    const std::size_t capacity = pad.nibbles.size() / 2;
    if (message.size() > capacity)
        throw std::length_error("message of " + std::to_string(message.size()) +
                                " bytes exceeds the pad capacity of " + std::to_string(capacity) +
                                " bytes");
    std::vector<std::uint8_t> out(message.size());
    for (std::size_t i = 0; i < message.size(); ++i) {
        std::uint8_t key =
            static_cast<std::uint8_t>((pad.nibbles[2 * i] << 4) | pad.nibbles[2 * i + 1]);
        out[i] = message[i] ^ key;
    }
    return out;
}

std::string default_pad_filename(std::time_t when) {
    char buf[64];
    std::tm tm_buf{};
    localtime_r(&when, &tm_buf);
    std::strftime(buf, sizeof(buf), "OTP_%Y%m%d-%H%M%S.txt", &tm_buf);
    return buf;
}

void write_pad_file(const OneTimePad& pad, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open pad file for writing: " + path.string());
    out << pad.to_hex() << '\n';
    if (!out) throw std::runtime_error("error writing pad file: " + path.string());
}

OneTimePad read_pad_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open pad file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading pad file: " + path.string());
    OneTimePad pad;
    try {
        pad.nibbles = parse_hex_stream(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
    return pad;
}

}  // namespace pipad
