#include "pipad/hex.hpp"

#include <cctype>
#include <stdexcept>

namespace pipad {

static const char kHexChars[] = "0123456789abcdef";

char nibble_to_char(std::uint8_t nibble) {
    if (nibble > 15) throw std::invalid_argument("nibble value out of range [0, 15]");
    return kHexChars[nibble];
}

int char_to_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles) {
    std::string out;
    out.reserve(nibbles.size());
    for (std::uint8_t n : nibbles) out += nibble_to_char(n);
    return out;
}

std::vector<std::uint8_t> hex_to_nibbles(std::string_view hex) {
    std::vector<std::uint8_t> out;
    out.reserve(hex.size());
    for (std::size_t i = 0; i < hex.size(); ++i) {
        int v = char_to_nibble(hex[i]);
        if (v < 0)
            throw std::invalid_argument("invalid hex character '" + std::string(1, hex[i]) +
                                        "' at offset " + std::to_string(i));
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

std::vector<std::uint8_t> parse_hex_stream(std::string_view text) {
    std::vector<std::uint8_t> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int v = char_to_nibble(c);
        if (v < 0)
            throw std::invalid_argument("non-hex character '" + std::string(1, c) +
                                        "' at offset " + std::to_string(i));
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

}  // namespace pipad
