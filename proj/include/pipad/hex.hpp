#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pipad {

char nibble_to_char(std::uint8_t nibble);
int char_to_nibble(char c);  // -1 if not a hex digit

std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles);

// Strict conversion: every character must be a hex digit.
std::vector<std::uint8_t> hex_to_nibbles(std::string_view hex);

// Tolerant parse of an ASCII hex stream: whitespace is ignored anywhere,
// upper and lower case both accepted. Any other character raises
// std::invalid_argument naming its byte offset.
std::vector<std::uint8_t> parse_hex_stream(std::string_view text);

}  // namespace pipad
