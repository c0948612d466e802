#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pipad {

// Plain text with optional page structure. page_breaks are offsets into
// text where pages 2, 3, ... begin; page 1 starts at offset 0.
struct DocumentText {
    std::string text;
    std::vector<std::size_t> page_breaks;

    static DocumentText single_page(std::string text);
    // Splits pages on form-feed characters ('\f').
    static DocumentText paged_by_form_feed(std::string text);

    std::size_t page_count() const { return page_breaks.size() + 1; }
    std::string_view page(std::size_t page_number) const;  // 1-based
};

// Word coordinates, 1-based: "the 31st word on page 41".
struct PhraseSelector {
    std::optional<std::size_t> page;
    std::size_t start_word = 1;
    std::size_t word_count = 1;
};

// Splits on runs of whitespace; punctuation stays attached to its word.
// This convention decides what both communicating parties hash, so any
// change to it changes every derived digest.
std::vector<std::string> tokenize(std::string_view text);

// The word_count words starting at start_word, joined by single spaces.
// With a page set, word positions are relative to that page.
std::string extract_phrase(const DocumentText& document, const PhraseSelector& selector);

}  // namespace pipad
