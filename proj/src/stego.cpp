#include "pipad/stego.hpp"

#include <cctype>
#include <stdexcept>

namespace pipad {

DocumentText DocumentText::single_page(std::string text) {
    DocumentText doc;
    doc.text = std::move(text);
    return doc;
}

DocumentText DocumentText::paged_by_form_feed(std::string text) {
    DocumentText doc;
    doc.text = std::move(text);
    for (std::size_t i = 0; i < doc.text.size(); ++i)
        if (doc.text[i] == '\f') doc.page_breaks.push_back(i + 1);
    return doc;
}

std::string_view DocumentText::page(std::size_t page_number) const {
    if (page_number < 1 || page_number > page_count())
        throw std::out_of_range("page " + std::to_string(page_number) +
                                " out of range; document has " + std::to_string(page_count()) +
                                " page(s)");
    std::size_t begin = page_number == 1 ? 0 : page_breaks[page_number - 2];
    std::size_t end = page_number == page_count() ? text.size() : page_breaks[page_number - 1];
    return std::string_view(text).substr(begin, end - begin);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > begin) words.emplace_back(text.substr(begin, i - begin));
    }
    return words;
}

std::string extract_phrase(const DocumentText& document, const PhraseSelector& selector) {
    if (selector.start_word < 1) throw std::invalid_argument("start_word is 1-based");
    if (selector.word_count < 1) throw std::invalid_argument("word_count must be at least 1");

    std::string_view scope =
        selector.page ? document.page(*selector.page) : std::string_view(document.text);
    std::vector<std::string> words = tokenize(scope);

    if (selector.start_word + selector.word_count - 1 > words.size())
        throw std::out_of_range("phrase needs words " + std::to_string(selector.start_word) +
                                ".." +
                                std::to_string(selector.start_word + selector.word_count - 1) +
                                " but only " + std::to_string(words.size()) + " are available");

    std::string phrase;
    for (std::size_t i = 0; i < selector.word_count; ++i) {
        if (i > 0) phrase += ' ';
        phrase += words[selector.start_word - 1 + i];
    }
    return phrase;
}

}  // namespace pipad
