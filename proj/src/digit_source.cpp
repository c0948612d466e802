#include "pipad/digit_source.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pipad/hex.hpp"

namespace pipad {

const char* to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::computed: return "computed";
        case SourceKind::pi_file: return "pi-file";
        case SourceKind::pool_file: return "pool-file";
    }
    return "unknown";
}

DigitSource open_source(const DigitSourceSpec& spec) {
    DigitSource source;
    source.kind_ = spec.kind;
    source.engine_ = spec.engine;
    source.engine_.validate();

    if (spec.kind == SourceKind::computed) {
        source.limit_ = kBbpValidityLimit;
        return source;
    }

    if (spec.path.empty())
        throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                    " source requires a file path");
    std::ifstream in(spec.path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open digit file: " + spec.path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("error reading digit file: " + spec.path.string());

    try {
        source.pool_ = parse_hex_stream(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(spec.path.string() + ": " + e.what());
    }
    source.limit_ = static_cast<std::int64_t>(source.pool_.size());
    return source;
}

DigitBlock DigitSource::read_block(std::int64_t position, std::int64_t length) const {
    if (position < 0) throw std::invalid_argument("position must be non-negative");
    if (length < 1) throw std::invalid_argument("length must be positive");
    if (position + length > limit_)
        throw std::out_of_range("read of [" + std::to_string(position) + ", " +
                                std::to_string(position + length) +
                                ") exceeds the source validity limit " + std::to_string(limit_));

    if (kind_ == SourceKind::computed) return pi_hex_at(position, length, engine_);

    DigitBlock block;
    block.start = position;
    block.digits.assign(pool_.begin() + static_cast<std::ptrdiff_t>(position),
                        pool_.begin() + static_cast<std::ptrdiff_t>(position + length));
    return block;
}

}  // namespace pipad
