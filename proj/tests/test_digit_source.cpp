#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "pipad/digit_source.hpp"

using namespace pipad;
namespace fs = std::filesystem;

static const std::string kPiHex64 =
    "243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89";

static fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "pipad_digit_source_tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

static fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

TEST_CASE("computed source exposes the engine validity limit") {
    DigitSource source = open_source({});
    CHECK(source.kind() == SourceKind::computed);
    CHECK(source.validity_limit() == std::int64_t{1} << 24);
    CHECK(source.read_block(0, 16).to_hex() == "243f6a8885a308d3");
}

TEST_CASE("pi file source parses plain hex") {
    DigitSourceSpec spec;
    spec.kind = SourceKind::pi_file;
    spec.path = write_file("pi64.txt", kPiHex64);
    DigitSource source = open_source(spec);
    CHECK(source.validity_limit() == 64);
    CHECK(source.read_block(0, 16).to_hex() == "243f6a8885a308d3");
    CHECK(source.read_block(60, 4).to_hex() == kPiHex64.substr(60, 4));
}

TEST_CASE("whitespace and case do not change reads") {
    std::string mangled;
    for (std::size_t i = 0; i < kPiHex64.size(); ++i) {
        if (i % 7 == 3) mangled += '\n';
        if (i % 11 == 5) mangled += "  ";
        mangled += i % 2 ? static_cast<char>(std::toupper(kPiHex64[i])) : kPiHex64[i];
    }
    mangled += "\r\n\t ";
    DigitSourceSpec spec;
    spec.kind = SourceKind::pool_file;
    spec.path = write_file("mangled.txt", mangled);
    DigitSource source = open_source(spec);
    CHECK(source.validity_limit() == 64);
    CHECK(source.read_block(0, 64).to_hex() == kPiHex64);
}

TEST_CASE("file and computed sources agree on pi digits") {
    DigitSourceSpec spec;
    spec.kind = SourceKind::pi_file;
    spec.path = write_file("pi64b.txt", kPiHex64);
    DigitSource file_source = open_source(spec);
    DigitSource computed = open_source({});
    for (std::int64_t pos : {0, 1, 13, 48}) {
        std::int64_t len = 64 - pos;
        CHECK(file_source.read_block(pos, len) == computed.read_block(pos, len));
    }
}

TEST_CASE("missing and malformed files are rejected") {
    DigitSourceSpec spec;
    spec.kind = SourceKind::pi_file;
    spec.path = scratch_dir() / "does_not_exist.txt";
    CHECK_THROWS_AS(open_source(spec), std::runtime_error);

    spec.path = write_file("bad.txt", "243f6a88z5a308d3");
    try {
        open_source(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        CHECK(what.find("offset 8") != std::string::npos);
        CHECK(what.find('z') != std::string::npos);
    }

    spec.path.clear();
    CHECK_THROWS_AS(open_source(spec), std::invalid_argument);
}

TEST_CASE("read_block bounds checking") {
    DigitSourceSpec spec;
    spec.kind = SourceKind::pool_file;
    spec.path = write_file("pool64.txt", kPiHex64);
    DigitSource source = open_source(spec);

    CHECK_NOTHROW(source.read_block(63, 1));
    CHECK_THROWS_AS(source.read_block(63, 2), std::out_of_range);
    CHECK_THROWS_AS(source.read_block(64, 1), std::out_of_range);
    CHECK_THROWS_AS(source.read_block(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(source.read_block(0, 0), std::invalid_argument);

    try {
        source.read_block(60, 10);
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("64") != std::string::npos);  // names the limit
    }
}

TEST_CASE("reads are repeatable") {
    DigitSourceSpec spec;
    spec.kind = SourceKind::pool_file;
    spec.path = write_file("pool64r.txt", kPiHex64);
    DigitSource source = open_source(spec);
    CHECK(source.read_block(10, 20) == source.read_block(10, 20));
}
