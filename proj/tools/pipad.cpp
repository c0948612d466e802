// pipad: one-time pads from the hexadecimal digits of pi.
//
// Subcommands: genpad, digits, mkdigits, encrypt, decrypt, phrase, stats.
// Exit codes: 0 success, 2 usage, 3 validation, 4 bounds/capacity, 5 I/O,
// 1 anything else.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pipad/bbp.hpp"
#include "pipad/digit_source.hpp"
#include "pipad/hex.hpp"
#include "pipad/pad.hpp"
#include "pipad/stats.hpp"
#include "pipad/stego.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
    bool verbose = false;

    // genpad
    std::vector<std::string> passphrases;
    std::string source_kind = "computed";
    std::string source_path;
    int nibbles = 256;
    int rounds = 0;  // 0: one round, or one per passphrase argument
    std::string out_path;

    // digits / mkdigits
    std::int64_t at = 0;
    std::int64_t count = 0;
    std::string digits_out;

    // encrypt / decrypt
    std::string pad_path;
    std::string in_path;
    std::string xfer_out;

    // phrase
    std::string doc_path;
    std::size_t page = 0;
    std::size_t start_word = 0;
    std::size_t word_count = 1;
    bool with_hash = false;

    // stats
    std::string stats_in;
    std::string histogram_out;
};

void report_time(const Options& opt, Clock::time_point t0) {
    if (!opt.verbose) return;
    double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    std::fprintf(stderr, "Computation time = %.3f seconds\n", seconds);
}

std::vector<std::uint8_t> read_binary(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        const std::string& s = buf.str();
        return {s.begin(), s.end()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading input file: " + path);
    const std::string& s = buf.str();
    return {s.begin(), s.end()};
}

void write_binary(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("error writing to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("error writing output file: " + path);
}

std::string read_text(const std::string& path) {
    auto bytes = read_binary(path);
    return {bytes.begin(), bytes.end()};
}

pipad::DigitSource open_selected_source(const Options& opt) {
    pipad::DigitSourceSpec spec;
    if (opt.source_kind == "computed") {
        spec.kind = pipad::SourceKind::computed;
    } else if (opt.source_kind == "pi-file") {
        spec.kind = pipad::SourceKind::pi_file;
    } else if (opt.source_kind == "pool-file") {
        spec.kind = pipad::SourceKind::pool_file;
    } else {
        throw std::invalid_argument("unknown source kind: " + opt.source_kind);
    }
    if (spec.kind != pipad::SourceKind::computed) {
        if (opt.source_path.empty())
            throw std::invalid_argument("--source " + opt.source_kind + " requires --source-path");
        spec.path = opt.source_path;
    }
    return pipad::open_source(spec);
}

std::vector<std::string> collect_passphrases(const Options& opt) {
    if (!opt.passphrases.empty()) {
        if (opt.rounds != 0 && opt.rounds != static_cast<int>(opt.passphrases.size()))
            throw std::invalid_argument("--rounds disagrees with the number of passphrases given");
        return opt.passphrases;
    }
    int rounds = opt.rounds == 0 ? 1 : opt.rounds;
    if (rounds == 1) {
        if (const char* env = std::getenv("PIPAD_PASSPHRASE"); env && *env) return {env};
    }
    std::vector<std::string> result;
    for (int i = 1; i <= rounds; ++i) {
        std::fprintf(stderr, "Passphrase %d: ", i);
        std::string line;
        if (!std::getline(std::cin, line))
            throw std::invalid_argument("no passphrase given on standard input");
        result.push_back(line);
    }
    return result;
}

int run_genpad(const Options& opt) {
    auto t0 = Clock::now();
    std::vector<std::string> passphrases = collect_passphrases(opt);

    pipad::PadConfig config;
    config.pad_nibbles = opt.nibbles;
    config.rounds = static_cast<int>(passphrases.size());
    if (opt.verbose) std::fprintf(stderr, "Rounds = %d\n", config.rounds);

    pipad::DigitSource source = open_selected_source(opt);
    pipad::OneTimePad pad = pipad::generate_pad(passphrases, config, source);

    std::string path =
        opt.out_path.empty() ? pipad::default_pad_filename(std::time(nullptr)) : opt.out_path;
    pipad::write_pad_file(pad, path);
    std::cout << path << "\n";
    report_time(opt, t0);
    return 0;
}

int run_digits(const Options& opt) {
    auto t0 = Clock::now();
    std::cout << pipad::pi_hex_at(opt.at, opt.count).to_hex() << "\n";
    report_time(opt, t0);
    return 0;
}

int run_mkdigits(const Options& opt) {
    auto t0 = Clock::now();
    if (opt.count < 1) throw std::invalid_argument("--count must be positive");
    std::ofstream out(opt.digits_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.digits_out);

    // Chunked so long runs show progress and keep memory flat; the engine
    // streams consecutive windows efficiently within each chunk.
    const std::int64_t chunk = 65536;
    std::string line_buffer;
    std::int64_t written = 0;
    while (written < opt.count) {
        std::int64_t n = std::min(chunk, opt.count - written);
        std::string hex = pipad::pi_hex_at(written, n).to_hex();
        // wrap at 64 columns; readers ignore the line breaks
        for (std::int64_t i = 0; i < n; ++i) {
            line_buffer += hex[static_cast<std::size_t>(i)];
            if (line_buffer.size() == 64) {
                out << line_buffer << '\n';
                line_buffer.clear();
            }
        }
        written += n;
        if (opt.verbose)
            std::fprintf(stderr, "mkdigits: %lld / %lld digits\n",
                         static_cast<long long>(written), static_cast<long long>(opt.count));
    }
    if (!line_buffer.empty()) out << line_buffer << '\n';
    if (!out) throw std::runtime_error("error writing digit file: " + opt.digits_out);
    report_time(opt, t0);
    return 0;
}

int run_crypt(const Options& opt) {
    pipad::OneTimePad pad = pipad::read_pad_file(opt.pad_path);
    std::vector<std::uint8_t> message = read_binary(opt.in_path);
    std::vector<std::uint8_t> transformed = pipad::apply_pad(message, pad);
    write_binary(opt.xfer_out, transformed);
    return 0;
}

int run_phrase(const Options& opt) {
    pipad::DocumentText doc = pipad::DocumentText::paged_by_form_feed(read_text(opt.doc_path));
    pipad::PhraseSelector selector;
    if (opt.page != 0) selector.page = opt.page;
    selector.start_word = opt.start_word;
    selector.word_count = opt.word_count;
    std::string phrase = pipad::extract_phrase(doc, selector);
    std::cout << phrase << "\n";
    if (opt.with_hash) std::cout << pipad::hash_passphrase(phrase) << "\n";
    return 0;
}

int run_stats(const Options& opt) {
    std::vector<std::uint8_t> nibbles = pipad::parse_hex_stream(read_text(opt.stats_in));
    std::vector<std::uint8_t> bytes = pipad::nibbles_to_bytes(nibbles);
    pipad::ByteHistogram histogram = pipad::byte_histogram(bytes);
    pipad::HistogramSummary summary = pipad::summarize(histogram);

    std::optional<double> chi;
    if (histogram.total >= 256 * 5)
        chi = pipad::chi_square_uniform(histogram);
    else
        std::fprintf(stderr, "pipad: chi-square skipped, needs at least 1280 bytes\n");

    std::printf("bytes: %llu\n", static_cast<unsigned long long>(histogram.total));
    std::printf("histogram mean: %.6g\n", summary.mean);
    std::printf("histogram stddev: %.6g\n", summary.stddev);
    std::printf("coefficient of variation: %.4g%%\n", summary.cv * 100.0);
    if (chi) std::printf("chi-square (255 df): %.6g\n", *chi);

    std::printf("bytes=%llu\n", static_cast<unsigned long long>(histogram.total));
    std::printf("mean=%.10g\n", summary.mean);
    std::printf("stddev=%.10g\n", summary.stddev);
    std::printf("cv=%.10g\n", summary.cv);
    if (chi) std::printf("chi_square=%.10g\n", *chi);

    if (!opt.histogram_out.empty()) {
        std::ofstream out(opt.histogram_out);
        if (!out) throw std::runtime_error("cannot open histogram file: " + opt.histogram_out);
        for (int v = 0; v < 256; ++v)
            out << v << ' ' << histogram.counts[static_cast<std::size_t>(v)] << '\n';
        if (!out) throw std::runtime_error("error writing histogram file: " + opt.histogram_out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-time pads from the hexadecimal digits of pi"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("-v,--verbose", opt.verbose, "Report timing and progress on stderr");

    CLI::App* genpad = app.add_subcommand("genpad", "Generate a one-time pad from passphrases");
    genpad->add_option("passphrase", opt.passphrases,
                       "One passphrase per round; prompted for (or read from "
                       "PIPAD_PASSPHRASE) when omitted");
    genpad->add_option("--source", opt.source_kind, "Digit source kind")
        ->check(CLI::IsMember({"computed", "pi-file", "pool-file"}))
        ->default_str("computed");
    genpad->add_option("--source-path", opt.source_path, "Digit file for the file source kinds");
    genpad->add_option("--nibbles", opt.nibbles, "Pad length in hex digits")->default_val(256);
    genpad->add_option("--rounds", opt.rounds, "Rounds to run when prompting for passphrases");
    genpad->add_option("--out", opt.out_path, "Pad file path (default OTP_<timestamp>.txt)");

    CLI::App* digits = app.add_subcommand("digits", "Print hex digits of pi");
    digits->add_option("--at", opt.at, "0-based fractional digit position")->required();
    digits->add_option("--count", opt.count, "Number of digits")->required();

    CLI::App* mkdigits = app.add_subcommand("mkdigits", "Write a pi digit file");
    mkdigits->add_option("--count", opt.count, "Number of digits from position 0")->required();
    mkdigits->add_option("--out", opt.digits_out, "Digit file path")->required();

    CLI::App* encrypt = app.add_subcommand("encrypt", "XOR a message with a pad");
    CLI::App* decrypt = app.add_subcommand("decrypt", "Inverse of encrypt (same XOR)");
    for (CLI::App* cmd : {encrypt, decrypt}) {
        cmd->add_option("--pad", opt.pad_path, "Pad file")->required();
        cmd->add_option("--in", opt.in_path, "Input file, - for stdin")->required();
        cmd->add_option("--out", opt.xfer_out, "Output file, - for stdout")->required();
    }

    CLI::App* phrase = app.add_subcommand("phrase", "Extract a passphrase from a document");
    phrase->add_option("--doc", opt.doc_path, "Document text file, - for stdin")->required();
    phrase->add_option("--page", opt.page, "1-based page (pages split on form feeds)");
    phrase->add_option("--start", opt.start_word, "1-based first word")->required();
    phrase->add_option("--words", opt.word_count, "Number of words")->default_val(1);
    phrase->add_flag("--hash", opt.with_hash, "Also print the phrase digest");

    CLI::App* stats = app.add_subcommand("stats", "Byte-value statistics of a hex stream");
    stats->add_option("--in", opt.stats_in, "Pad file or raw hex stream, - for stdin")->required();
    stats->add_option("--dump-histogram", opt.histogram_out,
                      "Write 256 lines of \"value count\"");

    try {
        app.parse(argc, argv);
        if (genpad->parsed()) return run_genpad(opt);
        if (digits->parsed()) return run_digits(opt);
        if (mkdigits->parsed()) return run_mkdigits(opt);
        if (encrypt->parsed() || decrypt->parsed()) return run_crypt(opt);
        if (phrase->parsed()) return run_phrase(opt);
        if (stats->parsed()) return run_stats(opt);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 4;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 4;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 3;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pipad: %s\n", e.what());
        return 1;
    }
}
