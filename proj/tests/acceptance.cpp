// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any fail. Independent oracles come from MPFR (arbitrary
// precision pi), GMP (Machin-formula cross-check, exact binomials), and a
// straight-line reference pad pipeline written against the raw digit file.
//
// Usage: acceptance <pipad-cli> [scratch-dir]

#include <gmp.h>
#include <mpfr.h>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "pipad/bbp.hpp"
#include "pipad/digit_source.hpp"
#include "pipad/hex.hpp"
#include "pipad/pad.hpp"
#include "pipad/stats.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// First 64 fractional hex digits of pi, frozen from an independent
// computation made before the engine was written.
static const std::string kPiHex64 =
    "243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89";

static const std::int64_t kPoolDigits = 1048832;  // 16^5 + 256

static int g_failures = 0;

static void report(const std::string& label, bool pass, double seconds,
                   const std::string& note = "") {
    std::printf("%s  %-66s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", label.c_str(), seconds,
                note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

static CliResult run_cli(const std::string& cli, const std::string& args) {
    std::string command = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    CliResult result;
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Oracle 1: fractional hex digits of pi via MPFR.
static std::string mpfr_pi_hex(std::int64_t ndigits) {
    mpfr_t pi;
    mpfr_init2(pi, 4 * (ndigits + 16));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_exp_t exp = 0;
    char* s =
        mpfr_get_str(nullptr, &exp, 16, static_cast<std::size_t>(ndigits) + 8, pi, MPFR_RNDZ);
    std::string digits(s + 1, static_cast<std::size_t>(ndigits));  // skip the leading 3
    mpfr_free_str(s);
    mpfr_clear(pi);
    return digits;
}

// Oracle 2: the same digits from Machin's formula in exact integer
// arithmetic, pi = 16 atan(1/5) - 4 atan(1/239).
static std::string machin_pi_hex(int ndigits) {
    const int guard = 8;
    mpz_t scale, a5, a239, pi, term, tmp;
    mpz_inits(scale, a5, a239, pi, term, tmp, nullptr);
    mpz_ui_pow_ui(scale, 16, static_cast<unsigned long>(ndigits + guard));

    auto atan_inv = [&](mpz_t rop, unsigned long x) {
        mpz_set_ui(rop, 0);
        mpz_tdiv_q_ui(term, scale, x);
        unsigned long x2 = x * x;
        for (unsigned long k = 0; mpz_sgn(term) != 0; ++k) {
            mpz_tdiv_q_ui(tmp, term, 2 * k + 1);
            if (k % 2 == 0)
                mpz_add(rop, rop, tmp);
            else
                mpz_sub(rop, rop, tmp);
            mpz_tdiv_q_ui(term, term, x2);
        }
    };
    atan_inv(a5, 5);
    atan_inv(a239, 239);
    mpz_mul_ui(a5, a5, 16);
    mpz_mul_ui(a239, a239, 4);
    mpz_sub(pi, a5, a239);
    mpz_tdiv_q_2exp(pi, pi, 4 * guard);

    std::vector<char> buf(mpz_sizeinbase(pi, 16) + 2);
    mpz_get_str(buf.data(), 16, pi);
    std::string digits(buf.data());
    mpz_clears(scale, a5, a239, pi, term, tmp, nullptr);
    return digits.substr(1, static_cast<std::size_t>(ndigits));  // drop the integer part 3
}

static void write_digit_file(const fs::path& path, const std::string& digits) {
    std::ofstream out(path, std::ios::binary);
    for (std::size_t i = 0; i < digits.size(); i += 64) out << digits.substr(i, 64) << '\n';
}

static std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Straight-line reference pipeline: hash with a direct EVP call, split the
// digest with strtol, index the raw file text, XOR nibble by nibble.
static std::string reference_pad_hex(const std::string& passphrase,
                                     const std::string& file_digits, int pad_nibbles) {
    unsigned char md[32];
    unsigned int md_len = 0;
    EVP_Digest(passphrase.data(), passphrase.size(), md, &md_len, EVP_sha256(), nullptr);
    char digest[65];
    for (unsigned int i = 0; i < 32; ++i) std::sprintf(digest + 2 * i, "%02x", md[i]);

    std::vector<int> pad(static_cast<std::size_t>(pad_nibbles), 0);
    for (int i = 0; i < 10; ++i) {
        char chunk[6];
        std::memcpy(chunk, digest + 5 * i, 5);
        chunk[5] = '\0';
        long address = std::strtol(chunk, nullptr, 16);
        for (int j = 0; j < pad_nibbles; ++j) {
            char c = file_digits[static_cast<std::size_t>(address + j)];
            int v = c <= '9' ? c - '0' : c - 'a' + 10;
            pad[static_cast<std::size_t>(j)] ^= v;
        }
    }
    std::string hex;
    for (int v : pad) hex += "0123456789abcdef"[v];
    return hex;
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <pipad-cli> [scratch-dir]\n");
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path scratch = argc > 2 ? fs::path(argv[2]) : fs::path("acceptance_scratch");
    fs::create_directories(scratch);

    // ---- fixtures and oracle cross-checks --------------------------------
    auto t0 = Clock::now();
    std::string oracle = mpfr_pi_hex(kPoolDigits);
    std::string machin = machin_pi_hex(64);
    bool oracles_agree = oracle.substr(0, 64) == kPiHex64 && machin == kPiHex64 &&
                         oracle.size() == static_cast<std::size_t>(kPoolDigits);
    report("setup: pi digit oracles agree (mpfr, machin, frozen constant)", oracles_agree,
           std::chrono::duration<double>(Clock::now() - t0).count());
    if (!oracles_agree) return 1;

    t0 = Clock::now();
    const fs::path digit_file = scratch / "pi_digits_1048832.txt";
    {
        bool have = false;
        if (fs::exists(digit_file)) {
            std::string flat;
            for (char c : read_file(digit_file))
                if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
            have = flat == oracle;
        }
        if (!have) write_digit_file(digit_file, oracle);
    }
    report("setup: pi digit file fixture (" + std::to_string(kPoolDigits) + " digits)", true,
           std::chrono::duration<double>(Clock::now() - t0).count());

    // Engine spot-check across the whole address range.
    t0 = Clock::now();
    {
        std::mt19937_64 rng(0x5eed);
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::int64_t pos = static_cast<std::int64_t>(rng() % (kPoolDigits - 16));
            ok = pipad::pi_hex_at(pos, 16).to_hex() ==
                 oracle.substr(static_cast<std::size_t>(pos), 16);
        }
        report("setup: engine matches the oracle at 20 random positions", ok,
               std::chrono::duration<double>(Clock::now() - t0).count());
        if (!ok) return 1;
    }

    // The bundled generator writes the same digits.
    t0 = Clock::now();
    {
        fs::path small = scratch / "mkdigits_4096.txt";
        CliResult r = run_cli(cli, "mkdigits --count 4096 --out " + small.string());
        std::string flat;
        for (char c : read_file(small))
            if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
        report("setup: mkdigits output matches the oracle prefix",
               r.exit_code == 0 && flat == oracle.substr(0, 4096),
               std::chrono::duration<double>(Clock::now() - t0).count());
    }

    pipad::DigitSourceSpec file_spec;
    file_spec.kind = pipad::SourceKind::pi_file;
    file_spec.path = digit_file;
    pipad::DigitSource file_source = pipad::open_source(file_spec);
    pipad::DigitSource computed_source = pipad::open_source({});

    // ---- 1. digit correctness --------------------------------------------
    t0 = Clock::now();
    {
        CliResult r = run_cli(cli, "digits --at 0 --count 32");
        double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        bool pass = r.exit_code == 0 && r.output == oracle.substr(0, 32) + "\n" && seconds < 1.0;
        report("1. digits --at 0 --count 32 matches the oracle, under 1 s", pass, seconds);
    }

    // ---- 2. overlap property ----------------------------------------------
    t0 = Clock::now();
    {
        std::mt19937_64 rng(20260810);
        int agreed = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::int64_t p = static_cast<std::int64_t>(rng() % ((1u << 20) + 1));
            std::string a = pipad::pi_hex_at(p, 24).to_hex();
            std::string b = pipad::pi_hex_at(p + 7, 17).to_hex();
            if (a.substr(7) == b) ++agreed;
        }
        double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        bool pass = agreed == 100 && seconds < 60.0;
        report("2. 100 random overlap pairs agree on shared digits, under 60 s", pass, seconds,
               std::to_string(agreed) + "/100");
    }

    // ---- 3. hash vectors ----------------------------------------------------
    t0 = Clock::now();
    {
        bool pass = pipad::hash_passphrase("password") ==
                        "5e884898da28047151d0e56f8dc6292773603d0d6aabbdd62a11ef721d1542d8" &&
                    pipad::hash_passphrase("be firs a husbandman") ==
                        "61d44985f82b046740d3ac4f0c0e291ffe6bf3bc6fe4a3d5169fb7523f178d9a";
        report("3. published SHA-256 passphrase vectors", pass,
               std::chrono::duration<double>(Clock::now() - t0).count());
    }

    // ---- 4. statistical reproduction ----------------------------------------
    t0 = Clock::now();
    {
        const std::size_t want_bytes = 500000;
        std::vector<std::uint8_t> bytes;
        bytes.reserve(want_bytes + 128);
        pipad::PadConfig config;  // 256 nibbles, 1 round
        int counter = 11767;
        while (bytes.size() < want_bytes) {
            std::vector<std::string> pass{"202103142347" + std::to_string(counter++)};
            pipad::OneTimePad pad = pipad::generate_pad(pass, config, file_source);
            std::vector<std::uint8_t> pad_bytes = pipad::nibbles_to_bytes(pad.nibbles);
            bytes.insert(bytes.end(), pad_bytes.begin(), pad_bytes.end());
        }
        bytes.resize(want_bytes);

        pipad::ByteHistogram histogram = pipad::byte_histogram(bytes);
        pipad::HistogramSummary summary = pipad::summarize(histogram);
        double chi = pipad::chi_square_uniform(histogram);
        double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

        bool mean_ok = summary.mean == 1953.125;
        bool cv_ok = summary.cv >= 0.015 && summary.cv <= 0.030;
        bool chi_ok = chi >= 180.0 && chi <= 340.0;
        char note[128];
        std::snprintf(note, sizeof(note), "mean=%.3f cv=%.4f chi=%.1f", summary.mean, summary.cv,
                      chi);
        report("4. 500,000 harness bytes: mean exact, cv in [.015,.030], chi in [180,340]",
               mean_ok && cv_ok && chi_ok && seconds < 600.0, seconds, note);
    }

    // ---- 5. keyspace ----------------------------------------------------------
    t0 = Clock::now();
    {
        pipad::BigUint ours = pipad::keyspace_size(1000000, 10);
        mpz_t expected;
        mpz_init(expected);
        mpz_bin_uiui(expected, 1000000, 10);
        std::vector<char> buf(mpz_sizeinbase(expected, 10) + 2);
        mpz_get_str(buf.data(), 10, expected);
        mpz_clear(expected);
        bool exact = ours.to_string() == buf.data();

        // Rendered value within 0.5% of 2.75e53.
        std::string dec = ours.to_string();
        double mantissa = 0.0;
        std::size_t used = std::min<std::size_t>(dec.size(), 17);
        for (std::size_t i = 0; i < used; ++i) mantissa = mantissa * 10.0 + (dec[i] - '0');
        double value = mantissa * std::pow(10.0, static_cast<double>(dec.size() - used));
        double rel = std::fabs(value / 2.75e53 - 1.0);
        bool rendered_ok = rel <= 0.005;

        char note[64];
        std::snprintf(note, sizeof(note), "%s rel=%.4f", ours.to_scientific(4).c_str(), rel);
        report("5. C(10^6, 10) exact vs GMP and within 0.5% of 2.75e53", exact && rendered_ok,
               std::chrono::duration<double>(Clock::now() - t0).count(), note);
    }

    // ---- 6. pipeline oracle equivalence ---------------------------------------
    t0 = Clock::now();
    {
        std::mt19937_64 rng(606060);
        pipad::PadConfig config;
        int matched = 0;
        for (int trial = 0; trial < 20; ++trial) {
            std::string passphrase = "acceptance-" + std::to_string(rng());
            std::vector<std::string> pass{passphrase};
            pipad::OneTimePad pad = pipad::generate_pad(pass, config, file_source);
            if (pad.to_hex() == reference_pad_hex(passphrase, oracle, config.pad_nibbles))
                ++matched;
        }
        report("6. 20 single-round pads equal the straight-line reference", matched == 20,
               std::chrono::duration<double>(Clock::now() - t0).count(),
               std::to_string(matched) + "/20");
    }

    // ---- 7. encrypt/decrypt round-trip ----------------------------------------
    t0 = Clock::now();
    {
        std::mt19937_64 rng(77);
        pipad::PadConfig config;
        std::vector<pipad::OneTimePad> pads;
        for (int i = 0; i < 5; ++i) {
            std::vector<std::string> pass{"roundtrip-" + std::to_string(i)};
            pads.push_back(pipad::generate_pad(pass, config, file_source));
        }
        int ok = 0;
        const int trials = 1000;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<std::uint8_t> message(rng() % 129);
            for (auto& b : message) b = static_cast<std::uint8_t>(rng());
            const pipad::OneTimePad& pad = pads[static_cast<std::size_t>(trial) % pads.size()];
            if (pipad::apply_pad(pipad::apply_pad(message, pad), pad) == message) ++ok;
        }
        report("7. encrypt/decrypt identity over 1000 random messages", ok == trials,
               std::chrono::duration<double>(Clock::now() - t0).count(),
               std::to_string(ok) + "/1000");
    }

    // ---- 8. source equivalence --------------------------------------------------
    t0 = Clock::now();
    {
        std::mt19937_64 rng(808080);
        pipad::PadConfig config;
        int equal = 0;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::string> pass{"equivalence-" + std::to_string(rng())};
            pipad::OneTimePad from_file = pipad::generate_pad(pass, config, file_source);
            pipad::OneTimePad from_engine = pipad::generate_pad(pass, config, computed_source);
            if (from_file.nibbles == from_engine.nibbles) ++equal;
        }
        report("8. computed and file sources give identical pads (10 passphrases)", equal == 10,
               std::chrono::duration<double>(Clock::now() - t0).count(),
               std::to_string(equal) + "/10");
    }

    // ---- 9. multi-round chaining -------------------------------------------------
    t0 = Clock::now();
    {
        std::mt19937_64 rng(909090);
        bool deterministic = true, distinct = true, involution = true;
        for (int trial = 0; trial < 20; ++trial) {
            std::string p1 = "chain-a-" + std::to_string(rng());
            std::string p2 = "chain-b-" + std::to_string(rng());
            std::string p3 = "chain-c-" + std::to_string(rng());

            pipad::PadConfig c1;
            pipad::PadConfig c2;
            c2.rounds = 2;
            pipad::PadConfig c3;
            c3.rounds = 3;
            std::vector<std::string> v1{p1}, v2{p1, p2}, v3{p1, p2, p3};

            pipad::OneTimePad r1 = pipad::generate_pad(v1, c1, file_source);
            pipad::OneTimePad r2 = pipad::generate_pad(v2, c2, file_source);
            pipad::OneTimePad r3 = pipad::generate_pad(v3, c3, file_source);
            deterministic = deterministic &&
                            r2.nibbles == pipad::generate_pad(v2, c2, file_source).nibbles &&
                            r3.nibbles == pipad::generate_pad(v3, c3, file_source).nibbles;
            distinct = distinct && r2.nibbles != r1.nibbles && r3.nibbles != r1.nibbles;

            pipad::AddressSet addresses = pipad::derive_addresses(pipad::hash_passphrase(p2));
            pipad::AddressSet chained = pipad::chain_addresses(addresses, r1.nibbles);
            involution = involution && pipad::chain_addresses(chained, r1.nibbles) == addresses;
        }
        report("9. rounds 2 and 3: deterministic, distinct from round 1, involution",
               deterministic && distinct && involution,
               std::chrono::duration<double>(Clock::now() - t0).count());
    }

    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
