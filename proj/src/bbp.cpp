#include "pipad/bbp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pipad/hex.hpp"

namespace pipad {

namespace {

// Largest modulus the double-precision reduction handles exactly. Products
// never exceed modulus^2 = 2^48 < 2^53, so every intermediate is an exactly
// representable integer.
constexpr double kModulusBound = 16777216.0;  // 2^24

// x mod ak for integer-valued x in [0, ak^2). trunc(x * inv) is the true
// quotient or one less (the spacing of x/ak values is 1/ak >= 2^-24, far
// above the rounding error of x * inv), so one conditional subtract
// completes the reduction exactly.
inline double reduce(double x, double ak, double inv) {
    double q = std::trunc(x * inv);
    double r = x - q * ak;
    r -= (r >= ak) ? ak : 0.0;
    return r;
}

// 16^p mod ak without argument checking. ak must be an integer in
// [2, 2^24]; p >= 1.
double pow16_mod(std::int64_t p, double ak) {
    double inv = 1.0 / ak;
    int msb = 63 - __builtin_clzll(static_cast<unsigned long long>(p));
    double r = 1.0;
    for (int b = msb; b >= 0; --b) {
        r = reduce(r * r, ak, inv);
        if ((p >> b) & 1) r = reduce(16.0 * r, ak, inv);
    }
    return r;
}

// Batched variant: out[i] = 16^p[i] mod ak[i]. All lanes walk the same bit
// range; leading zero bits only square r = 1, which is harmless. The lane
// loop is branch-free so it vectorizes.
constexpr int kLanes = 16;

void pow16_mod_batch(const std::int64_t* p, const double* ak, const double* inv, double* out) {
    double r[kLanes];
    std::int64_t maxp = 1;
    for (int i = 0; i < kLanes; ++i) {
        r[i] = 1.0;
        if (p[i] > maxp) maxp = p[i];
    }
    int msb = 63 - __builtin_clzll(static_cast<unsigned long long>(maxp));
    for (int b = msb; b >= 0; --b) {
#pragma omp simd
        for (int i = 0; i < kLanes; ++i) {
            double x = r[i] * r[i];
            double q = std::trunc(x * inv[i]);
            double t = x - q * ak[i];
            t -= (t >= ak[i]) ? ak[i] : 0.0;
            double y = 16.0 * t;
            double q2 = std::trunc(y * inv[i]);
            double u = y - q2 * ak[i];
            u -= (u >= ak[i]) ? ak[i] : 0.0;
            double bit = static_cast<double>((p[i] >> b) & 1);
            r[i] = t + bit * (u - t);
        }
    }
    for (int i = 0; i < kLanes; ++i) out[i] = r[i];
}

// Fractional digits come from the combination 4*S1 - 2*S2 - S3 - S4 of the
// four series with denominators 8k + m. The window accumulator folds the
// weights into a single per-term pass.
constexpr int kSeriesM[4] = {1, 4, 5, 6};
constexpr std::int64_t kSeriesWeight[4] = {4, -2, -1, -1};

// Window fractions accumulate in 63-bit fixed point: wrapping integer
// addition is exact arithmetic mod 1, so the sum itself contributes no
// rounding error no matter how many terms go in. (A plain double
// accumulator drifts by ~1e-13 over the millions of terms a position near
// 2^20 needs, which flips the 8th digit of a window about once in 3*10^4
// digits - enough to break overlap consistency.)
//
// Each term numerator/ak enters as a nearest-rounded 63-bit integer plus an
// FMA-derived correction, leaving under 1 unit of 2^-63 error per term.
constexpr double kScale63 = 9223372036854775808.0;   // 2^63
constexpr double kRoundMagic = 6755399441055744.0;   // 1.5 * 2^52, rounds to integer
constexpr std::uint64_t kFracMask = 0x7fffffffffffffffull;

// numerator/ak scaled by 2^63, correct to ~1 ulp of the 63-bit grid.
// numerator must be exactly representable and below ak (residues) or below
// 1 (tail powers of 16).
inline std::uint64_t term_fixed63(double numerator, double ak, double inv, double inv63) {
    double t = numerator * inv;
    std::int64_t whole = static_cast<std::int64_t>(t * kScale63);  // exact: t*2^63 is integral
    double residual = std::fma(-t, ak, numerator);                 // exact: numerator - t*ak
    double corr = residual * inv63;
    corr = (corr + kRoundMagic) - kRoundMagic;  // round to nearest integer value
    return static_cast<std::uint64_t>(whole + static_cast<std::int64_t>(corr));
}

// Accumulates frac(4*S1 - 2*S2 - S3 - S4) for `windows` window positions
// start, start + step, ... Terms k < start are seeded with one modular
// exponentiation each and then advanced window to window by multiplying
// with 16^step mod ak; terms inside the window range enter with tiny
// exponents as their window comes into reach; terms past each window are
// summed directly until they fall below epsilon.
std::vector<std::uint64_t> accumulate_windows(std::int64_t start, std::int64_t windows, int step,
                                              double epsilon) {
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(windows), 0);

    for (int mi = 0; mi < 4; ++mi) {
        const double m = static_cast<double>(kSeriesM[mi]);
        const std::uint64_t weight = static_cast<std::uint64_t>(kSeriesWeight[mi]);

        // k < start: active in every window.
        for (std::int64_t k0 = 0; k0 < start; k0 += kLanes) {
            const int lanes = static_cast<int>(std::min<std::int64_t>(kLanes, start - k0));
            std::int64_t p[kLanes];
            double ak[kLanes], inv[kLanes], inv63[kLanes], r[kLanes], c[kLanes];
            for (int i = 0; i < kLanes; ++i) {
                p[i] = 1;
                ak[i] = 3.0;
            }
            for (int i = 0; i < lanes; ++i) {
                std::int64_t k = k0 + i;
                p[i] = start - k;
                ak[i] = 8.0 * static_cast<double>(k) + m;
            }
            for (int i = 0; i < kLanes; ++i) inv[i] = 1.0 / ak[i];
            for (int i = 0; i < kLanes; ++i) inv63[i] = inv[i] * kScale63;
            pow16_mod_batch(p, ak, inv, r);
            for (int i = 0; i < kLanes; ++i) p[i] = step;
            pow16_mod_batch(p, ak, inv, c);
            for (int i = lanes; i < kLanes; ++i) r[i] = 0.0;  // idle lanes add nothing

            for (std::int64_t w = 0; w < windows; ++w) {
                std::uint64_t sum = 0;
#pragma omp simd reduction(+ : sum)
                for (int i = 0; i < kLanes; ++i) {
                    sum += term_fixed63(r[i], ak[i], inv[i], inv63[i]);
                    double x = r[i] * c[i];
                    double q = std::trunc(x * inv[i]);
                    double t = x - q * ak[i];
                    t -= (t >= ak[i]) ? ak[i] : 0.0;
                    r[i] = t;
                }
                acc[w] += weight * sum;
            }
        }

        // k in [start + step*j, start + step*(j+1)): active from window j+1 on.
        for (std::int64_t j = 0; j + 1 < windows; ++j) {
            const std::int64_t kbase = start + static_cast<std::int64_t>(step) * j;
            std::int64_t p[kLanes];
            double ak[kLanes], inv[kLanes], inv63[kLanes], r[kLanes], c[kLanes];
            for (int i = 0; i < kLanes; ++i) {
                p[i] = 1;
                ak[i] = 3.0;
            }
            for (int i = 0; i < step; ++i) {
                std::int64_t k = kbase + i;
                p[i] = step - i;  // exponent at window j+1
                ak[i] = 8.0 * static_cast<double>(k) + m;
            }
            for (int i = 0; i < kLanes; ++i) inv[i] = 1.0 / ak[i];
            for (int i = 0; i < kLanes; ++i) inv63[i] = inv[i] * kScale63;
            pow16_mod_batch(p, ak, inv, r);
            for (int i = 0; i < kLanes; ++i) p[i] = step;
            pow16_mod_batch(p, ak, inv, c);
            for (int i = step; i < kLanes; ++i) r[i] = 0.0;

            for (std::int64_t w = j + 1; w < windows; ++w) {
                std::uint64_t sum = 0;
#pragma omp simd reduction(+ : sum)
                for (int i = 0; i < kLanes; ++i) {
                    sum += term_fixed63(r[i], ak[i], inv[i], inv63[i]);
                    double x = r[i] * c[i];
                    double q = std::trunc(x * inv[i]);
                    double t = x - q * ak[i];
                    t -= (t >= ak[i]) ? ak[i] : 0.0;
                    r[i] = t;
                }
                acc[w] += weight * sum;
            }
        }

        // k >= window position: direct terms until they drop below epsilon.
        for (std::int64_t w = 0; w < windows; ++w) {
            const std::int64_t pos = start + static_cast<std::int64_t>(step) * w;
            for (std::int64_t k = pos; k <= pos + 100; ++k) {
                double ak = 8.0 * static_cast<double>(k) + m;
                double p16 = std::pow(16.0, static_cast<double>(pos - k));
                if (p16 / ak < epsilon) break;
                acc[w] += weight * term_fixed63(p16, ak, 1.0 / ak, kScale63 / ak);
            }
        }
    }
    return acc;
}

// First n fractional hex digits of |x| as nibble values.
void fraction_nibbles(double x, int n, std::uint8_t* out) {
    double y = std::fabs(x);
    for (int i = 0; i < n; ++i) {
        y = 16.0 * (y - std::floor(y));
        out[i] = static_cast<std::uint8_t>(static_cast<int>(y));
    }
}

}  // namespace

void BbpEngineConfig::validate() const {
    if (digits_per_evaluation < 1)
        throw std::invalid_argument("digits_per_evaluation must be at least 1");
    if (digits_per_evaluation > 10)
        throw std::invalid_argument(
            "digits_per_evaluation above 10 exceeds the double-precision margin");
    if (hex_window < digits_per_evaluation)
        throw std::invalid_argument("hex_window must be at least digits_per_evaluation");
    if (!(series_epsilon > 0.0)) throw std::invalid_argument("series_epsilon must be positive");
}

std::string DigitBlock::to_hex() const { return nibbles_to_hex(digits); }

double mod_pow16(std::int64_t exponent, double modulus) {
    if (std::trunc(modulus) != modulus || modulus < 1.0)
        throw std::domain_error("modulus must be a positive integer");
    if (modulus > kModulusBound)
        throw std::domain_error("modulus exceeds the 2^24 validity bound of the engine");
    if (exponent < 0) throw std::domain_error("exponent must be non-negative");
    if (modulus == 1.0) return 0.0;
    if (exponent == 0) return 1.0;
    return pow16_mod(exponent, modulus);
}

double series_sum(int m, std::int64_t position, double epsilon) {
    if (m != 1 && m != 4 && m != 5 && m != 6)
        throw std::invalid_argument("series index m must be one of 1, 4, 5, 6");
    if (position < 0 || position > kBbpValidityLimit)
        throw std::domain_error("position out of the engine validity range");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

    double s = 0.0;
    for (std::int64_t k = 0; k < position; ++k) {
        double ak = 8.0 * static_cast<double>(k) + static_cast<double>(m);
        double t = mod_pow16(position - k, ak);
        s += t / ak;
        s -= std::trunc(s);
    }
    for (std::int64_t k = position; k <= position + 100; ++k) {
        double ak = 8.0 * static_cast<double>(k) + static_cast<double>(m);
        double t = std::pow(16.0, static_cast<double>(position - k)) / ak;
        if (t < epsilon) break;
        s += t;
        s -= std::trunc(s);
    }
    return s;
}

std::string fraction_to_hex(double x, int count) {
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    std::vector<std::uint8_t> nibbles(static_cast<std::size_t>(count));
    fraction_nibbles(x, count, nibbles.data());
    return nibbles_to_hex(nibbles);
}

DigitBlock pi_hex_at(std::int64_t position, std::int64_t count, const BbpEngineConfig& config) {
    config.validate();
    if (position < 0) throw std::domain_error("position must be non-negative");
    if (count < 1) throw std::domain_error("digit count must be positive");
    if (position + count > kBbpValidityLimit)
        throw std::domain_error("requested digits reach past the 2^24 validity bound");

    const int step = config.digits_per_evaluation;
    const std::int64_t windows = (count + step - 1) / step;
    const std::int64_t last_pos = position + static_cast<std::int64_t>(step) * (windows - 1);
    // Series terms use moduli up to 8k + 6 with k < last window position;
    // past that the reduction would no longer be exact, so refuse loudly.
    if (last_pos > 0 && 8.0 * static_cast<double>(last_pos - 1) + 6.0 > kModulusBound)
        throw std::domain_error(
            "position needs series moduli beyond the 2^24 validity bound of mod_pow16");

    std::vector<std::uint64_t> acc =
        accumulate_windows(position, windows, step, config.series_epsilon);

    DigitBlock block;
    block.start = position;
    block.digits.reserve(static_cast<std::size_t>(count));
    for (std::int64_t w = 0; w < windows; ++w) {
        const std::uint64_t fraction = acc[static_cast<std::size_t>(w)] & kFracMask;
        const int take = static_cast<int>(
            std::min<std::int64_t>(step, count - w * static_cast<std::int64_t>(step)));
        for (int i = 0; i < take; ++i)
            block.digits.push_back(
                static_cast<std::uint8_t>((fraction >> (59 - 4 * i)) & 0xf));
    }
    return block;
}

}  // namespace pipad
