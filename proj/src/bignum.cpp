#include "pipad/bignum.hpp"

#include <algorithm>
#include <stdexcept>

namespace pipad {

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator*=(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (std::uint32_t& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
        carry = prod >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
        carry >>= 32;
    }
    trim();  // factor 0 zeroes everything
    return *this;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(limbs_[i]) + carry +
                            (i < other.limbs_.size() ? other.limbs_[i] : 0u);
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigUint::div_mod(std::uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.div_mod(1000000000u);
        if (tmp.is_zero()) {
            while (chunk != 0) {
                digits += static_cast<char>('0' + chunk % 10);
                chunk /= 10;
            }
        } else {
            for (int i = 0; i < 9; ++i) {
                digits += static_cast<char>('0' + chunk % 10);
                chunk /= 10;
            }
        }
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string BigUint::to_scientific(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("need at least one digit");
    std::string dec = to_string();
    int exponent = static_cast<int>(dec.size()) - 1;

    // Round to the requested number of digits.
    std::string mant = dec.substr(0, static_cast<std::size_t>(significant_digits));
    while (static_cast<int>(mant.size()) < significant_digits) mant += '0';
    bool round_up = dec.size() > mant.size() && dec[mant.size()] >= '5';
    if (round_up) {
        int i = static_cast<int>(mant.size()) - 1;
        while (i >= 0 && mant[i] == '9') mant[i--] = '0';
        if (i < 0) {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++exponent;
        } else {
            ++mant[i];
        }
    }

    std::string out(1, mant[0]);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e+" + std::to_string(exponent);
    return out;
}

}  // namespace pipad
