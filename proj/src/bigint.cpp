#include "elbound/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace elbound {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(std::uint64_t exponent) {
    BigUint r;
    r.limbs_.assign(exponent / 32 + 1, 0);
    r.limbs_.back() = std::uint32_t{1} << (exponent % 32);
    return r;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw std::invalid_argument("BigUint subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigUint& BigUint::mul_small(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigUint::divmod_small(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("BigUint division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t bits = (limbs_.size() - 1) * std::uint64_t{32};
    std::uint32_t top = limbs_.back();
    std::uint64_t top_bits = 0;
    while (top) {
        ++top_bits;
        top >>= 1;
    }
    return bits + top_bits;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

double BigUint::to_double() const { return ratio_pow2(0); }

double BigUint::ratio_pow2(std::uint64_t pow2) const {
    if (limbs_.empty()) return 0.0;
    const std::uint64_t bits = bit_length();
    if (bits <= 64) {
        // u64 -> double is a single correct rounding; scaling by 2^-pow2 is exact
        // within the normal range.
        return std::ldexp(static_cast<double>(to_u64()), -static_cast<int>(pow2));
    }
    // Take the top 64 bits and fold everything below into a sticky bit so the
    // u64 -> double conversion still rounds to nearest correctly.
    const std::uint64_t shift = bits - 64;
    std::uint64_t top = 0;
    for (std::uint64_t b = 0; b < 64; ++b) {
        const std::uint64_t src = shift + b;
        const std::uint32_t limb = limbs_[src / 32];
        if ((limb >> (src % 32)) & 1u) top |= std::uint64_t{1} << b;
    }
    bool sticky = false;
    for (std::uint64_t src = 0; src < shift && !sticky; ++src) {
        const std::uint32_t limb = limbs_[src / 32];
        if ((limb >> (src % 32)) & 1u) sticky = true;
    }
    if (sticky) top |= 1u;
    const double mant = static_cast<double>(top);
    return std::ldexp(mant, static_cast<int>(shift) - static_cast<int>(pow2));
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint{};
    if (k > n - k) k = n - k;
    BigUint c(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step
        c.mul_small(static_cast<std::uint32_t>(n - i + 1));
        c.divmod_small(static_cast<std::uint32_t>(i));
    }
    return c;
}

} // namespace elbound
