#ifndef ELBOUND_BIGINT_HPP
#define ELBOUND_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace elbound {

// Arbitrary-precision unsigned integer. Just enough for exact binomial
// tail sums: addition, subtraction, small multiply/divide, powers of two,
// comparisons, and a correctly rounded double view.
//
// Representation: base 2^32 limbs, little-endian, no trailing zero limbs.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    static BigUint pow2(std::uint64_t exponent);

    BigUint& operator+=(const BigUint& rhs);
    // Requires *this >= rhs.
    BigUint& operator-=(const BigUint& rhs);
    BigUint& mul_small(std::uint32_t m);
    // Divides in place, returns the remainder. Requires d != 0.
    std::uint32_t divmod_small(std::uint32_t d);

    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { lhs += rhs; return lhs; }
    friend BigUint operator-(BigUint lhs, const BigUint& rhs) { lhs -= rhs; return lhs; }

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    bool is_zero() const { return limbs_.empty(); }
    // Number of significant bits; 0 for zero.
    std::uint64_t bit_length() const;

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // requires fits_u64()

    // Nearest double (round to nearest, ties to even).
    double to_double() const;
    // Nearest double of *this / 2^pow2, with a single rounding.
    double ratio_pow2(std::uint64_t pow2) const;

    std::string to_decimal() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

// Binomial coefficient C(n, k), exact.
BigUint binomial(std::uint64_t n, std::uint64_t k);

} // namespace elbound

#endif
