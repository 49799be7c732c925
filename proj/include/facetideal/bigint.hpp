#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace facetideal {

/// Sign-magnitude arbitrary-precision integer, just enough arithmetic for
/// integer Smith normal form: ring ops, truncated divmod, gcd.  Magnitudes in
/// SNF pivots can outgrow 64 bits even on small boundary matrices, so no
/// fixed-width shortcut is taken.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value); // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Truncated division: quotient rounds toward zero, remainder has the
    /// dividend's sign and |remainder| < |divisor|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    /// -1, 0, 1 according to |a| <,=,> |b|.
    static int compare_abs(const BigInt& a, const BigInt& b);

    bool fits_long_long() const;
    long long to_long_long() const; // throws on overflow

    std::string to_string() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian, no leading zeros, empty iff zero

    void trim();
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);

} // namespace facetideal
