#include "facetideal/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace facetideal {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0)
        return;
    sign_ = value > 0 ? 1 : -1;
    // Negate via unsigned to survive LLONG_MIN.
    std::uint64_t mag = value > 0 ? static_cast<std::uint64_t>(value)
                                  : ~static_cast<std::uint64_t>(value) + 1;
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0)
        mag_.pop_back();
    if (mag_.empty())
        sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t sum = carry;
        if (i < a.size())
            sum += a[i];
        if (i < b.size())
            sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry)
        out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0)
        out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0)
        return b;
    if (b.sign_ == 0)
        return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int cmp = BigInt::compare_mag(a.mag_, b.mag_);
        if (cmp == 0)
            return BigInt{};
        if (cmp > 0) {
            out.sign_ = a.sign_;
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            out.sign_ = b.sign_;
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0)
        return BigInt{};
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                out.mag_[i + j] + carry;
            out.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.mag_.size();
        while (carry != 0) {
            std::uint64_t cur = out.mag_[k] + carry;
            out.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder) {
    if (b.sign_ == 0)
        throw std::domain_error("BigInt division by zero");
    if (compare_mag(a.mag_, b.mag_) < 0) {
        quotient = BigInt{};
        remainder = a;
        return;
    }

    // Binary long division on magnitudes; plenty fast at SNF scale.
    std::size_t bits = a.mag_.size() * 32;
    std::vector<std::uint32_t> q(a.mag_.size(), 0);
    std::vector<std::uint32_t> r;
    for (std::size_t i = bits; i-- > 0;) {
        // r = (r << 1) | bit_i(a)
        std::uint32_t carry = (a.mag_[i / 32] >> (i % 32)) & 1u;
        for (std::size_t k = 0; k < r.size(); ++k) {
            std::uint32_t next = r[k] >> 31;
            r[k] = (r[k] << 1) | carry;
            carry = next;
        }
        if (carry)
            r.push_back(carry);
        if (compare_mag(r, b.mag_) >= 0) {
            r = sub_mag(r, b.mag_);
            q[i / 32] |= std::uint32_t{1} << (i % 32);
        }
    }

    quotient = BigInt{};
    quotient.mag_ = std::move(q);
    quotient.sign_ = a.sign_ * b.sign_;
    quotient.trim();
    remainder = BigInt{};
    remainder.mag_ = std::move(r);
    remainder.sign_ = a.sign_;
    remainder.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_)
        return a.sign_ < b.sign_;
    int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
    return compare_mag(a.mag_, b.mag_);
}

bool BigInt::fits_long_long() const {
    if (mag_.size() > 2)
        return false;
    if (mag_.size() < 2)
        return true;
    std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? v <= 0x7fffffffffffffffull : v <= 0x8000000000000000ull;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long())
        throw std::overflow_error("BigInt does not fit in long long");
    std::uint64_t v = 0;
    if (!mag_.empty())
        v = mag_[0];
    if (mag_.size() == 2)
        v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(v - 1) - 1 : static_cast<long long>(v);
}

std::string BigInt::to_string() const {
    if (sign_ == 0)
        return "0";
    std::string digits;
    BigInt cur = this->abs();
    BigInt ten(10);
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
        cur = q;
    }
    if (sign_ < 0)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace facetideal
