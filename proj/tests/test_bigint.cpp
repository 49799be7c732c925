#include "doctest.h"

#include <random>

#include "facetideal/bigint.hpp"

using facetideal::BigInt;

TEST_CASE("small arithmetic matches long long") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_long_long() == a + b);
        CHECK((A - B).to_long_long() == a - b);
        CHECK((A * B).to_long_long() == a * b);
        if (b != 0) {
            CHECK((A / B).to_long_long() == a / b);
            CHECK((A % B).to_long_long() == a % b);
        }
        CHECK((A < B) == (a < b));
        CHECK((A == B) == (a == b));
    }
}

TEST_CASE("division identity holds on wide operands") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a(static_cast<long long>(rng() >> 1));
        BigInt b(static_cast<long long>(rng() >> 1));
        BigInt wide = a * b + BigInt(static_cast<long long>(rng() % 1000));
        if (trial % 3 == 0)
            wide = -wide;
        BigInt d = b + BigInt(1);
        BigInt q, r;
        BigInt::divmod(wide, d, q, r);
        CHECK(q * d + r == wide);
        CHECK(BigInt::compare_abs(r, d) < 0);
        // truncated division: remainder carries the dividend's sign
        if (!r.is_zero())
            CHECK(r.is_negative() == wide.is_negative());
    }
}

TEST_CASE("decimal rendering and gcd") {
    BigInt big(1000000007);
    BigInt huge = big * big * big;
    CHECK(huge.to_string() == "1000000021000000147000000343");
    CHECK_FALSE(huge.fits_long_long());
    CHECK(gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(gcd(huge * BigInt(4), huge * BigInt(6)) == huge * BigInt(2));
    CHECK(BigInt(-9223372036854775807LL - 1).to_long_long() == -9223372036854775807LL - 1);
}
