#include <catch2/catch_amalgamated.hpp>

#include "flagforge/numtheory.hpp"

using namespace flagforge;

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(65537));
    CHECK(is_prime_u64(257));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(65535));
    CHECK(is_prime_u64(1000000007ull));
    CHECK_FALSE(is_prime_u64(1000000007ull * 998244353ull));
}

TEST_CASE("factorization") {
    auto f = factorize_u64(65535);  // 3 * 5 * 17 * 257
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{3, 1});
    CHECK(f[3] == std::pair<std::uint64_t, unsigned>{257, 1});

    auto g = factorize_u64(6560);  // 2^5 * 5 * 41
    REQUIRE(g.size() == 3);
    CHECK(g[0] == std::pair<std::uint64_t, unsigned>{2, 5});
    CHECK(g[1] == std::pair<std::uint64_t, unsigned>{5, 1});
    CHECK(g[2] == std::pair<std::uint64_t, unsigned>{41, 1});

    auto h = factorize_u64(4095);  // 3^2 * 5 * 7 * 13
    REQUIRE(h.size() == 4);
    CHECK(h[0] == std::pair<std::uint64_t, unsigned>{3, 2});
}

TEST_CASE("divisors") {
    CHECK(divisors_u64(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors_u64(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_u64(65535).size() == 16);
    CHECK(divisors_u64(6560).size() == 24);
    CHECK(divisors_u64(4095).size() == 24);
    auto d = divisors_u64(4095);
    CHECK(std::is_sorted(d.begin(), d.end()));
}

TEST_CASE("modular arithmetic") {
    CHECK(powmod_u64(2, 10, 1000) == 24);
    CHECK(powmod_u64(5, 0, 7) == 1);
    CHECK(mulmod_u64(UINT64_MAX - 1, UINT64_MAX - 1, UINT64_MAX) == 1);
    CHECK(ipow_capped(2, 20, 1 << 20) == 1 << 20);
    CHECK(ipow_capped(2, 21, 1 << 20) == 0);
}
