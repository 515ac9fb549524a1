#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace flagforge;
using ffsupport::Rng;

TEST_CASE("build_field basics") {
    FieldCtx f16 = build_field(2, 4, std::vector<Coeff>{1, 1, 0, 0, 1});  // x^4 + x + 1
    CHECK(f16.order_star() == 15);
    CHECK(f16.p() == 2);
    CHECK(f16.n() == 4);

    FieldCtx f38 = build_field(3, 8);
    CHECK(f38.order_star() == 6560);

    CHECK_THROWS_MATCHES(build_field(4, 2), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotPrime;
                         }));
}

TEST_CASE("table cap") {
    CHECK_THROWS_MATCHES(build_field(2, 30), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::TableCapExceeded;
                         }));
    CHECK_THROWS_MATCHES(build_field(2, 5, std::nullopt, 16), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::TableCapExceeded; }));
}

TEST_CASE("addition via Zech") {
    FieldCtx ctx = build_field(2, 4, std::vector<Coeff>{1, 1, 0, 0, 1});
    FieldElem a = ctx.alpha();
    CHECK(ctx.add(a, ctx.one()) == ctx.from_exponent(4));  // alpha^4 = alpha + 1
    CHECK(ctx.add(a, ctx.zero()) == a);
    CHECK(ctx.add(a, a).is_zero());  // characteristic 2
}

TEST_CASE("multiplication") {
    FieldCtx ctx = build_field(2, 4);
    CHECK(ctx.mul(ctx.from_exponent(3), ctx.from_exponent(5)) == ctx.from_exponent(8));
    CHECK(ctx.mul(ctx.from_exponent(3), ctx.zero()).is_zero());
    CHECK(ctx.mul(ctx.from_exponent(14), ctx.from_exponent(3)) == ctx.from_exponent(2));  // 17 mod 15
}

TEST_CASE("multiplicative order") {
    FieldCtx f216 = build_field(2, 16);
    CHECK(f216.mult_order(f216.alpha()) == 65535);
    CHECK(f216.mult_order(f216.one()) == 1);

    FieldCtx f38 = build_field(3, 8);
    CHECK(f38.mult_order(f38.from_exponent(1312)) == 5);

    CHECK_THROWS_MATCHES(f38.mult_order(f38.zero()), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::ZeroHasNoOrder;
                         }));
}

TEST_CASE("subfield generators and lattice") {
    FieldCtx f16 = build_field(2, 4);
    CHECK(f16.subfield_generator(2) == f16.from_exponent(5));
    CHECK(f16.subfield_generator(4) == f16.alpha());
    CHECK_THROWS_MATCHES(f16.subfield_generator(3), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotADivisor;
                         }));

    FieldCtx f216 = build_field(2, 16);
    CHECK(f216.subfield_exponent(8) == 257);
    CHECK(f216.subfield_exponent(2) == 21845);

    FieldCtx f212 = build_field(2, 12);
    std::vector<std::size_t> ms;
    for (auto& [m, c] : f212.subfield_lattice()) ms.push_back(m);
    CHECK(ms == std::vector<std::size_t>{1, 2, 3, 4, 6, 12});

    FieldCtx f38 = build_field(3, 8);
    ms.clear();
    for (auto& [m, c] : f38.subfield_lattice()) ms.push_back(m);
    CHECK(ms == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("subfield closure under addition") {
    // {0} u <alpha^c> is an additive subgroup, checked exhaustively.
    for (auto [p, n, m] : {std::tuple<int, int, int>{2, 8, 4}, {3, 4, 2}, {2, 6, 3}, {5, 2, 1}}) {
        FieldCtx ctx = build_field(p, n);
        FieldElem g = ctx.subfield_generator(m);
        std::uint64_t pm = 1;
        for (int i = 0; i < m; ++i) pm *= p;
        CHECK(ctx.mult_order(g) == pm - 1);
        std::set<std::uint64_t> members{0};
        FieldElem cur = ctx.one();
        for (std::uint64_t i = 0; i + 1 < pm; ++i) {
            members.insert(ctx.packed_coords(cur));
            cur = ctx.mul(cur, g);
        }
        REQUIRE(members.size() == pm);
        for (std::uint64_t x : members) {
            for (std::uint64_t y : members) {
                FieldElem s = ctx.add(ctx.from_packed(x), ctx.from_packed(y));
                CHECK(members.count(ctx.packed_coords(s)) == 1);
            }
        }
    }
}

namespace {

void check_zech_entry(const FieldCtx& ctx, std::uint64_t i) {
    std::vector<Coeff> c = ctx.coords(ctx.from_exponent(i));
    c[0] = static_cast<Coeff>((c[0] + 1) % ctx.p());
    FieldElem want = ctx.from_coords(c.data());
    std::int64_t z = ctx.zech(i);
    if (want.is_zero()) {
        CHECK(z < 0);
    } else {
        REQUIRE(z >= 0);
        CHECK(static_cast<std::uint64_t>(z) == want.exponent());
    }
}

}  // namespace

TEST_CASE("Zech consistency against coordinate addition") {
    // alpha^{z(i)} = alpha^i + 1, re-derived coordinatewise, full table.
    for (auto [p, n] : {std::pair<int, int>{2, 8}, {3, 5}, {5, 3}, {7, 2}, {2, 12}, {13, 1}}) {
        FieldCtx ctx = build_field(p, n);
        for (std::uint64_t i = 0; i < ctx.order_star(); ++i) check_zech_entry(ctx, i);
    }
    // sampled beyond 2^12
    for (auto [p, n] : {std::pair<int, int>{2, 16}, {3, 8}}) {
        FieldCtx ctx = build_field(p, n);
        Rng rng(0x5EC);
        for (int it = 0; it < 4096; ++it) check_zech_entry(ctx, rng.next(ctx.order_star()));
    }
}

TEST_CASE("FLAGFORGE_TABLE_CAP override") {
    setenv("FLAGFORGE_TABLE_CAP", "16", 1);
    CHECK(env_table_cap() == 16);
    CHECK_THROWS_MATCHES(build_field(2, 5), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::TableCapExceeded;
                         }));
    CHECK(build_field(2, 4).order_star() == 15);
    unsetenv("FLAGFORGE_TABLE_CAP");
    CHECK(env_table_cap() == kDefaultTableCap);
}

TEST_CASE("inverses") {
    for (auto [p, n] : {std::pair<int, int>{2, 6}, {3, 4}, {11, 2}}) {
        FieldCtx ctx = build_field(p, n);
        for (std::uint64_t e = 0; e < ctx.order_star(); ++e) {
            FieldElem a = ctx.from_exponent(e);
            CHECK(ctx.mul(a, ctx.inverse(a)) == ctx.one());
        }
    }
}

TEST_CASE("negation and subtraction") {
    for (auto [p, n] : {std::pair<int, int>{2, 5}, {3, 3}, {7, 2}}) {
        FieldCtx ctx = build_field(p, n);
        for (std::uint64_t e = 0; e < ctx.order_star(); ++e) {
            FieldElem a = ctx.from_exponent(e);
            CHECK(ctx.add(a, ctx.neg(a)).is_zero());
            CHECK(ctx.sub(a, a).is_zero());
        }
    }
}

TEST_CASE("deterministic modulus selection") {
    FieldCtx a = build_field(2, 16);
    FieldCtx b = build_field(2, 16);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.modulus_string() == b.modulus_string());
    for (std::uint64_t i : {0ull, 1ull, 1000ull, 65534ull}) CHECK(a.zech(i) == b.zech(i));
}

TEST_CASE("user-supplied modulus validation") {
    // x^4 + x^2 + 1 = (x^2 + x + 1)^2 is reducible
    CHECK_THROWS_MATCHES(build_field(2, 4, std::vector<Coeff>{1, 0, 1, 0, 1}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotPrimitive; }));
    // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
    CHECK_THROWS_MATCHES(build_field(2, 4, std::vector<Coeff>{1, 1, 1, 1, 1}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotPrimitive; }));
    // degree mismatch
    CHECK_THROWS_AS(build_field(2, 4, std::vector<Coeff>{1, 1, 1}), Error);
}

TEST_CASE("degree one field") {
    FieldCtx ctx = build_field(13, 1);
    CHECK(ctx.order_star() == 12);
    CHECK(ctx.mult_order(ctx.alpha()) == 12);  // alpha is a primitive root mod 13
    FieldElem two = ctx.add(ctx.one(), ctx.one());
    CHECK(ctx.add(two, ctx.neg(two)).is_zero());
}
