#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace flagforge;
using ffsupport::Rng;

namespace {

Flag galois_2_4_on_f38(const FieldCtx& ctx) {
    return new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4)});
}

}  // namespace

TEST_CASE("orbit sizes") {
    FieldCtx f38 = build_field(3, 8);
    Flag f = galois_2_4_on_f38(f38);
    OrbitCode code = orbit(f, SubgroupSpec::full(f38));
    CHECK(code.size() == 820);
    CHECK(code.stab_order() == 8);  // = 3^2 - 1
    CHECK(code.size() * code.stab_order() == f38.order_star());

    // singleton: beta inside the stabilizer fixes the flag
    OrbitCode fixed = orbit(f, SubgroupSpec::from_exponent(f38, 820));  // <alpha^820> = F_{3^2}^*
    CHECK(fixed.size() == 1);
    CHECK(min_distance(fixed) == 0);
}

TEST_CASE("galois orbit on F_2^16") {
    FieldCtx ctx = build_field(2, 16);
    Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4), Subspace::subfield(ctx, 8)});
    OrbitCode code = orbit(f, SubgroupSpec::full(ctx));
    CHECK(code.size() == 21845);
    CHECK(code.stab_orders_per_level() == std::vector<std::uint64_t>{3, 15, 255});
    CHECK(min_distance(code) == 4);

    OrbitCode one = orbit(f, SubgroupSpec::from_exponent(ctx, 21845));
    CHECK(one.size() == 1);
}

TEST_CASE("stabilizer dual route") {
    FieldCtx f38 = build_field(3, 8);
    Flag f = galois_2_4_on_f38(f38);
    SubgroupSpec beta5 = SubgroupSpec::from_exponent(f38, 1312);  // |beta| = 5
    SubgroupSpec st = stabilizer(f, beta5);
    CHECK(st.order == 1);

    SubgroupSpec trivial = SubgroupSpec::from_exponent(f38, f38.order_star());
    CHECK(stabilizer(f, trivial).order == 1);

    SubgroupSpec full_stab = stabilizer(f, SubgroupSpec::full(f38));
    CHECK(full_stab.order == 8);
    CHECK(full_stab.l == 820);  // <alpha^820> = F_{3^2}^*
}

TEST_CASE("stabilizer subfield") {
    FieldCtx f38 = build_field(3, 8);
    Flag f = galois_2_4_on_f38(f38);
    CHECK(stabilizer_subfield(f, SubgroupSpec::full(f38)) == 2);
    CHECK(stabilizer_subfield(f, SubgroupSpec::from_exponent(f38, 1312)) == 1);
    CHECK(stabilizer_subfield(f, SubgroupSpec::from_exponent(f38, f38.order_star())) == 1);
}

TEST_CASE("best friend") {
    // (F_4, F_4 + F_2 alpha) on F_{2^4}: levels have friends F_4 and F_2.
    FieldCtx f16 = build_field(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    Subspace l2 = sum(f4, Subspace::from_generators(f16, {f16.alpha()}));
    REQUIRE(l2.dim() == 3);
    BestFriend bf = best_friend(new_flag({f4, l2}));
    CHECK(bf.m == 1);
    CHECK(bf.per_level == std::vector<std::size_t>{2, 1});

    // Galois flags: best friend is the first subfield
    FieldCtx f38 = build_field(3, 8);
    BestFriend bg = best_friend(galois_2_4_on_f38(f38));
    CHECK(bg.m == 2);
    CHECK(bg.per_level == std::vector<std::size_t>{2, 4});

    // full flags: the ground field
    Flag full = new_flag({Subspace::from_generators(f16, {f16.one()}),
                          Subspace::from_generators(f16, {f16.one(), f16.alpha()}),
                          Subspace::from_generators(f16, {f16.one(), f16.alpha(), f16.from_exponent(2)})});
    CHECK(best_friend(full).m == 1);
}

TEST_CASE("cardinality formula") {
    FieldCtx ctx = build_field(2, 16);
    Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4), Subspace::subfield(ctx, 8)});
    CHECK(cardinality_formula(ctx, 2, SubgroupSpec::from_exponent(ctx, 5)) == 4369);
    CHECK(cardinality_formula(ctx, 2, SubgroupSpec::from_exponent(ctx, 17)) == 1285);
    CHECK(cardinality_formula(ctx, 2, SubgroupSpec::from_exponent(ctx, 65535)) == 1);
    CHECK(cardinality_formula(f, SubgroupSpec::from_exponent(ctx, 5)) == 4369);
}

TEST_CASE("min distance against table rows") {
    FieldCtx ctx = build_field(2, 16);
    Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4), Subspace::subfield(ctx, 8)});
    CHECK(min_distance(orbit(f, SubgroupSpec::from_exponent(ctx, 85))) == 28);
    OrbitCode full = orbit(f, SubgroupSpec::from_exponent(ctx, 1));
    CHECK(min_distance(full) == 4);
    CHECK(min_distance(full, 4) == 4);  // independent of the thread count
}

TEST_CASE("projected codes") {
    FieldCtx ctx = build_field(2, 16);
    Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4), Subspace::subfield(ctx, 8)});
    OrbitCode code = orbit(f, SubgroupSpec::full(ctx));
    CHECK(projected(code, 1).size() == 21845);
    CHECK(projected(code, 3).size() == 257);
    CHECK_THROWS_MATCHES(projected(code, 4), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::IndexOutOfRange;
                         }));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(code.size() % projected(code, i).size() == 0);

    OrbitCode one = orbit(f, SubgroupSpec::from_exponent(ctx, 21845));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(projected(one, i).size() == 1);
}

TEST_CASE("disjointness") {
    FieldCtx ctx = build_field(2, 16);
    Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4), Subspace::subfield(ctx, 8)});
    CHECK(is_disjoint(orbit(f, SubgroupSpec::from_exponent(ctx, 85))));
    CHECK_FALSE(is_disjoint(orbit(f, SubgroupSpec::from_exponent(ctx, 1))));

    FieldCtx f38 = build_field(3, 8);
    Flag single = new_flag({Subspace::subfield(f38, 2)});
    CHECK(is_disjoint(orbit(single, SubgroupSpec::full(f38))));
}

TEST_CASE("partial spread classification") {
    FieldCtx f28 = build_field(2, 8);
    Flag f = new_flag({Subspace::subfield(f28, 4)});
    OrbitCode code = orbit(f, SubgroupSpec::full(f28));
    std::vector<Subspace> members = projected(code, 1);
    REQUIRE(members.size() == 17);  // 255/15
    CHECK(is_partial_spread(members) == SpreadVerdict::spread);

    std::vector<Subspace> single{members[0]};
    CHECK(is_partial_spread(single) == SpreadVerdict::partial_spread);

    std::vector<Subspace> mixed{members[0],
                                sum(members[0], Subspace::from_generators(f28, {members[1].row_elem(0)}))};
    CHECK_THROWS_MATCHES(is_partial_spread(mixed), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::MixedDimensions;
                         }));

    Subspace u = Subspace::from_generators(f28, {f28.one(), f28.alpha(), f28.from_exponent(2), f28.from_exponent(3)});
    Subspace v = Subspace::from_generators(f28, {f28.one(), f28.alpha(), f28.from_exponent(2), f28.from_exponent(4)});
    REQUIRE(u != v);
    std::vector<Subspace> overlapping{u, v};
    CHECK(is_partial_spread(overlapping) == SpreadVerdict::neither);
}

TEST_CASE("decompose over friend") {
    FieldCtx f28 = build_field(2, 8);
    Flag f = new_flag({Subspace::subfield(f28, 2), Subspace::subfield(f28, 4)});
    auto picks = decompose_over_friend(f, 2);
    REQUIRE(picks.size() == 2);  // s_r = 4/2
    CHECK(picks[0] == f28.one());
    CHECK_FALSE(Subspace::subfield(f28, 2).contains(picks[1]));
    // direct-sum oracle: partial spans have the right sizes and rebuild the levels
    Subspace fm = Subspace::subfield(f28, 2);
    Subspace w = scale(fm, picks[0]);
    CHECK(w == f.level(0));
    Subspace w2 = sum(w, scale(fm, picks[1]));
    CHECK(w2 == f.level(1));

    // r = 1, F_1 = F_{p^m}
    Flag single = new_flag({Subspace::subfield(f28, 4)});
    auto p1 = decompose_over_friend(single, 4);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == f28.one());

    // m = 1 degenerates to a basis completion
    auto pb = decompose_over_friend(f, 1);
    CHECK(pb.size() == 4);

    // not a friend
    FieldCtx f16 = build_field(2, 4);
    Flag odd = new_flag({Subspace::from_generators(f16, {f16.one()}),
                         Subspace::from_generators(f16, {f16.one(), f16.alpha(), f16.from_exponent(6)})});
    CHECK_THROWS_MATCHES(decompose_over_friend(odd, 2), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotAFriend; }));
}

TEST_CASE("cardinality formula over every subgroup") {
    // closed form vs enumeration across the whole divisor lattice
    {
        FieldCtx ctx = build_field(2, 12);
        Rng rng(0xC12);
        Flag f = ffsupport::random_flag(ctx, rng);
        for (std::uint64_t l : divisors_u64(ctx.order_star())) {
            SubgroupSpec sub = SubgroupSpec::from_exponent(ctx, l);
            CHECK(cardinality_formula(f, sub) == orbit(f, sub).size());
        }
    }
    {
        FieldCtx ctx = build_field(3, 8);
        Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4)});
        for (std::uint64_t l : divisors_u64(ctx.order_star())) {
            SubgroupSpec sub = SubgroupSpec::from_exponent(ctx, l);
            CHECK(cardinality_formula(ctx, 2, sub) == orbit(f, sub).size());
        }
    }
}

TEST_CASE("subgroup spec") {
    FieldCtx ctx = build_field(2, 12);
    CHECK_THROWS_MATCHES(SubgroupSpec::from_exponent(ctx, 2), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotADivisor; }));
    SubgroupSpec s = SubgroupSpec::from_element(ctx, ctx.from_exponent(9));
    CHECK(s.l == 9);
    CHECK(s.order == 455);
    SubgroupSpec t = SubgroupSpec::from_element(ctx, ctx.one());
    CHECK(t.order == 1);
    SubgroupSpec u = SubgroupSpec::from_element(ctx, ctx.from_exponent(10));  // gcd(10, 4095) = 5
    CHECK(u.l == 5);
}
