#include <catch2/catch_amalgamated.hpp>

#include "flagforge/commands.hpp"
#include "test_support.hpp"

using namespace flagforge;
using ffsupport::Rng;

TEST_CASE("best friend closure oracle") {
    FieldCtx f216 = build_field(2, 16);
    Flag galois = new_flag(
        {Subspace::subfield(f216, 2), Subspace::subfield(f216, 4), Subspace::subfield(f216, 8)});
    CHECK(best_friend_oracle(galois) == 2);

    FieldCtx f16 = build_field(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    Flag mixed = new_flag({f4, sum(f4, Subspace::from_generators(f16, {f16.alpha()}))});
    CHECK(best_friend_oracle(mixed) == 1);

    // necessity: m divides gcd(type entries and n)
    FieldCtx ctx = build_field(2, 6);
    Rng rng(17);
    for (int it = 0; it < 30; ++it) {
        Flag f = ffsupport::random_flag(ctx, rng);
        std::size_t m = best_friend_oracle(f);
        std::uint64_t g = ctx.n();
        for (std::size_t t : f.type()) g = std::gcd(g, static_cast<std::uint64_t>(t));
        CHECK(g % m == 0);
    }
}

TEST_CASE("pairwise minimum distance oracle") {
    FieldCtx f38 = build_field(3, 8);
    Flag f = new_flag({Subspace::subfield(f38, 2), Subspace::subfield(f38, 4)});
    OrbitCode code = orbit(f, SubgroupSpec::full(f38));
    MinDistanceOracleResult res = min_distance_oracle(code);
    CHECK(res.exhaustive);
    CHECK(res.value == 4);
    CHECK(res.value == min_distance(code));

    FieldCtx f26 = build_field(2, 6);
    Subspace f4 = Subspace::subfield(f26, 2);
    Flag g = new_flag({Subspace::from_generators(f26, {f26.one()}), sum(f4, scale(f4, f26.alpha()))});
    OrbitCode full = orbit(g, SubgroupSpec::full(f26));
    CHECK(min_distance_oracle(full).value == 2);
    OrbitCode delta = orbit(g, SubgroupSpec::from_exponent(f26, 9));
    CHECK(delta.size() == 7);
    CHECK(min_distance_oracle(delta).value == 6);
    CHECK(min_distance(delta) == 6);

    // the F_4^* subcode keeps the full-group distance: q + 1 flags, d = 2
    OrbitCode gamma = orbit(g, SubgroupSpec::from_exponent(f26, 21));
    CHECK(gamma.size() == 3);
    CHECK(min_distance(gamma) == 2);
    CHECK(min_distance_oracle(gamma).value == 2);

    // sampled mode engages beyond the cap and can only overestimate
    MinDistanceOracleResult sampled = min_distance_oracle(code, 1000);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.value >= 4);
}

TEST_CASE("stabilizer oracle") {
    FieldCtx f38 = build_field(3, 8);
    Flag f = new_flag({Subspace::subfield(f38, 2), Subspace::subfield(f38, 4)});
    CHECK(stabilizer_oracle(f, SubgroupSpec::from_exponent(f38, 1312)) == 1);
    CHECK(stabilizer_oracle(f, SubgroupSpec::from_exponent(f38, f38.order_star())) == 1);
    CHECK(stabilizer_oracle(f, SubgroupSpec::full(f38)) == 8);
    CHECK(stabilizer(f, SubgroupSpec::full(f38)).order == 8);

    FieldCtx f216 = build_field(2, 16);
    Flag galois = new_flag(
        {Subspace::subfield(f216, 2), Subspace::subfield(f216, 4), Subspace::subfield(f216, 8)});
    CHECK(stabilizer_oracle(galois, SubgroupSpec::full(f216)) == 3);
}

TEST_CASE("spread oracle") {
    FieldCtx f28 = build_field(2, 8);
    Flag f = new_flag({Subspace::subfield(f28, 4)});
    std::vector<Subspace> members = projected(orbit(f, SubgroupSpec::full(f28)), 1);
    REQUIRE(members.size() == 17);
    CHECK(spread_oracle(members) == SpreadVerdict::spread);
    CHECK(is_partial_spread(members) == SpreadVerdict::spread);  // dual route agreement

    std::vector<Subspace> partial(members.begin(), members.begin() + 5);
    CHECK(spread_oracle(partial) == SpreadVerdict::partial_spread);

    std::vector<Subspace> dup{members[0], members[0]};
    CHECK(spread_oracle(dup) == SpreadVerdict::neither);

    // projected level 1 of the Galois (2,4) code on F_{3^8} partitions the field
    FieldCtx f38 = build_field(3, 8);
    Flag g = new_flag({Subspace::subfield(f38, 2), Subspace::subfield(f38, 4)});
    std::vector<Subspace> level1 = projected(orbit(g, SubgroupSpec::full(f38)), 1);
    REQUIRE(level1.size() == 820);
    CHECK(spread_oracle(level1) == SpreadVerdict::spread);
}

TEST_CASE("corrupted fast path is caught") {
    std::vector<OracleReport> reports = verify_selftest();
    REQUIRE_FALSE(reports.empty());
    for (const OracleReport& r : reports) {
        CHECK_FALSE(r.agree);
        CHECK_FALSE(r.witness.empty());
    }
}

TEST_CASE("worked example corpus all agree") {
    for (const OracleReport& r : verify_examples()) {
        INFO(r.quantity << ": fast=" << r.fast_value << " oracle=" << r.oracle_value);
        CHECK(r.agree);
    }
}
