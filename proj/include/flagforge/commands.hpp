#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/flagspec.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/odfc.hpp"
#include "flagforge/oracle.hpp"
#include "flagforge/report.hpp"

namespace flagforge {

// Envelope builders behind the CLI subcommands. Pure: same arguments, same
// envelope, byte-identical rendering.

inline std::string beta_label(std::uint64_t l, std::uint64_t order_star) {
    if (l % order_star == 0) return "1";
    if (l == 1) return "a";
    return "a^" + std::to_string(l);
}

inline ReportEnvelope cmd_field_envelope(std::uint64_t p, std::size_t n, std::optional<std::vector<Coeff>> poly,
                                         std::uint64_t cap = env_table_cap()) {
    FieldCtx ctx = build_field(p, n, std::move(poly), cap);
    ReportEnvelope env;
    env.command = "field";
    env.parameters["p"] = p;
    env.parameters["n"] = n;
    env.parameters["order_star"] = ctx.order_star();
    env.set_default_provenance(ctx.modulus_string());
    for (const auto& [m, c] : ctx.subfield_lattice()) {
        Json row;
        row["m"] = m;
        row["subfield_order"] = ipow_capped(p, static_cast<unsigned>(m), ctx.size()) - 1;
        row["generator_exponent"] = c;
        env.rows.push_back(std::move(row));
    }
    return env;
}

inline ReportEnvelope cmd_orbit_envelope(const LoadedFlag& loaded, std::uint64_t l, unsigned threads = 1) {
    const FieldCtx& ctx = *loaded.ctx;
    const Flag& f = loaded.flag;
    SubgroupSpec sub = SubgroupSpec::from_exponent(ctx, l);
    OrbitCode code = orbit(f, sub);
    BestFriend bf = best_friend(f);

    ReportEnvelope env;
    env.command = "orbit";
    env.parameters["p"] = ctx.p();
    env.parameters["n"] = ctx.n();
    env.parameters["type"] = f.type();
    env.set_default_provenance(ctx.modulus_string());

    Json row;
    row["l"] = sub.l;
    row["beta_order"] = sub.order;
    row["orbit_size"] = code.size();
    row["stab_orders"] = code.stab_orders_per_level();
    Json proj_sizes = Json::array();
    for (std::uint64_t period : code.level_periods()) proj_sizes.push_back(period);
    row["projected_sizes"] = proj_sizes;
    row["best_friend_m"] = bf.m;
    row["min_distance"] = min_distance(code, threads);
    row["disjoint"] = is_disjoint(code);
    env.rows.push_back(std::move(row));
    return env;
}

inline ReportEnvelope cmd_galois_table_envelope(std::uint64_t p, std::size_t n, std::vector<std::size_t> type,
                                                std::uint64_t cap = env_table_cap()) {
    FieldCtx ctx = build_field(p, n, std::nullopt, cap);  // validates p, n and pins the modulus provenance
    GaloisType g = make_galois_type(p, n, std::move(type));
    ReportEnvelope env;
    env.command = "galois-table";
    env.parameters["p"] = p;
    env.parameters["n"] = n;
    env.parameters["type"] = g.type;
    env.set_default_provenance(ctx.modulus_string());
    for (const GaloisRow& r : galois_table(g)) {
        Json row;
        row["beta"] = beta_label(r.l, ctx.order_star());
        row["beta_exponent"] = r.l;
        row["beta_order"] = r.beta_order;
        for (std::size_t i = 0; i < r.stab_orders.size(); ++i)
            row["stab_t" + std::to_string(i + 1)] = r.stab_orders[i];
        row["orbit_size"] = r.orbit_size;
        row["distance"] = r.distance;
        env.rows.push_back(std::move(row));
    }
    return env;
}

inline ReportEnvelope cmd_odfc_scan_envelope(std::uint64_t p, std::size_t n, std::size_t m,
                                             std::uint64_t cap = env_table_cap()) {
    FieldCtx ctx = build_field(p, n, std::nullopt, cap);
    ReportEnvelope env;
    env.command = "odfc-scan";
    env.parameters["p"] = p;
    env.parameters["n"] = n;
    env.parameters["m"] = m;
    env.set_default_provenance(ctx.modulus_string());
    for (const OdfcScanRow& r : odfc_scan(p, n, m)) {
        Json row;
        row["beta"] = beta_label(r.l, ctx.order_star());
        row["beta_exponent"] = r.l;
        row["beta_order"] = r.beta_order;
        row["intersection_order"] = r.intersection_order;
        row["orbit_size"] = r.orbit_size;
        std::string dims;
        for (std::size_t i = 0; i < r.allowed_dims.size(); ++i) {
            if (i) dims += ", ";
            dims += std::to_string(r.allowed_dims[i]);
        }
        row["allowed_dims"] = dims;
        row["max_distance"] = r.max_distance;
        env.rows.push_back(std::move(row));
    }
    return env;
}

// ---------------------------------------------------------------------------
// verify: fast paths against brute-force oracles, reported one JSON line each.

namespace verify_detail {

inline std::string u64s(std::uint64_t v) { return std::to_string(v); }

inline void check_flag_quantities(std::vector<OracleReport>& out, const std::string& tag, const Flag& f,
                                  const SubgroupSpec& sub, std::uint64_t pair_cap, unsigned threads) {
    OrbitCode code = orbit(f, sub);

    BestFriend bf = best_friend(f);
    std::size_t bfo = best_friend_oracle(f);
    out.push_back(make_report(tag + ".best_friend_m", u64s(bf.m), u64s(bfo), true,
                              "stabilizer route vs closure scan"));

    out.push_back(make_report(tag + ".cardinality", u64s(cardinality_formula(f.ctx(), bf.m, sub)),
                              u64s(code.size()), true, "closed form vs enumerated orbit"));

    std::uint64_t stab_fast = stabilizer(f, sub).order;
    std::uint64_t stab_brute = stabilizer_oracle(f, sub);
    out.push_back(make_report(tag + ".stabilizer_order", u64s(stab_fast), u64s(stab_brute), true,
                              "period route vs definition scan"));

    std::uint64_t fast_min = min_distance(code, threads);
    MinDistanceOracleResult od = min_distance_oracle(code, pair_cap, threads);
    if (od.exhaustive) {
        out.push_back(make_report(tag + ".min_distance", u64s(fast_min), u64s(od.value), true,
                                  "generator-anchored vs full pairwise"));
    } else {
        // A sampled pairwise minimum can only sit at or above the true value.
        bool consistent = od.value >= fast_min;
        out.push_back(make_report(tag + ".min_distance_sampled_at_least_fast", consistent ? "true" : "false",
                                  "true", false,
                                  "sampled min " + u64s(od.value) + " vs fast " + u64s(fast_min)));
    }

    // disjoint <=> every projected code is as large as the orbit
    bool dj = is_disjoint(code);
    bool dj_oracle = true;
    for (std::size_t i = 1; i <= code.length(); ++i) {
        std::vector<Subspace> proj = projected(code, i);
        std::sort(proj.begin(), proj.end());
        if (std::adjacent_find(proj.begin(), proj.end()) != proj.end())
            throw Error(Errc::InternalCheckFailed, "projected code has duplicates");
        if (proj.size() != code.size()) dj_oracle = false;
    }
    out.push_back(make_report(tag + ".disjoint", dj ? "true" : "false", dj_oracle ? "true" : "false", true,
                              "stabilizer equality vs projected sizes"));
}

}  // namespace verify_detail

/// The worked-example corpus.
inline std::vector<OracleReport> verify_examples(std::uint64_t pair_cap = kDefaultPairEvalCap, unsigned threads = 1) {
    using verify_detail::u64s;
    std::vector<OracleReport> out;

    {  // (F_{3^2}, F_{3^4}) on F_{3^8}
        FieldCtx ctx = build_field(3, 8);
        Flag f = new_flag({Subspace::subfield(ctx, 2), Subspace::subfield(ctx, 4)});
        verify_detail::check_flag_quantities(out, "f3_8.galois_2_4.full", f, SubgroupSpec::full(ctx), pair_cap,
                                             threads);
        SubgroupSpec sub5 = SubgroupSpec::from_exponent(ctx, 1312);  // |beta| = 5
        verify_detail::check_flag_quantities(out, "f3_8.galois_2_4.l1312", f, sub5, pair_cap, threads);
        out.push_back(make_report("f3_8.galois_2_4.l1312.stab_subfield",
                                  u64s(stabilizer_subfield(f, sub5)), u64s(1), true, ""));
    }
    {  // type (1,4) flag (F_2, F_4 + F_4 a) on F_{2^6}
        FieldCtx ctx = build_field(2, 6);
        Subspace f4 = Subspace::subfield(ctx, 2);
        Subspace level2 = sum(f4, scale(f4, ctx.alpha()));
        Flag f = new_flag({Subspace::from_generators(ctx, {ctx.one()}), level2});
        verify_detail::check_flag_quantities(out, "f2_6.type_1_4.full", f, SubgroupSpec::full(ctx), pair_cap,
                                             threads);
        SubgroupSpec delta = SubgroupSpec::from_exponent(ctx, 9);  // <delta> = F_{2^3}^*
        verify_detail::check_flag_quantities(out, "f2_6.type_1_4.l9", f, delta, pair_cap, threads);
        SubgroupSpec gamma = SubgroupSpec::from_exponent(ctx, 21);  // <gamma> = F_{2^2}^*
        verify_detail::check_flag_quantities(out, "f2_6.type_1_4.l21", f, gamma, pair_cap, threads);
    }
    return out;
}

/// The three table configurations, re-derived against enumeration.
inline std::vector<OracleReport> verify_tables(std::uint64_t pair_cap = kDefaultPairEvalCap, unsigned threads = 1) {
    using verify_detail::u64s;
    std::vector<OracleReport> out;

    {  // Galois (2,4,8) on F_{2^16}: closed-form rows vs enumerated orbits
        FieldCtx ctx = build_field(2, 16);
        GaloisType g = make_galois_type(2, 16, {2, 4, 8});
        Flag f = galois_flag(ctx, g);
        for (const GaloisRow& row : galois_table(g)) {
            OrbitCode code = orbit(f, SubgroupSpec::from_exponent(ctx, row.l));
            std::string tag = "table1.l" + u64s(row.l);
            out.push_back(make_report(tag + ".orbit_size", u64s(row.orbit_size), u64s(code.size()), true, ""));
            out.push_back(
                make_report(tag + ".distance", u64s(row.distance), u64s(min_distance(code, threads)), true, ""));
            for (std::size_t i = 0; i < row.stab_orders.size(); ++i) {
                out.push_back(make_report(tag + ".stab_t" + std::to_string(i + 1), u64s(row.stab_orders[i]),
                                          u64s(code.stab_orders_per_level()[i]), true, ""));
            }
            // full pairwise scan wherever it fits under the evaluation cap
            std::uint64_t evals = code.size() * (code.size() - 1) / 2 * code.length();
            if (code.size() > 1 && evals <= pair_cap && code.size() <= 2000) {
                MinDistanceOracleResult od = min_distance_oracle(code, pair_cap, threads);
                out.push_back(make_report(tag + ".distance_pairwise", u64s(row.distance), u64s(od.value),
                                          od.exhaustive, "closed form vs full pairwise scan"));
            }
        }
    }
    auto scan_config = [&](const char* tag, std::uint64_t p, std::size_t n, std::size_t m, const Flag& f,
                           const FieldCtx& ctx) {
        // the flag is chosen with best friend F_{p^m}; every scan row's orbit
        // size and intersection order must match enumeration
        out.push_back(
            make_report(std::string(tag) + ".best_friend_m", u64s(best_friend(f).m), u64s(m), true, ""));
        for (const OdfcScanRow& row : odfc_scan(p, n, m)) {
            SubgroupSpec sub = SubgroupSpec::from_exponent(ctx, row.l);
            OrbitPeriods per = orbit_periods(f, sub);
            std::string rtag = std::string(tag) + ".l" + u64s(row.l);
            out.push_back(make_report(rtag + ".orbit_size", u64s(row.orbit_size), u64s(per.flag_period), true, ""));
            // |<beta> cap F_{p^m}^*| by scanning exponents
            std::uint64_t c = ctx.subfield_exponent(m);
            std::uint64_t count = 0;
            for (std::uint64_t j = 0; j < sub.order; ++j) {
                if ((j * sub.l) % c == 0) ++count;
            }
            out.push_back(make_report(rtag + ".intersection_order", u64s(row.intersection_order), u64s(count), true,
                                      ""));
        }
    };
    {  // Table 2 configuration: q=3, n=8, m=1
        FieldCtx ctx = build_field(3, 8);
        Flag f = new_flag({Subspace::from_generators(ctx, {ctx.one()}),
                           Subspace::from_generators(ctx, {ctx.one(), ctx.alpha()})});
        scan_config("table2", 3, 8, 1, f, ctx);
    }
    {  // Table 3 configuration: q=2, n=12, m=2
        FieldCtx ctx = build_field(2, 12);
        Subspace f4 = Subspace::subfield(ctx, 2);
        Flag f = new_flag({f4, sum(f4, scale(f4, ctx.alpha()))});
        scan_config("table3", 2, 12, 2, f, ctx);
    }
    return out;
}

/// Load a flag-spec file and run every oracle against the fast paths.
inline std::vector<OracleReport> verify_flagspec(const FlagSpecDocument& doc,
                                                 std::uint64_t pair_cap = kDefaultPairEvalCap, unsigned threads = 1,
                                                 std::uint64_t table_cap = env_table_cap()) {
    LoadedFlag loaded = realize_flagspec(doc, table_cap);
    std::vector<OracleReport> out;
    SubgroupSpec sub = SubgroupSpec::from_exponent(*loaded.ctx, loaded.subgroup_l.value_or(1));
    verify_detail::check_flag_quantities(out, "flagspec", loaded.flag, sub, pair_cap, threads);
    return out;
}

/// Deliberately corrupt a fast value and demand that the oracle catches it.
/// A report with agree=true here means the oracle layer is broken.
inline std::vector<OracleReport> verify_selftest() {
    using verify_detail::u64s;
    std::vector<OracleReport> out;
    FieldCtx ctx = build_field(2, 8);
    GaloisType g = make_galois_type(2, 8, {2, 4});
    Flag f = galois_flag(ctx, g);
    std::size_t fast = best_friend(f).m + 2;  // injected fault
    std::size_t oracle = best_friend_oracle(f);
    out.push_back(make_report("selftest.corrupted_best_friend", u64s(fast), u64s(oracle), true,
                              "injected fault: fast path deliberately off by +2"));
    return out;
}

}  // namespace flagforge
