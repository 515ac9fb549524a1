#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/orbit.hpp"

namespace flagforge {

// Brute-force second opinions. These deliberately avoid the fast paths'
// shortcuts: no orbit periods, no stabilizer identities, no closed forms.
// They share only field and subspace arithmetic with the code under test.

inline constexpr std::uint64_t kDefaultPairEvalCap = 100'000'000;  // subspace-distance evaluations
inline constexpr std::uint64_t kOracleSampleSeed = 0xF1A6;

struct OracleReport {
    std::string quantity;
    std::string fast_value;
    std::string oracle_value;
    bool agree = false;
    bool exhaustive = true;
    std::string witness;  // counterexample data when agree is false
};

inline OracleReport make_report(std::string quantity, std::string fast, std::string oracle, bool exhaustive = true,
                                std::string witness_on_disagree = "") {
    OracleReport r;
    r.quantity = std::move(quantity);
    r.fast_value = std::move(fast);
    r.oracle_value = std::move(oracle);
    r.agree = r.fast_value == r.oracle_value;
    r.exhaustive = exhaustive;
    if (!r.agree) r.witness = std::move(witness_on_disagree);
    return r;
}

/// Largest divisor m of n such that multiplication by the F_{p^m}-generator
/// maps every basis vector of every level back into its level. Pure closure
/// scan; no stabilizer logic.
inline std::size_t best_friend_oracle(const Flag& f) {
    const FieldCtx& ctx = f.ctx();
    std::vector<std::uint64_t> divs = divisors_u64(ctx.n());
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        std::size_t m = static_cast<std::size_t>(*it);
        FieldElem g = ctx.subfield_generator(m);
        bool closed = true;
        for (const Subspace& s : f.subspaces()) {
            for (std::size_t i = 0; i < s.dim() && closed; ++i) {
                if (!s.contains(ctx.mul(s.row_elem(i), g))) closed = false;
            }
            if (!closed) break;
        }
        if (closed) return m;
    }
    return 1;  // m = 1 always closes
}

struct MinDistanceOracleResult {
    std::uint64_t value = 0;
    bool exhaustive = true;
    std::uint64_t pairs_scanned = 0;
};

/// Minimum over all unordered pairs of distinct codewords, straight from the
/// definition. Falls back to fixed-seed sampling past the evaluation cap and
/// says so in the result.
inline MinDistanceOracleResult min_distance_oracle(const OrbitCode& code,
                                                   std::uint64_t pair_eval_cap = kDefaultPairEvalCap,
                                                   unsigned threads = 1) {
    MinDistanceOracleResult res;
    const std::vector<Flag>& flags = code.flags();
    const std::uint64_t n = flags.size();
    if (n <= 1) {
        res.value = 0;
        return res;
    }
    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t evals = pairs * code.length();
    if (evals <= pair_eval_cap) {
        res.exhaustive = true;
        res.pairs_scanned = pairs;
        res.value = detail::parallel_min(0, n - 1, threads, [&](std::size_t i) {
            std::uint64_t best = UINT64_MAX;
            for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, flag_distance(flags[i], flags[j]));
            return best;
        });
        return res;
    }
    std::uint64_t samples = pair_eval_cap / code.length() / 16;
    if (samples < 1) samples = 1;
    std::mt19937_64 rng(kOracleSampleSeed);
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t i = rng() % n;
        std::uint64_t j = rng() % (n - 1);
        if (j >= i) ++j;
        best = std::min(best, flag_distance(flags[i], flags[j]));
    }
    res.exhaustive = false;
    res.pairs_scanned = samples;
    res.value = best;
    return res;
}

/// |Stab_beta(F)| by counting the j in [0, |beta|) with F beta^j = F,
/// flag equality checked directly.
inline std::uint64_t stabilizer_oracle(const Flag& f, const SubgroupSpec& sub) {
    const FieldCtx& ctx = f.ctx();
    const FieldElem beta = sub.generator(ctx);
    std::uint64_t count = 1;  // j = 0
    Flag cur = scale_flag(f, beta);
    for (std::uint64_t j = 1; j < sub.order; ++j) {
        if (cur == f) ++count;
        cur = scale_flag(cur, beta);
    }
    return count;
}

/// True iff the nonzero elements of `within` are covered exactly once by the
/// listed subspaces (all of which must lie inside `within`).
inline bool covers_exactly_once(const std::vector<Subspace>& members, const Subspace& within,
                                std::uint64_t enum_cap = kDefaultEnumCap) {
    const FieldCtx& ctx = within.ctx();
    std::vector<std::uint32_t> hits(ctx.size(), 0);
    for (const Subspace& s : members) {
        for (FieldElem e : enumerate_elements(s, enum_cap)) {
            if (e.is_zero()) continue;
            ++hits[ctx.packed_coords(e)];
        }
    }
    for (FieldElem e : enumerate_elements(within, enum_cap)) {
        if (e.is_zero()) continue;
        if (hits[ctx.packed_coords(e)] != 1) return false;
        hits[ctx.packed_coords(e)] = 0;  // consumed
    }
    // anything left uncovered or outside `within`?
    for (std::uint32_t h : hits)
        if (h != 0) return false;
    return true;
}

/// Spread verdict by element counting: every nonzero field element must be
/// covered at most once (partial spread), exactly once (spread).
inline SpreadVerdict spread_oracle(const std::vector<Subspace>& subs, std::uint64_t enum_cap = kDefaultEnumCap) {
    if (subs.empty()) throw Error(Errc::InvalidArgument, "empty subspace list");
    const FieldCtx& ctx = subs.front().ctx();
    const std::size_t k = subs.front().dim();
    for (const Subspace& s : subs)
        if (s.dim() != k) throw Error(Errc::MixedDimensions, "subspaces have mixed dimensions");
    std::vector<std::uint32_t> hits(ctx.size(), 0);
    for (const Subspace& s : subs) {
        for (FieldElem e : enumerate_elements(s, enum_cap)) {
            if (e.is_zero()) continue;
            if (++hits[ctx.packed_coords(e)] > 1) return SpreadVerdict::neither;
        }
    }
    for (std::uint64_t v = 1; v < ctx.size(); ++v) {
        if (hits[v] == 0) return SpreadVerdict::partial_spread;
    }
    return SpreadVerdict::spread;
}

}  // namespace flagforge
