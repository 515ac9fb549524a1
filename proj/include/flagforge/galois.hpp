#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/oracle.hpp"
#include "flagforge/orbit.hpp"

namespace flagforge {

/// A tower type (t_1, ..., t_r): divisors of n with t_i | t_{i+1} and t_r < n,
/// together with c_i = (p^n-1)/(p^{t_i}-1).
struct GaloisType {
    std::uint64_t p = 2;
    std::size_t n = 1;
    std::vector<std::size_t> type;
    std::vector<std::uint64_t> c;

    std::uint64_t order_star() const {
        std::uint64_t q = ipow_capped(p, static_cast<unsigned>(n), UINT64_MAX);
        return q - 1;
    }
};

inline GaloisType make_galois_type(std::uint64_t p, std::size_t n, std::vector<std::size_t> type) {
    if (type.empty()) throw Error(Errc::NotDivisorChain, "empty type vector");
    for (std::size_t i = 0; i + 1 < type.size(); ++i) {
        if (type[i] == 0 || type[i + 1] % type[i] != 0 || type[i] >= type[i + 1])
            throw Error(Errc::NotDivisorChain, "type entries must form a strictly increasing divisor chain");
    }
    if (type.back() == 0 || type.back() >= n || n % type.back() != 0)
        throw Error(Errc::NotDivisorChain, "type entries must be proper divisors of n");
    GaloisType g;
    g.p = p;
    g.n = n;
    g.type = std::move(type);
    std::uint64_t q = ipow_capped(p, static_cast<unsigned>(n), UINT64_MAX);
    if (q == 0) throw Error(Errc::TableCapExceeded, "p^n overflows");
    for (std::size_t t : g.type) {
        std::uint64_t pt = ipow_capped(p, static_cast<unsigned>(t), UINT64_MAX);
        g.c.push_back((q - 1) / (pt - 1));
    }
    return g;
}

/// The Galois flag (F_{p^{t_1}}, ..., F_{p^{t_r}}).
inline Flag galois_flag(const FieldCtx& ctx, const GaloisType& g) {
    if (g.p != ctx.p() || g.n != ctx.n()) throw Error(Errc::CtxMismatch, "type was built for a different field");
    std::vector<Subspace> subs;
    subs.reserve(g.type.size());
    for (std::size_t t : g.type) subs.push_back(Subspace::subfield(ctx, t));
    return Flag::make(std::move(subs));
}

/// Exact minimum distance of the Galois beta-cyclic code for <beta>=<alpha^l>,
/// from the exponents l_i = lcm(l, c_i) alone:
///   0                      if l_1 = l_r = l,
///   2(t_1 + ... + t_r)     if l_1 = l_r != l,
///   2(t_1 + ... + t_{j-1}) for the least j with l_j != l_1 otherwise.
inline std::uint64_t galois_distance(const GaloisType& g, std::uint64_t l) {
    const std::uint64_t N = g.order_star();
    if (l == 0 || N % l != 0) throw Error(Errc::NotADivisor, "l must divide p^n - 1");
    const std::size_t r = g.type.size();
    std::uint64_t l1 = std::lcm(l, g.c.front());
    std::uint64_t lr = std::lcm(l, g.c.back());
    if (l1 == lr) {
        if (l1 == l) return 0;
        std::uint64_t total = 0;
        for (std::size_t t : g.type) total += t;
        return 2 * total;
    }
    std::uint64_t partial = g.type[0];
    for (std::size_t j = 1; j < r; ++j) {
        if (std::lcm(l, g.c[j]) != l1) return 2 * partial;
        partial += g.type[j];
    }
    throw Error(Errc::InternalCheckFailed, "unreachable: l_1 != l_r but all l_j equal l_1");
}

struct GaloisRow {
    std::uint64_t l = 1;
    std::uint64_t beta_order = 0;
    std::vector<std::uint64_t> stab_orders;  // |Stab_beta(F_{p^{t_i}})| = (p^n-1)/lcm(l, c_i)
    std::uint64_t orbit_size = 0;            // lcm(l, c_1)/l
    std::uint64_t distance = 0;
};

/// One row per subgroup of F_{p^n}^* (i.e. per divisor l of p^n - 1),
/// ordered by decreasing |beta|. Closed form throughout.
inline std::vector<GaloisRow> galois_table(const GaloisType& g) {
    const std::uint64_t N = g.order_star();
    std::vector<GaloisRow> rows;
    for (std::uint64_t l : divisors_u64(N)) {
        GaloisRow row;
        row.l = l;
        row.beta_order = N / l;
        for (std::uint64_t ci : g.c) row.stab_orders.push_back(N / std::lcm(l, ci));
        row.orbit_size = std::lcm(l, g.c.front()) / l;
        row.distance = galois_distance(g, l);
        rows.push_back(std::move(row));
    }
    return rows;  // divisors ascend, so |beta| descends
}

/// Verdict of the nested-spread structure checks for levels i < j.
struct SpreadStructureReport {
    bool projected_is_spread = false;      // projected code i partitions F_{p^n}
    std::uint64_t projected_size = 0;      // c_i
    bool coset_orbits_are_spreads = false; // Orb_{alpha_j}(F_{p^{t_i}} alpha^l) partitions F_{p^{t_j}} alpha^l
    std::uint64_t coset_orbit_size = 0;    // (p^{t_j}-1)/(p^{t_i}-1)
    std::uint64_t cosets_checked = 0;
    bool union_recovers_projected = false; // exhaustive mode only
    bool exhaustive = false;

    bool ok() const {
        return projected_is_spread && coset_orbits_are_spreads && (!exhaustive || union_recovers_projected);
    }
};

/// Structure checks for a Galois tower: (a) the i-th projected code of the
/// full-group code is a t_i-spread of the field; (b) the alpha_j-orbit of
/// F_{p^{t_i}} alpha^l is a t_i-spread of F_{p^{t_j}} alpha^l, for the sampled
/// coset (or all cosets, exhaustively); (c) exhaustively, those orbits
/// disjointly reassemble the projected code.
inline SpreadStructureReport spread_structure_check(const FieldCtx& ctx, const GaloisType& g, std::size_t i,
                                                    std::size_t j,
                                                    std::optional<std::uint64_t> l_sample = std::nullopt) {
    if (i == 0 || j <= i || j > g.type.size()) throw Error(Errc::IndexOutOfRange, "need levels 1 <= i < j <= r");
    const std::size_t ti = g.type[i - 1], tj = g.type[j - 1];
    const std::uint64_t ci = g.c[i - 1], cj = g.c[j - 1];

    SpreadStructureReport rep;
    rep.exhaustive = !l_sample.has_value();

    // (a) projected code i of the full-group code: { F_{p^{t_i}} alpha^v }.
    const Subspace base_i = Subspace::subfield(ctx, ti);
    std::vector<Subspace> proj;
    proj.reserve(ci);
    for (std::uint64_t v = 0; v < ci; ++v) proj.push_back(scale(base_i, ctx.from_exponent(v)));
    rep.projected_size = proj.size();
    rep.projected_is_spread = spread_oracle(proj) == SpreadVerdict::spread;

    // (b) coset orbits under alpha_j = alpha^{c_j}.
    const FieldElem alpha_j = ctx.from_exponent(cj);
    std::vector<std::uint64_t> samples;
    if (l_sample.has_value()) {
        samples.push_back(*l_sample % ctx.order_star());
    } else {
        for (std::uint64_t l = 0; l < cj; ++l) samples.push_back(l);
    }
    std::vector<Subspace> all_members;
    bool all_spreads = true;
    const std::uint64_t expect = ((ipow_capped(g.p, static_cast<unsigned>(tj), UINT64_MAX) - 1) /
                                  (ipow_capped(g.p, static_cast<unsigned>(ti), UINT64_MAX) - 1));
    rep.coset_orbit_size = expect;
    for (std::uint64_t l : samples) {
        const FieldElem shift = ctx.from_exponent(l);
        Subspace coset_space = scale(Subspace::subfield(ctx, tj), shift);
        std::vector<Subspace> members;
        Subspace cur = scale(base_i, shift);
        for (std::uint64_t v = 0;; ++v) {
            members.push_back(cur);
            cur = scale(cur, alpha_j);
            if (cur == members.front()) break;
            if (v > expect) {
                all_spreads = false;
                break;
            }
        }
        if (members.size() != expect) all_spreads = false;
        for (const Subspace& u : members) {
            if (!coset_space.contains_subspace(u)) all_spreads = false;
        }
        if (all_spreads && !covers_exactly_once(members, coset_space)) all_spreads = false;
        ++rep.cosets_checked;
        if (rep.exhaustive) all_members.insert(all_members.end(), members.begin(), members.end());
    }
    rep.coset_orbits_are_spreads = all_spreads;

    // (c) the disjoint union over all cosets is the projected code.
    if (rep.exhaustive) {
        std::sort(all_members.begin(), all_members.end());
        std::sort(proj.begin(), proj.end());
        rep.union_recovers_projected =
            all_members.size() == proj.size() && std::equal(all_members.begin(), all_members.end(), proj.begin());
    }
    return rep;
}

}  // namespace flagforge
