#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/flag.hpp"

namespace flagforge {

/// A multiplicative subgroup <beta> = <alpha^l> of F_{p^n}^*, keyed by the
/// divisor l of p^n - 1; its order is (p^n - 1)/l.
struct SubgroupSpec {
    std::uint64_t l = 1;
    std::uint64_t order = 0;

    static SubgroupSpec full(const FieldCtx& ctx) { return SubgroupSpec{1, ctx.order_star()}; }

    static SubgroupSpec from_exponent(const FieldCtx& ctx, std::uint64_t l) {
        const std::uint64_t N = ctx.order_star();
        if (l == 0 || N % l != 0) throw Error(Errc::NotADivisor, "l must divide p^n - 1");
        return SubgroupSpec{l, N / l};
    }

    static SubgroupSpec from_element(const FieldCtx& ctx, FieldElem beta) {
        if (beta.is_zero()) throw Error(Errc::InvalidArgument, "zero generates no subgroup");
        const std::uint64_t N = ctx.order_star();
        std::uint64_t l = std::gcd(beta.exponent(), N);  // gcd(0, N) = N covers beta = 1
        return SubgroupSpec{l, N / l};
    }

    FieldElem generator(const FieldCtx& ctx) const { return ctx.from_exponent(l); }

    friend bool operator==(const SubgroupSpec& a, const SubgroupSpec& b) = default;
};

/// Orbit periods of a flag and of each of its levels under <alpha^l>: the
/// level period p_i is the first j > 0 with F_i beta^j = F_i, and the flag
/// period is lcm(p_1, ..., p_r).
struct OrbitPeriods {
    std::uint64_t flag_period = 0;
    std::vector<std::uint64_t> level_periods;
};

inline OrbitPeriods orbit_periods(const Flag& f, const SubgroupSpec& sub) {
    const FieldCtx& ctx = f.ctx();
    const FieldElem beta = sub.generator(ctx);
    const std::size_t r = f.length();
    OrbitPeriods out;
    out.level_periods.assign(r, 0);
    std::vector<Subspace> cur(f.subspaces());
    std::size_t pending = r;
    for (std::uint64_t j = 1; pending > 0; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            if (out.level_periods[i] != 0) continue;
            cur[i] = scale(cur[i], beta);
            if (cur[i] == f.level(i)) {
                out.level_periods[i] = j;
                --pending;
            }
        }
        if (j > sub.order) throw Error(Errc::InternalCheckFailed, "orbit period exceeds the group order");
    }
    out.flag_period = 1;
    for (std::uint64_t p : out.level_periods) out.flag_period = std::lcm(out.flag_period, p);
    return out;
}

/// A beta-cyclic orbit flag code: the generator flag, the acting subgroup,
/// the enumerated orbit in generation order (generator first), and the
/// stabilizer orders derived from the periods.
class OrbitCode {
  public:
    const Flag& generator() const { return orbit_.front(); }
    const SubgroupSpec& subgroup() const { return subgroup_; }
    const std::vector<Flag>& flags() const { return orbit_; }
    std::uint64_t size() const { return orbit_.size(); }
    std::size_t length() const { return generator().length(); }
    const std::vector<std::size_t>& type() const { return generator().type(); }
    const FieldCtx& ctx() const { return generator().ctx(); }

    std::uint64_t stab_order() const { return stab_order_; }
    const std::vector<std::uint64_t>& stab_orders_per_level() const { return stab_orders_per_level_; }
    const std::vector<std::uint64_t>& level_periods() const { return level_periods_; }

    friend OrbitCode orbit(const Flag& f, const SubgroupSpec& sub);

  private:
    OrbitCode() = default;

    SubgroupSpec subgroup_;
    std::vector<Flag> orbit_;
    std::uint64_t stab_order_ = 0;
    std::vector<std::uint64_t> level_periods_;
    std::vector<std::uint64_t> stab_orders_per_level_;
};

/// Enumerate Orb_beta(F) by repeated scaling until the generator recurs.
/// Members are pairwise distinct by the group action, so no dedup pass is
/// needed; the stabilizer data follows from orbit-stabilizer.
inline OrbitCode orbit(const Flag& f, const SubgroupSpec& sub) {
    const FieldCtx& ctx = f.ctx();
    const FieldElem beta = sub.generator(ctx);
    const std::size_t r = f.length();

    OrbitCode code;
    code.subgroup_ = sub;
    code.level_periods_.assign(r, 0);
    code.orbit_.push_back(f);
    std::size_t pending = r;
    for (std::uint64_t j = 1;; ++j) {
        const Flag& prev = code.orbit_.back();
        std::vector<Subspace> subs;
        subs.reserve(r);
        bool all_back = true;
        for (std::size_t i = 0; i < r; ++i) {
            subs.push_back(scale(prev.level(i), beta));
            if (code.level_periods_[i] == 0) {
                if (subs.back() == f.level(i)) {
                    code.level_periods_[i] = j;
                    --pending;
                } else {
                    all_back = false;
                }
            } else if (j % code.level_periods_[i] != 0 || subs.back() != f.level(i)) {
                all_back = false;
            }
        }
        if (pending == 0 && all_back) break;
        code.orbit_.push_back(Flag::make(std::move(subs)));
        if (j > sub.order) throw Error(Errc::InternalCheckFailed, "orbit walk exceeded the group order");
    }

    const std::uint64_t period = code.orbit_.size();
    std::uint64_t lcm_periods = 1;
    for (std::uint64_t p : code.level_periods_) lcm_periods = std::lcm(lcm_periods, p);
    if (lcm_periods != period || sub.order % period != 0)
        throw Error(Errc::InternalCheckFailed, "orbit period disagrees with the level periods");
    code.stab_order_ = sub.order / period;
    code.stab_orders_per_level_.reserve(r);
    for (std::uint64_t p : code.level_periods_) code.stab_orders_per_level_.push_back(sub.order / p);
    return code;
}

/// Stab_beta(F) as a subgroup of F_{p^n}^*, computed two ways that must
/// agree: via the flag period (order / |orbit|) and via the intersection of
/// the level stabilizers <alpha^{l * p_i}>.
inline SubgroupSpec stabilizer(const Flag& f, const SubgroupSpec& sub) {
    const std::uint64_t N = f.ctx().order_star();
    OrbitPeriods per = orbit_periods(f, sub);
    std::uint64_t via_period = sub.order / per.flag_period;

    std::uint64_t inter_exp = 1;  // exponent of the intersection subgroup
    for (std::uint64_t p : per.level_periods) inter_exp = std::lcm(inter_exp, sub.l * p);
    std::uint64_t via_intersection = N / inter_exp;
    if (via_period != via_intersection)
        throw Error(Errc::InternalCheckFailed, "stabilizer routes disagree");
    return SubgroupSpec{sub.l * per.flag_period, via_period};
}

/// Index m' of the smallest subfield F_{p^{m'}} containing F_p and
/// Stab_beta(F): the least divisor m' of n with |Stab| dividing p^{m'} - 1.
inline std::size_t stabilizer_subfield(const Flag& f, const SubgroupSpec& sub) {
    const FieldCtx& ctx = f.ctx();
    std::uint64_t stab = stabilizer(f, sub).order;
    for (std::uint64_t m : divisors_u64(ctx.n())) {
        std::uint64_t pm = ipow_capped(ctx.p(), static_cast<unsigned>(m), ctx.size());
        if ((pm - 1) % stab == 0) return static_cast<std::size_t>(m);
    }
    throw Error(Errc::InternalCheckFailed, "stabilizer order fits no subfield");
}

/// Best friend data: F_{p^m} is the largest subfield over which every
/// subspace of the flag is a vector space; per_level[i] is the analogue for
/// the single subspace F_i.
struct BestFriend {
    std::size_t m = 1;
    std::vector<std::size_t> per_level;
};

namespace detail {

inline std::size_t subfield_index_of_stab_order(const FieldCtx& ctx, std::uint64_t stab) {
    // Full-group stabilizer orders are exactly p^m - 1 for a divisor m of n.
    for (std::uint64_t m : divisors_u64(ctx.n())) {
        std::uint64_t pm = ipow_capped(ctx.p(), static_cast<unsigned>(m), ctx.size());
        if (pm - 1 == stab) return static_cast<std::size_t>(m);
    }
    throw Error(Errc::InternalCheckFailed, "full-group stabilizer order is not p^m - 1");
}

}  // namespace detail

/// Best friend via the full-group stabilizer: |Stab(F)| = p^m - 1 and
/// |Stab(F_i)| = p^{m_i} - 1. The independent closure scan lives in the
/// oracle module.
inline BestFriend best_friend(const Flag& f) {
    const FieldCtx& ctx = f.ctx();
    OrbitPeriods per = orbit_periods(f, SubgroupSpec::full(ctx));
    const std::uint64_t N = ctx.order_star();
    BestFriend bf;
    bf.m = detail::subfield_index_of_stab_order(ctx, N / per.flag_period);
    bf.per_level.reserve(per.level_periods.size());
    for (std::uint64_t p : per.level_periods)
        bf.per_level.push_back(detail::subfield_index_of_stab_order(ctx, N / p));
    return bf;
}

/// |Orb_beta(F)| = lcm(l, (p^n-1)/(p^m-1)) / l, given the best-friend index m.
inline std::uint64_t cardinality_formula(const FieldCtx& ctx, std::size_t best_friend_m, const SubgroupSpec& sub) {
    std::uint64_t c = ctx.subfield_exponent(best_friend_m);
    return std::lcm(sub.l, c) / sub.l;
}

inline std::uint64_t cardinality_formula(const Flag& f, const SubgroupSpec& sub) {
    return cardinality_formula(f.ctx(), best_friend(f).m, sub);
}

namespace detail {

/// Deterministic chunked min-reduction over [begin, end).
template <typename Fn>
std::uint64_t parallel_min(std::size_t begin, std::size_t end, unsigned threads, Fn&& per_index) {
    if (begin >= end) return UINT64_MAX;
    std::size_t count = end - begin;
    if (threads <= 1 || count < 1024) {
        std::uint64_t best = UINT64_MAX;
        for (std::size_t i = begin; i < end; ++i) best = std::min(best, per_index(i));
        return best;
    }
    unsigned nt = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::uint64_t> partial(nt, UINT64_MAX);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = begin + count * t / nt;
        std::size_t hi = begin + count * (t + 1) / nt;
        pool.emplace_back([&, t, lo, hi] {
            std::uint64_t best = UINT64_MAX;
            for (std::size_t i = lo; i < hi; ++i) best = std::min(best, per_index(i));
            partial[t] = best;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t v : partial) best = std::min(best, v);
    return best;
}

}  // namespace detail

/// Minimum flag distance of the code: distances to the generator suffice
/// since the action is an isometry. 0 for singleton orbits.
inline std::uint64_t min_distance(const OrbitCode& code, unsigned threads = 1) {
    if (code.size() <= 1) return 0;
    const std::vector<Flag>& flags = code.flags();
    return detail::parallel_min(1, flags.size(), threads,
                                [&](std::size_t j) { return flag_distance(flags[0], flags[j]); });
}

/// The i-th projected code (1-based level): the first p_i level subspaces,
/// which are exactly the distinct ones.
inline std::vector<Subspace> projected(const OrbitCode& code, std::size_t i) {
    if (i == 0 || i > code.length()) throw Error(Errc::IndexOutOfRange, "projected level out of range");
    const std::uint64_t period = code.level_periods()[i - 1];
    std::vector<Subspace> out;
    out.reserve(period);
    for (std::uint64_t j = 0; j < period; ++j) out.push_back(code.flags()[j].level(i - 1));
    return out;
}

/// Disjoint <=> all level stabilizers coincide <=> all level periods equal
/// the orbit size.
inline bool is_disjoint(const OrbitCode& code) {
    for (std::uint64_t p : code.level_periods())
        if (p != code.size()) return false;
    return true;
}

enum class SpreadVerdict { neither, partial_spread, spread };

inline const char* spread_verdict_name(SpreadVerdict v) {
    switch (v) {
        case SpreadVerdict::neither: return "neither";
        case SpreadVerdict::partial_spread: return "partial_spread";
        case SpreadVerdict::spread: return "spread";
    }
    return "?";
}

/// Pairwise-intersection route: partial spread iff all pairwise intersections
/// are trivial; spread additionally iff the count matches (p^n-1)/(p^k-1).
inline SpreadVerdict is_partial_spread(std::span<const Subspace> subs) {
    if (subs.empty()) throw Error(Errc::InvalidArgument, "empty subspace list");
    const std::size_t k = subs.front().dim();
    for (const Subspace& s : subs)
        if (s.dim() != k) throw Error(Errc::MixedDimensions, "subspaces have mixed dimensions");
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            if (subspace_distance(subs[i], subs[j]) != 2 * k) return SpreadVerdict::neither;
        }
    }
    const FieldCtx& ctx = subs.front().ctx();
    std::uint64_t pk = ipow_capped(ctx.p(), static_cast<unsigned>(k), ctx.size());
    if (ctx.n() % k == 0 && subs.size() == ctx.order_star() / (pk - 1)) return SpreadVerdict::spread;
    return SpreadVerdict::partial_spread;
}

/// Elements a_1, ..., a_{s_r} with F_i = F_{p^m} a_1 + ... + F_{p^m} a_{s_i}
/// (direct) for every level; greedy over the deterministic exponent order.
inline std::vector<FieldElem> decompose_over_friend(const Flag& f, std::size_t m,
                                                    std::uint64_t enum_cap = kDefaultEnumCap) {
    const FieldCtx& ctx = f.ctx();
    if (ctx.n() % m != 0) throw Error(Errc::NotAFriend, "m does not divide n");
    const Subspace fm = Subspace::subfield(ctx, m);
    const FieldElem g = ctx.subfield_generator(m);
    for (const Subspace& s : f.subspaces()) {
        if (s.dim() % m != 0 || scale(s, g) != s)
            throw Error(Errc::NotAFriend, "F_{p^m} is not a friend of the flag");
    }
    std::vector<FieldElem> picks;
    Subspace w = Subspace::zero(ctx);
    for (const Subspace& s : f.subspaces()) {
        std::vector<FieldElem> elems = enumerate_elements(s, enum_cap);
        std::sort(elems.begin(), elems.end());  // smallest exponent first, zero leading
        while (w.dim() < s.dim()) {
            FieldElem pick;
            bool found = false;
            for (FieldElem e : elems) {
                if (e.is_zero() || w.contains(e)) continue;
                pick = e;
                found = true;
                break;
            }
            if (!found) throw Error(Errc::InternalCheckFailed, "no extension element found");
            Subspace grown = sum(w, scale(fm, pick));
            if (grown.dim() != w.dim() + m)
                throw Error(Errc::InternalCheckFailed, "friend line does not extend the span freely");
            w = std::move(grown);
            picks.push_back(pick);
        }
    }
    return picks;
}

}  // namespace flagforge
