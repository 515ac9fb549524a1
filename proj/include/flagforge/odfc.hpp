#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/orbit.hpp"

namespace flagforge {

// Optimum-distance admissibility: the maximum flag distance, the bounds a
// fixed best friend imposes, and the dimensions a subgroup leaves available.

/// 2 * sum_i min(t_i, n - t_i) for a valid type vector on F_{q^n}.
inline std::uint64_t max_flag_distance(std::span<const std::size_t> type, std::size_t n) {
    if (type.empty()) throw Error(Errc::InvalidType, "empty type vector");
    std::uint64_t total = 0;
    std::size_t prev = 0;
    for (std::size_t t : type) {
        if (t <= prev || t >= n) throw Error(Errc::InvalidType, "type must be strictly increasing within (0, n)");
        prev = t;
        total += std::min(t, n - t);
    }
    return 2 * total;
}

inline std::uint64_t max_flag_distance(std::initializer_list<std::size_t> type, std::size_t n) {
    return max_flag_distance(std::span<const std::size_t>(type.begin(), type.size()), n);
}

struct DistanceBounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
};

/// Bounds on the distance of a beta-cyclic orbit code with best friend
/// F_{q^m}: lower 2m (2mr when the code is disjoint), upper the maximum flag
/// distance rewritten through s_i = t_i/m and s = n/m.
inline DistanceBounds distance_bounds(std::size_t m, std::span<const std::size_t> type, std::size_t n,
                                      bool disjoint) {
    if (m == 0 || n % m != 0) throw Error(Errc::NotAFriendDimension, "m must divide n");
    for (std::size_t t : type)
        if (t % m != 0) throw Error(Errc::NotAFriendDimension, "m must divide every type entry");
    max_flag_distance(type, n);  // validates the type vector
    const std::size_t s = n / m;
    std::uint64_t upper = 0;
    for (std::size_t t : type) {
        std::size_t si = t / m;
        upper += std::min(si, s - si);
    }
    DistanceBounds b;
    b.lower = 2 * m * (disjoint ? type.size() : 1);
    b.upper = 2 * m * upper;
    return b;
}

inline DistanceBounds distance_bounds(std::size_t m, std::initializer_list<std::size_t> type, std::size_t n,
                                      bool disjoint) {
    return distance_bounds(m, std::span<const std::size_t>(type.begin(), type.size()), n, disjoint);
}

namespace detail {

struct OdfcParams {
    std::uint64_t order_star;   // q^n - 1
    std::uint64_t c;            // (q^n - 1)/(q^m - 1)
    std::uint64_t q;
};

inline OdfcParams odfc_params(std::uint64_t q, std::size_t n, std::size_t m) {
    if (m == 0 || n % m != 0) throw Error(Errc::NotADivisor, "m must divide n");
    std::uint64_t qn = ipow_capped(q, static_cast<unsigned>(n), UINT64_MAX);
    std::uint64_t qm = ipow_capped(q, static_cast<unsigned>(m), UINT64_MAX);
    if (qn == 0) throw Error(Errc::TableCapExceeded, "q^n overflows");
    return OdfcParams{qn - 1, (qn - 1) / (qm - 1), q};
}

}  // namespace detail

/// Multiples t of m with m <= t <= n-m whose partial-spread cardinality bound
/// floor((q^n-1)/(q^{min(t,n-t)}-1)) admits the orbit size lcm(l, c)/l.
inline std::vector<std::size_t> allowed_dimensions(std::uint64_t q, std::size_t n, std::size_t m, std::uint64_t l) {
    detail::OdfcParams pr = detail::odfc_params(q, n, m);
    if (l == 0 || pr.order_star % l != 0) throw Error(Errc::NotADivisor, "l must divide q^n - 1");
    const std::uint64_t orbit_size = std::lcm(l, pr.c) / l;
    std::vector<std::size_t> out;
    for (std::size_t t = m; t + m <= n; t += m) {
        std::size_t eff = std::min(t, n - t);
        std::uint64_t qe = ipow_capped(q, static_cast<unsigned>(eff), UINT64_MAX);
        if (orbit_size <= pr.order_star / (qe - 1)) out.push_back(t);
    }
    return out;
}

struct OdfcScanRow {
    std::uint64_t l = 1;
    std::uint64_t beta_order = 0;
    std::uint64_t intersection_order = 0;  // |<beta> cap F_{q^m}^*|
    std::uint64_t orbit_size = 0;
    std::vector<std::size_t> allowed_dims;
    std::uint64_t max_distance = 0;  // over the full allowed-dimension type; 0 for singleton orbits
};

/// One row per subgroup of F_{q^n}^*, ordered by decreasing |beta|.
inline std::vector<OdfcScanRow> odfc_scan(std::uint64_t q, std::size_t n, std::size_t m) {
    detail::OdfcParams pr = detail::odfc_params(q, n, m);
    std::vector<OdfcScanRow> rows;
    for (std::uint64_t l : divisors_u64(pr.order_star)) {
        OdfcScanRow row;
        row.l = l;
        row.beta_order = pr.order_star / l;
        row.intersection_order = pr.order_star / std::lcm(l, pr.c);
        row.orbit_size = std::lcm(l, pr.c) / l;
        row.allowed_dims = allowed_dimensions(q, n, m, l);
        row.max_distance = row.orbit_size == 1 ? 0 : max_flag_distance(row.allowed_dims, n);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct OdfcCyclicTypes {
    std::vector<std::vector<std::size_t>> types;  // (m), (n-m), (m, n-m)
    std::uint64_t max_size = 0;                   // (q^n-1)/(q^m-1)
};

/// The only type vectors a full-group optimum-distance orbit code can have
/// once F_{q^m} is its best friend.
inline OdfcCyclicTypes odfc_cyclic_types(std::uint64_t q, std::size_t n, std::size_t m) {
    detail::OdfcParams pr = detail::odfc_params(q, n, m);
    if (n == 2 * m) throw Error(Errc::DegenerateCase, "n = 2m collapses (m, n-m)");
    OdfcCyclicTypes out;
    out.types = {{m}, {n - m}, {m, n - m}};
    out.max_size = pr.c;
    return out;
}

struct OdfcVerdict {
    bool optimal_direct = false;           // min distance equals the type's maximum
    bool optimal_characterization = false; // disjoint + every projected code at max distance
    std::uint64_t min_dist = 0;
    std::uint64_t max_dist = 0;
};

inline OdfcVerdict odfc_verify_detail(const OrbitCode& code, unsigned threads = 1) {
    const std::size_t n = code.ctx().n();
    OdfcVerdict v;
    v.max_dist = max_flag_distance(code.type(), n);
    v.min_dist = min_distance(code, threads);
    v.optimal_direct = code.size() > 1 && v.min_dist == v.max_dist;

    bool character = is_disjoint(code) && code.size() > 1;
    if (character) {
        for (std::size_t i = 1; i <= code.length() && character; ++i) {
            const std::size_t t = code.type()[i - 1];
            const std::uint64_t want = 2 * std::min(t, n - t);
            const std::uint64_t period = code.level_periods()[i - 1];
            const std::vector<Flag>& flags = code.flags();
            std::uint64_t dmin = detail::parallel_min(1, period, threads, [&](std::size_t j) {
                return static_cast<std::uint64_t>(subspace_distance(flags[0].level(i - 1), flags[j].level(i - 1)));
            });
            if (dmin != want) character = false;
        }
    }
    v.optimal_characterization = character;
    return v;
}

/// True iff the code attains the maximum distance for its type. The direct
/// route and the disjointness characterization are both evaluated and must
/// agree.
inline bool odfc_verify(const OrbitCode& code, unsigned threads = 1) {
    OdfcVerdict v = odfc_verify_detail(code, threads);
    if (v.optimal_direct != v.optimal_characterization)
        throw Error(Errc::InternalCheckFailed, "optimum-distance routes disagree");
    return v.optimal_direct;
}

}  // namespace flagforge
