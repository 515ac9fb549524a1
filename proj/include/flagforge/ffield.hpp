#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/numtheory.hpp"

namespace flagforge {

/// An element of F_{p^n} in discrete-log form: either zero or an exponent e
/// meaning alpha^e, with e reduced mod p^n - 1.
class FieldElem {
  public:
    constexpr FieldElem() : code_(-1) {}

    static constexpr FieldElem zero() { return FieldElem(); }
    static constexpr FieldElem from_exponent_raw(std::uint64_t e) { return FieldElem(static_cast<std::int64_t>(e)); }

    constexpr bool is_zero() const { return code_ < 0; }
    constexpr std::uint64_t exponent() const { return static_cast<std::uint64_t>(code_); }

    friend constexpr bool operator==(FieldElem a, FieldElem b) { return a.code_ == b.code_; }
    friend constexpr bool operator!=(FieldElem a, FieldElem b) { return a.code_ != b.code_; }
    friend constexpr bool operator<(FieldElem a, FieldElem b) { return a.code_ < b.code_; }

  private:
    explicit constexpr FieldElem(std::int64_t code) : code_(code) {}
    std::int64_t code_;  // -1 = zero, otherwise exponent in [0, p^n - 2]
};

using Coeff = std::uint32_t;  // residue mod p

inline constexpr std::uint64_t kDefaultTableCap = 1ull << 20;  // max field size, in elements

/// Table cap resolution: explicit argument, else FLAGFORGE_TABLE_CAP, else default.
inline std::uint64_t env_table_cap() {
    if (const char* s = std::getenv("FLAGFORGE_TABLE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return kDefaultTableCap;
}

/// F_{p^n} for prime p, realized as F_p[x]/(f) with f a primitive polynomial.
/// Multiplication is exponent arithmetic; addition goes through the Zech table
/// z with alpha^{z(i)} = alpha^i + 1. Immutable after construction.
class FieldCtx {
  public:
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = delete;
    FieldCtx& operator=(FieldCtx&&) = delete;

    std::uint64_t p() const { return p_; }
    std::size_t n() const { return n_; }
    std::uint64_t size() const { return q_; }
    std::uint64_t order_star() const { return q_ - 1; }

    /// Modulus coefficients, constant term first, length n+1, monic.
    const std::vector<Coeff>& modulus() const { return modulus_; }

    std::string modulus_string() const {
        std::string s;
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(modulus_[i]);
        }
        return s;
    }

    FieldElem zero() const { return FieldElem::zero(); }
    FieldElem one() const { return FieldElem::from_exponent_raw(0); }
    FieldElem alpha() const { return FieldElem::from_exponent_raw(1 % order_star()); }

    FieldElem from_exponent(std::uint64_t e) const { return FieldElem::from_exponent_raw(e % order_star()); }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::uint64_t N = order_star();
        std::uint64_t i = a.exponent(), j = b.exponent();
        std::uint64_t d = i >= j ? i - j : i + N - j;
        std::int64_t z = zech_[d];
        if (z < 0) return FieldElem::zero();
        std::uint64_t e = j + static_cast<std::uint64_t>(z);
        if (e >= N) e -= N;
        return FieldElem::from_exponent_raw(e);
    }

    FieldElem neg(FieldElem a) const {
        if (a.is_zero() || p_ == 2) return a;
        const std::uint64_t N = order_star();
        std::uint64_t e = a.exponent() + N / 2;  // alpha^{N/2} = -1 in odd characteristic
        if (e >= N) e -= N;
        return FieldElem::from_exponent_raw(e);
    }

    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.is_zero() || b.is_zero()) return FieldElem::zero();
        std::uint64_t e = a.exponent() + b.exponent();
        const std::uint64_t N = order_star();
        if (e >= N) e -= N;
        return FieldElem::from_exponent_raw(e);
    }

    FieldElem inverse(FieldElem a) const {
        if (a.is_zero()) throw Error(Errc::InvalidArgument, "zero has no inverse");
        const std::uint64_t N = order_star();
        std::uint64_t e = a.exponent();
        return FieldElem::from_exponent_raw(e == 0 ? 0 : N - e);
    }

    FieldElem pow(FieldElem a, std::uint64_t k) const {
        if (a.is_zero()) return k == 0 ? one() : FieldElem::zero();
        const std::uint64_t N = order_star();
        return FieldElem::from_exponent_raw(mulmod_u64(a.exponent() % N, k % N, N));
    }

    std::uint64_t mult_order(FieldElem a) const {
        if (a.is_zero()) throw Error(Errc::ZeroHasNoOrder, "multiplicative order of zero is undefined");
        const std::uint64_t N = order_star();
        return N / std::gcd(N, a.exponent());
    }

    /// Generator of F_{p^m}^* inside this field: alpha^c with c = (p^n-1)/(p^m-1).
    FieldElem subfield_generator(std::size_t m) const {
        return FieldElem::from_exponent_raw(subfield_exponent(m));
    }

    std::uint64_t subfield_exponent(std::size_t m) const {
        if (m == 0 || n_ % m != 0) throw Error(Errc::NotADivisor, "m must divide n");
        std::uint64_t pm = ipow_capped(p_, static_cast<unsigned>(m), q_);
        return order_star() / (pm - 1);
    }

    /// (m, c) for every divisor m of n, ascending in m.
    std::vector<std::pair<std::size_t, std::uint64_t>> subfield_lattice() const {
        std::vector<std::pair<std::size_t, std::uint64_t>> out;
        for (std::uint64_t m : divisors_u64(n_)) {
            out.emplace_back(static_cast<std::size_t>(m), subfield_exponent(static_cast<std::size_t>(m)));
        }
        return out;
    }

    /// Coordinates in the basis {1, alpha, ..., alpha^{n-1}}, packed as
    /// sum c_i p^i. Zero packs to 0.
    std::uint64_t packed_coords(FieldElem a) const {
        return a.is_zero() ? 0 : exp_to_vec_[a.exponent()];
    }

    FieldElem from_packed(std::uint64_t packed) const {
        if (packed >= q_) throw Error(Errc::InvalidArgument, "packed coordinate out of range");
        std::int64_t e = vec_to_exp_[packed];
        return e < 0 ? FieldElem::zero() : FieldElem::from_exponent_raw(static_cast<std::uint64_t>(e));
    }

    void coords_into(FieldElem a, Coeff* out) const {
        std::uint64_t v = packed_coords(a);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = static_cast<Coeff>(v % p_);
            v /= p_;
        }
    }

    std::vector<Coeff> coords(FieldElem a) const {
        std::vector<Coeff> out(n_);
        coords_into(a, out.data());
        return out;
    }

    FieldElem from_coords(const Coeff* c) const {
        std::uint64_t v = 0, pw = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            v += (c[i] % p_) * pw;
            pw *= p_;
        }
        return from_packed(v);
    }

    std::uint64_t pack_coords(const Coeff* c) const {
        std::uint64_t v = 0, pw = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            v += (c[i] % p_) * pw;
            pw *= p_;
        }
        return v;
    }

    /// Zech logarithm z(i), or -1 when alpha^i + 1 = 0.
    std::int64_t zech(std::uint64_t i) const { return zech_[i % order_star()]; }

    std::string element_string(FieldElem a) const {
        if (a.is_zero()) return "0";
        if (a.exponent() == 0) return "1";
        if (a.exponent() == 1) return "a";
        return "a^" + std::to_string(a.exponent());
    }

    friend FieldCtx build_field(std::uint64_t p, std::size_t n, std::optional<std::vector<Coeff>> modulus,
                                std::uint64_t table_cap);
    friend std::unique_ptr<FieldCtx> build_field_ptr(std::uint64_t p, std::size_t n,
                                                     std::optional<std::vector<Coeff>> modulus,
                                                     std::uint64_t table_cap);

  private:
    FieldCtx(std::uint64_t p, std::size_t n, std::optional<std::vector<Coeff>> modulus, std::uint64_t table_cap)
        : p_(p), n_(n) {
        // TODO: allow prime-power characteristic; subspace coordinates would
        // then need an F_q-linear layer over the base subfield.
        if (!is_prime_u64(p_)) throw Error(Errc::NotPrime, "p = " + std::to_string(p_) + " is not prime");
        if (n_ == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
        q_ = ipow_capped(p_, static_cast<unsigned>(n_), table_cap);
        if (q_ == 0)
            throw Error(Errc::TableCapExceeded, "p^n exceeds the table cap of " + std::to_string(table_cap) +
                                                    " elements");
        const std::uint64_t N = q_ - 1;
        std::vector<std::uint64_t> prime_divs = distinct_prime_factors(N);

        if (modulus.has_value()) {
            modulus_ = normalize_modulus(*modulus);
            if (!is_primitive(modulus_, prime_divs))
                throw Error(Errc::NotPrimitive, "supplied modulus is not primitive over F_" + std::to_string(p_));
        } else {
            modulus_ = scan_primitive(prime_divs);
        }
        build_tables();
    }

    std::vector<Coeff> normalize_modulus(std::vector<Coeff> f) const {
        if (f.size() != n_ + 1) throw Error(Errc::InvalidArgument, "modulus must have degree n (n+1 coefficients)");
        for (Coeff& c : f) c = static_cast<Coeff>(c % p_);
        if (f[n_] == 0) throw Error(Errc::InvalidArgument, "modulus leading coefficient vanishes");
        if (f[n_] != 1) {  // scale to monic
            std::uint64_t inv = powmod_u64(f[n_], p_ - 2, p_);
            for (Coeff& c : f) c = static_cast<Coeff>((c * inv) % p_);
        }
        return f;
    }

    // Residue-ring multiplication mod f, schoolbook; used only while probing
    // candidate polynomials, the tables take over afterwards.
    std::vector<std::uint64_t> polymulmod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                          const std::vector<Coeff>& f) const {
        std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        for (std::size_t d = 2 * n_ - 2; d >= n_ && d < prod.size(); --d) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
            for (std::size_t i = 0; i < n_; ++i) {
                std::uint64_t sub = (c * f[i]) % p_;
                prod[d - n_ + i] = (prod[d - n_ + i] + p_ - sub) % p_;
            }
        }
        prod.resize(n_);
        return prod;
    }

    bool poly_is_one(const std::vector<std::uint64_t>& a) const {
        if (a[0] != 1) return false;
        for (std::size_t i = 1; i < n_; ++i)
            if (a[i] != 0) return false;
        return true;
    }

    std::vector<std::uint64_t> polypowmod(std::uint64_t e, const std::vector<Coeff>& f) const {
        std::vector<std::uint64_t> base(n_, 0), r(n_, 0);
        r[0] = 1;
        if (n_ == 1) {
            base[0] = (p_ - f[0]) % p_;  // x = -f_0 mod (x + f_0)
        } else {
            base[1] = 1;
        }
        while (e != 0) {
            if (e & 1) r = polymulmod(r, base, f);
            base = polymulmod(base, base, f);
            e >>= 1;
        }
        return r;
    }

    /// x has order exactly p^n - 1 in F_p[x]/(f); implies f irreducible.
    bool is_primitive(const std::vector<Coeff>& f, const std::vector<std::uint64_t>& prime_divs) const {
        if (f[0] == 0) return false;
        const std::uint64_t N = q_ - 1;
        if (!poly_is_one(polypowmod(N, f))) return false;
        for (std::uint64_t ell : prime_divs) {
            if (poly_is_one(polypowmod(N / ell, f))) return false;
        }
        return true;
    }

    /// First primitive polynomial under the base-p counting scan: candidate k
    /// encodes the non-leading coefficients with c_0 = k mod p, c_1 = (k/p) mod p, ...
    std::vector<Coeff> scan_primitive(const std::vector<std::uint64_t>& prime_divs) const {
        std::vector<Coeff> f(n_ + 1, 0);
        f[n_] = 1;
        for (std::uint64_t k = 1; k < q_; ++k) {
            std::uint64_t v = k;
            for (std::size_t i = 0; i < n_; ++i) {
                f[i] = static_cast<Coeff>(v % p_);
                v /= p_;
            }
            if (f[0] == 0) continue;
            if (is_primitive(f, prime_divs)) return f;
        }
        throw Error(Errc::InternalCheckFailed, "no primitive polynomial found");  // unreachable for prime p
    }

    void build_tables() {
        const std::uint64_t N = q_ - 1;
        exp_to_vec_.assign(N, 0);
        vec_to_exp_.assign(q_, -1);
        std::vector<Coeff> cur(n_, 0);
        cur[0] = 1;  // alpha^0
        for (std::uint64_t e = 0; e < N; ++e) {
            std::uint64_t packed = 0, pw = 1;
            for (std::size_t i = 0; i < n_; ++i) {
                packed += cur[i] * pw;
                pw *= p_;
            }
            if (vec_to_exp_[packed] != -1)
                throw Error(Errc::InternalCheckFailed, "modulus is not primitive (cycle detected)");
            exp_to_vec_[e] = packed;
            vec_to_exp_[packed] = static_cast<std::int64_t>(e);
            // multiply by x mod f
            Coeff carry = cur[n_ - 1];
            for (std::size_t i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (carry != 0) {
                for (std::size_t i = 0; i < n_; ++i) {
                    std::uint64_t sub = (static_cast<std::uint64_t>(carry) * modulus_[i]) % p_;
                    cur[i] = static_cast<Coeff>((cur[i] + p_ - sub) % p_);
                }
            }
        }
        zech_.assign(N, -1);
        for (std::uint64_t i = 0; i < N; ++i) {
            std::uint64_t v = exp_to_vec_[i];
            std::uint64_t c0 = v % p_;
            std::uint64_t vplus = v - c0 + (c0 + 1) % p_;
            zech_[i] = vplus == 0 ? -1 : vec_to_exp_[vplus];
        }
    }

    std::uint64_t p_;
    std::size_t n_;
    std::uint64_t q_;
    std::vector<Coeff> modulus_;
    std::vector<std::uint64_t> exp_to_vec_;
    std::vector<std::int64_t> vec_to_exp_;
    std::vector<std::int64_t> zech_;
};

inline FieldCtx build_field(std::uint64_t p, std::size_t n, std::optional<std::vector<Coeff>> modulus = std::nullopt,
                            std::uint64_t table_cap = env_table_cap()) {
    return FieldCtx(p, n, std::move(modulus), table_cap);
}

/// Heap-owning variant for callers that must keep the context alive past the
/// current scope (the type itself is pinned in place).
inline std::unique_ptr<FieldCtx> build_field_ptr(std::uint64_t p, std::size_t n,
                                                 std::optional<std::vector<Coeff>> modulus = std::nullopt,
                                                 std::uint64_t table_cap = env_table_cap()) {
    return std::unique_ptr<FieldCtx>(new FieldCtx(p, n, std::move(modulus), table_cap));
}

}  // namespace flagforge
