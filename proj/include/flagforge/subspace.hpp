#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/ffield.hpp"

namespace flagforge {

inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 16;  // max elements enumerated per subspace

namespace linalg {

/// In-place reduced row echelon form over F_p; rows is row-major
/// nrows x ncols. Returns the rank; pivot rows are compacted to the top,
/// pivots normalized to 1, zero rows truncated by the caller.
inline std::size_t rref(std::vector<Coeff>& rows, std::size_t nrows, std::size_t ncols, std::uint64_t p) {
    auto at = [&](std::size_t r, std::size_t c) -> Coeff& { return rows[r * ncols + c]; };
    auto inv_mod = [&](std::uint64_t c) -> std::uint64_t {
        if (c == 1) return 1;
        if (p == 3) return c;  // 2*2 = 4 = 1 mod 3
        return powmod_u64(c, p - 2, p);
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && at(pivot, col) == 0) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < ncols; ++c) std::swap(at(pivot, c), at(rank, c));
        }
        std::uint64_t pv = at(rank, col);
        if (pv != 1) {
            std::uint64_t iv = inv_mod(pv);
            for (std::size_t c = col; c < ncols; ++c)
                at(rank, c) = static_cast<Coeff>((at(rank, c) * iv) % p);
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            std::uint64_t f = at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < ncols; ++c) {
                std::uint64_t v = at(r, c) + ((p - f) * at(rank, c)) % p;
                at(r, c) = static_cast<Coeff>(v % p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace linalg

/// An F_p-subspace of F_{p^n}, held as its reduced-row-echelon basis in the
/// coordinate basis {1, alpha, ..., alpha^{n-1}}. Canonical: equal subspaces
/// have identical basis matrices. Immutable value.
class Subspace {
  public:
    static Subspace zero(const FieldCtx& ctx) { return Subspace(&ctx, 0, {}); }

    static Subspace from_generators(const FieldCtx& ctx, std::span<const FieldElem> gens, bool allow_zero = false) {
        if (gens.empty() && !allow_zero) throw Error(Errc::AllZeroGenerators, "no generators given");
        std::vector<Coeff> rows(gens.size() * ctx.n());
        for (std::size_t i = 0; i < gens.size(); ++i) ctx.coords_into(gens[i], rows.data() + i * ctx.n());
        std::size_t k = linalg::rref(rows, gens.size(), ctx.n(), ctx.p());
        if (k == 0 && !allow_zero)
            throw Error(Errc::AllZeroGenerators, "generators span only the zero subspace");
        rows.resize(k * ctx.n());
        return Subspace(&ctx, k, std::move(rows));
    }

    static Subspace from_generators(const FieldCtx& ctx, std::initializer_list<FieldElem> gens,
                                    bool allow_zero = false) {
        return from_generators(ctx, std::span<const FieldElem>(gens.begin(), gens.size()), allow_zero);
    }

    /// F_{p^m} as an F_p-subspace; {1, g, g^2, ..., g^{m-1}} is a basis for
    /// g = alpha^{(p^n-1)/(p^m-1)}.
    static Subspace subfield(const FieldCtx& ctx, std::size_t m) {
        FieldElem g = ctx.subfield_generator(m);
        std::vector<FieldElem> gens;
        FieldElem cur = ctx.one();
        for (std::size_t i = 0; i < m; ++i) {
            gens.push_back(cur);
            cur = ctx.mul(cur, g);
        }
        Subspace s = from_generators(ctx, gens);
        if (s.dim() != m) throw Error(Errc::InternalCheckFailed, "subfield basis degenerated");
        return s;
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t dim() const { return k_; }
    std::size_t ambient_dim() const { return ctx_->n(); }

    const Coeff* row(std::size_t i) const { return rows_.data() + i * ctx_->n(); }
    FieldElem row_elem(std::size_t i) const { return ctx_->from_coords(row(i)); }
    const std::vector<Coeff>& raw() const { return rows_; }

    bool contains(FieldElem x) const {
        std::vector<Coeff> v = ctx_->coords(x);
        reduce_against(v.data());
        for (Coeff c : v)
            if (c != 0) return false;
        return true;
    }

    bool contains_subspace(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i) {
            std::vector<Coeff> v(other.row(i), other.row(i) + ctx_->n());
            reduce_against(v.data());
            for (Coeff c : v)
                if (c != 0) return false;
        }
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ctx_ == b.ctx_ && a.k_ == b.k_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    /// Arbitrary but fixed total order; used for canonical set comparisons.
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.k_ != b.k_) return a.k_ < b.k_;
        return a.rows_ < b.rows_;
    }

    friend Subspace sum(const Subspace& u, const Subspace& v) {
        u.require_same_ctx(v);
        const std::size_t n = u.ctx_->n();
        std::vector<Coeff> rows;
        rows.reserve((u.k_ + v.k_) * n);
        rows.insert(rows.end(), u.rows_.begin(), u.rows_.end());
        rows.insert(rows.end(), v.rows_.begin(), v.rows_.end());
        std::size_t k = linalg::rref(rows, u.k_ + v.k_, n, u.ctx_->p());
        rows.resize(k * n);
        return Subspace(u.ctx_, k, std::move(rows));
    }

    /// Zassenhaus: row-reduce [U|U; V|0]; rows with vanishing left block carry
    /// an intersection basis in the right block.
    friend Subspace intersect(const Subspace& u, const Subspace& v) {
        u.require_same_ctx(v);
        const std::size_t n = u.ctx_->n();
        const std::size_t m = u.k_ + v.k_;
        std::vector<Coeff> wide(m * 2 * n, 0);
        for (std::size_t i = 0; i < u.k_; ++i) {
            for (std::size_t c = 0; c < n; ++c) {
                wide[i * 2 * n + c] = u.rows_[i * n + c];
                wide[i * 2 * n + n + c] = u.rows_[i * n + c];
            }
        }
        for (std::size_t i = 0; i < v.k_; ++i) {
            for (std::size_t c = 0; c < n; ++c) wide[(u.k_ + i) * 2 * n + c] = v.rows_[i * n + c];
        }
        linalg::rref(wide, m, 2 * n, u.ctx_->p());
        std::vector<Coeff> inter;
        for (std::size_t r = 0; r < m; ++r) {
            bool left_zero = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (wide[r * 2 * n + c] != 0) {
                    left_zero = false;
                    break;
                }
            }
            if (!left_zero) continue;
            inter.insert(inter.end(), wide.begin() + r * 2 * n + n, wide.begin() + (r + 1) * 2 * n);
        }
        std::size_t rows_in = inter.size() / n;
        std::size_t k = linalg::rref(inter, rows_in, n, u.ctx_->p());
        inter.resize(k * n);
        return Subspace(u.ctx_, k, std::move(inter));
    }

    /// dim(U+V) - dim(U cap V) == 2*dim(U+V) - dim U - dim V.
    friend std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
        u.require_same_ctx(v);
        const std::size_t n = u.ctx_->n();
        std::vector<Coeff> rows;
        rows.reserve((u.k_ + v.k_) * n);
        rows.insert(rows.end(), u.rows_.begin(), u.rows_.end());
        rows.insert(rows.end(), v.rows_.begin(), v.rows_.end());
        std::size_t rank = linalg::rref(rows, u.k_ + v.k_, n, u.ctx_->p());
        return 2 * rank - u.k_ - v.k_;
    }

    friend Subspace scale(const Subspace& u, FieldElem b) {
        if (b.is_zero()) throw Error(Errc::ScaleByZero, "scaling a subspace by zero");
        const FieldCtx& ctx = *u.ctx_;
        const std::size_t n = ctx.n();
        std::vector<Coeff> rows(u.k_ * n);
        for (std::size_t i = 0; i < u.k_; ++i) {
            FieldElem scaled = ctx.mul(u.row_elem(i), b);
            ctx.coords_into(scaled, rows.data() + i * n);
        }
        std::size_t k = linalg::rref(rows, u.k_, n, ctx.p());
        rows.resize(k * n);
        return Subspace(u.ctx_, k, std::move(rows));
    }

    /// All p^k elements, zero first, in odometer order over the basis rows.
    friend std::vector<FieldElem> enumerate_elements(const Subspace& u, std::uint64_t cap) {
        const FieldCtx& ctx = *u.ctx_;
        std::uint64_t total = ipow_capped(ctx.p(), static_cast<unsigned>(u.k_), cap);
        if (total == 0)
            throw Error(Errc::EnumerationCapExceeded,
                        "p^k exceeds the enumeration cap of " + std::to_string(cap));
        const std::size_t n = ctx.n();
        std::vector<FieldElem> out;
        out.reserve(total);
        std::vector<Coeff> digits(u.k_, 0), v(n, 0);
        for (std::uint64_t idx = 0;; ++idx) {
            out.push_back(ctx.from_coords(v.data()));
            if (idx + 1 == total) break;
            // odometer increment; keep v = sum digits[i] * row_i in sync
            for (std::size_t d = 0; d < u.k_; ++d) {
                const Coeff* r = u.row(d);
                if (digits[d] + 1 < ctx.p()) {
                    ++digits[d];
                    for (std::size_t c = 0; c < n; ++c)
                        v[c] = static_cast<Coeff>((v[c] + r[c]) % ctx.p());
                    break;
                }
                digits[d] = 0;  // rolls p-1 -> 0: adding one more copy of r
                for (std::size_t c = 0; c < n; ++c) v[c] = static_cast<Coeff>((v[c] + r[c]) % ctx.p());
            }
        }
        return out;
    }

  private:
    Subspace(const FieldCtx* ctx, std::size_t k, std::vector<Coeff> rows)
        : ctx_(ctx), k_(k), rows_(std::move(rows)) {}

    void require_same_ctx(const Subspace& other) const {
        if (ctx_ != other.ctx_) throw Error(Errc::CtxMismatch, "subspaces live in different fields");
    }

    void reduce_against(Coeff* v) const {
        const std::size_t n = ctx_->n();
        const std::uint64_t p = ctx_->p();
        for (std::size_t r = 0; r < k_; ++r) {
            const Coeff* row_r = row(r);
            std::size_t piv = 0;
            while (piv < n && row_r[piv] == 0) ++piv;
            std::uint64_t f = v[piv];
            if (f == 0) continue;
            for (std::size_t c = piv; c < n; ++c)
                v[c] = static_cast<Coeff>((v[c] + (p - f) * row_r[c]) % p);
        }
    }

    const FieldCtx* ctx_;
    std::size_t k_;
    std::vector<Coeff> rows_;  // k_ x n, RREF
};

inline std::vector<FieldElem> enumerate_elements(const Subspace& u) {
    return enumerate_elements(u, kDefaultEnumCap);
}

}  // namespace flagforge
