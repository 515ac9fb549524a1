#pragma once

#include <cstdint>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge {

/// A flag: strictly nested subspaces F_1 < F_2 < ... < F_r, all proper and
/// nonzero, with type vector (dim F_1, ..., dim F_r). Immutable value.
class Flag {
  public:
    static Flag make(std::vector<Subspace> subs) {
        if (subs.empty()) throw Error(Errc::InvalidArgument, "a flag needs at least one subspace");
        const FieldCtx* ctx = &subs.front().ctx();
        std::vector<std::size_t> type;
        type.reserve(subs.size());
        for (const Subspace& s : subs) {
            if (&s.ctx() != ctx) throw Error(Errc::CtxMismatch, "flag subspaces live in different fields");
            if (s.dim() == 0 || s.dim() >= ctx->n())
                throw Error(Errc::FullOrZeroSubspace, "flag subspaces must be proper and nonzero");
            type.push_back(s.dim());
        }
        for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
            if (subs[i].dim() >= subs[i + 1].dim() || !subs[i + 1].contains_subspace(subs[i]))
                throw Error(Errc::NotNested, "flag subspaces are not strictly nested");
        }
        return Flag(ctx, std::move(subs), std::move(type));
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t length() const { return subs_.size(); }
    const std::vector<Subspace>& subspaces() const { return subs_; }
    const Subspace& level(std::size_t i) const { return subs_.at(i); }
    const std::vector<std::size_t>& type() const { return type_; }

    friend bool operator==(const Flag& a, const Flag& b) { return a.ctx_ == b.ctx_ && a.subs_ == b.subs_; }
    friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

  private:
    Flag(const FieldCtx* ctx, std::vector<Subspace> subs, std::vector<std::size_t> type)
        : ctx_(ctx), subs_(std::move(subs)), type_(std::move(type)) {}

    const FieldCtx* ctx_;
    std::vector<Subspace> subs_;
    std::vector<std::size_t> type_;
};

inline Flag new_flag(std::vector<Subspace> subs) { return Flag::make(std::move(subs)); }

/// Sum of componentwise subspace distances; both flags must share the type.
inline std::uint64_t flag_distance(const Flag& f, const Flag& g) {
    if (&f.ctx() != &g.ctx()) throw Error(Errc::CtxMismatch, "flags live in different fields");
    if (f.type() != g.type()) throw Error(Errc::TypeMismatch, "flags have different type vectors");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < f.length(); ++i) d += subspace_distance(f.level(i), g.level(i));
    return d;
}

inline Flag scale_flag(const Flag& f, FieldElem b) {
    if (b.is_zero()) throw Error(Errc::ScaleByZero, "scaling a flag by zero");
    std::vector<Subspace> subs;
    subs.reserve(f.length());
    for (const Subspace& s : f.subspaces()) subs.push_back(scale(s, b));
    return Flag::make(std::move(subs));
}

/// The generator-normalized representative F * gamma^{-1}, where gamma is the
/// nonzero element of F_1 with the smallest exponent. Puts 1 into the first
/// subspace without changing the full orbit.
inline Flag normalize_to_one(const Flag& f, std::uint64_t enum_cap = kDefaultEnumCap) {
    FieldElem gamma;
    bool found = false;
    for (FieldElem e : enumerate_elements(f.level(0), enum_cap)) {
        if (e.is_zero()) continue;
        if (!found || e.exponent() < gamma.exponent()) {
            gamma = e;
            found = true;
        }
    }
    if (!found) throw Error(Errc::InternalCheckFailed, "flag level has no nonzero element");
    if (gamma.exponent() == 0) return f;
    return scale_flag(f, f.ctx().inverse(gamma));
}

}  // namespace flagforge
