#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagforge/errors.hpp"
#include "flagforge/flag.hpp"

namespace flagforge {

// Flag-spec text format, one flag per document:
//
//   field p=3 n=8 [poly=c0,c1,...,cn]
//   subspace: a^82, 1
//   subspace: a^82, a^164, [0,1,0,0,0,0,0,0]
//   subgroup l=16            (optional)
//
// Elements are "0", "1", "a", "a^K" or "[c0,...,c_{n-1}]"; '#' starts a
// comment. Errors carry 1-based line/column positions.

struct ElemExpr {
    enum class Kind { Zero, Power, Coords };
    Kind kind = Kind::Zero;
    std::uint64_t power = 0;
    std::vector<std::uint64_t> coords;
    std::size_t line = 0, col = 0;
};

struct FlagSpecDocument {
    std::uint64_t p = 2;
    std::size_t n = 1;
    std::optional<std::vector<Coeff>> poly;
    std::vector<std::vector<ElemExpr>> subspace_gens;
    std::optional<std::uint64_t> subgroup_l;
};

namespace spec_detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
    }
    [[noreturn]] void fail(const std::string& reason) const { throw flagforge::ParseError(line, col, reason); }
};

inline std::uint64_t parse_uint(Cursor& cur, const char* what) {
    cur.skip_spaces();
    if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        std::uint64_t d = static_cast<std::uint64_t>(cur.peek() - '0');
        if (v > (UINT64_MAX - d) / 10) cur.fail("integer too large");
        v = v * 10 + d;
        cur.get();
    }
    return v;
}

inline void expect(Cursor& cur, std::string_view token) {
    cur.skip_spaces();
    for (char c : token) {
        if (cur.eof() || cur.peek() != c) cur.fail("expected '" + std::string(token) + "'");
        cur.get();
    }
}

inline bool at_keyword(const Cursor& cur, std::string_view kw) {
    return cur.text.substr(cur.pos, kw.size()) == kw;
}

inline void skip_to_line_end(Cursor& cur, bool allow_comment) {
    cur.skip_spaces();
    if (!cur.eof() && cur.peek() == '#' && allow_comment) {
        while (!cur.eof() && cur.peek() != '\n') cur.get();
    }
    if (cur.eof()) return;
    if (cur.peek() != '\n') cur.fail("unexpected trailing input");
    cur.get();
}

inline void skip_blank_and_comments(Cursor& cur) {
    while (!cur.eof()) {
        cur.skip_spaces();
        if (cur.eof()) return;
        if (cur.peek() == '\n') {
            cur.get();
            continue;
        }
        if (cur.peek() == '#') {
            while (!cur.eof() && cur.peek() != '\n') cur.get();
            continue;
        }
        return;
    }
}

inline ElemExpr parse_elem(Cursor& cur) {
    cur.skip_spaces();
    ElemExpr e;
    e.line = cur.line;
    e.col = cur.col;
    if (cur.eof()) cur.fail("expected an element");
    char c = cur.peek();
    if (c == '0') {
        cur.get();
        e.kind = ElemExpr::Kind::Zero;
        return e;
    }
    if (c == '1') {
        cur.get();
        e.kind = ElemExpr::Kind::Power;
        e.power = 0;
        return e;
    }
    if (c == 'a') {
        cur.get();
        e.kind = ElemExpr::Kind::Power;
        if (!cur.eof() && cur.peek() == '^') {
            cur.get();
            e.power = parse_uint(cur, "an exponent after 'a^'");
        } else {
            e.power = 1;
        }
        return e;
    }
    if (c == '[') {
        cur.get();
        e.kind = ElemExpr::Kind::Coords;
        while (true) {
            e.coords.push_back(parse_uint(cur, "a coordinate"));
            cur.skip_spaces();
            if (cur.eof()) cur.fail("unterminated coordinate list");
            if (cur.peek() == ',') {
                cur.get();
                continue;
            }
            if (cur.peek() == ']') {
                cur.get();
                return e;
            }
            cur.fail("expected ',' or ']' in coordinate list");
        }
    }
    cur.fail("expected an element: 0, 1, a, a^K or [c0,...]");
}

}  // namespace spec_detail

inline FlagSpecDocument parse_flagspec(std::string_view text) {
    using namespace spec_detail;
    Cursor cur{text};
    FlagSpecDocument doc;

    skip_blank_and_comments(cur);
    expect(cur, "field");
    expect(cur, "p=");
    doc.p = parse_uint(cur, "a prime after p=");
    expect(cur, "n=");
    doc.n = static_cast<std::size_t>(parse_uint(cur, "a degree after n="));
    cur.skip_spaces();
    if (!cur.eof() && at_keyword(cur, "poly=")) {
        expect(cur, "poly=");
        std::vector<Coeff> poly;
        while (true) {
            poly.push_back(static_cast<Coeff>(parse_uint(cur, "a modulus coefficient")));
            cur.skip_spaces();
            if (!cur.eof() && cur.peek() == ',') {
                cur.get();
                continue;
            }
            break;
        }
        doc.poly = std::move(poly);
    }
    skip_to_line_end(cur, true);

    while (true) {
        skip_blank_and_comments(cur);
        if (cur.eof() || !at_keyword(cur, "subspace")) break;
        expect(cur, "subspace");
        expect(cur, ":");
        std::vector<ElemExpr> gens;
        while (true) {
            gens.push_back(parse_elem(cur));
            cur.skip_spaces();
            if (!cur.eof() && cur.peek() == ',') {
                cur.get();
                continue;
            }
            break;
        }
        doc.subspace_gens.push_back(std::move(gens));
        skip_to_line_end(cur, true);
    }
    if (doc.subspace_gens.empty()) cur.fail("expected at least one 'subspace:' line");

    skip_blank_and_comments(cur);
    if (!cur.eof() && at_keyword(cur, "subgroup")) {
        expect(cur, "subgroup");
        expect(cur, "l=");
        doc.subgroup_l = parse_uint(cur, "a subgroup exponent after l=");
        skip_to_line_end(cur, true);
    }
    skip_blank_and_comments(cur);
    if (!cur.eof()) cur.fail("unexpected input after the flag specification");
    return doc;
}

/// A realized document: the owning field context plus the validated flag.
struct LoadedFlag {
    std::unique_ptr<FieldCtx> ctx;
    Flag flag;
    std::optional<std::uint64_t> subgroup_l;
};

inline FieldElem realize_elem(const FieldCtx& ctx, const ElemExpr& e) {
    switch (e.kind) {
        case ElemExpr::Kind::Zero:
            return ctx.zero();
        case ElemExpr::Kind::Power:
            return ctx.from_exponent(e.power);
        case ElemExpr::Kind::Coords: {
            if (e.coords.size() != ctx.n())
                throw flagforge::ParseError(e.line, e.col, "coordinate list must have exactly n entries");
            std::vector<Coeff> c(ctx.n());
            for (std::size_t i = 0; i < ctx.n(); ++i) {
                if (e.coords[i] >= ctx.p())
                    throw flagforge::ParseError(e.line, e.col, "coordinate must lie in [0, p)");
                c[i] = static_cast<Coeff>(e.coords[i]);
            }
            return ctx.from_coords(c.data());
        }
    }
    throw Error(Errc::InternalCheckFailed, "unhandled element kind");
}

inline LoadedFlag realize_flagspec(const FlagSpecDocument& doc, std::uint64_t table_cap = env_table_cap()) {
    std::unique_ptr<FieldCtx> ctx = build_field_ptr(doc.p, doc.n, doc.poly, table_cap);
    std::vector<Subspace> subs;
    for (const auto& gens : doc.subspace_gens) {
        std::vector<FieldElem> elems;
        elems.reserve(gens.size());
        for (const ElemExpr& e : gens) elems.push_back(realize_elem(*ctx, e));
        subs.push_back(Subspace::from_generators(*ctx, elems));
    }
    Flag flag = Flag::make(std::move(subs));
    if (doc.subgroup_l.has_value() && (*doc.subgroup_l == 0 || ctx->order_star() % *doc.subgroup_l != 0))
        throw Error(Errc::NotADivisor, "subgroup exponent l must divide p^n - 1");
    return LoadedFlag{std::move(ctx), std::move(flag), doc.subgroup_l};
}

}  // namespace flagforge
