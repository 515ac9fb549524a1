#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagforge {

enum class Errc {
    NotPrime,
    NotPrimitive,
    TableCapExceeded,
    ZeroHasNoOrder,
    NotADivisor,
    AllZeroGenerators,
    CtxMismatch,
    ScaleByZero,
    EnumerationCapExceeded,
    NotNested,
    FullOrZeroSubspace,
    TypeMismatch,
    IndexOutOfRange,
    MixedDimensions,
    NotAFriend,
    NotDivisorChain,
    InvalidType,
    NotAFriendDimension,
    DegenerateCase,
    ParseError,
    PairCapExceeded,
    InvalidArgument,
    InternalCheckFailed,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::TableCapExceeded: return "TableCapExceeded";
        case Errc::ZeroHasNoOrder: return "ZeroHasNoOrder";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::AllZeroGenerators: return "AllZeroGenerators";
        case Errc::CtxMismatch: return "CtxMismatch";
        case Errc::ScaleByZero: return "ScaleByZero";
        case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case Errc::NotNested: return "NotNested";
        case Errc::FullOrZeroSubspace: return "FullOrZeroSubspace";
        case Errc::TypeMismatch: return "TypeMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::MixedDimensions: return "MixedDimensions";
        case Errc::NotAFriend: return "NotAFriend";
        case Errc::NotDivisorChain: return "NotDivisorChain";
        case Errc::InvalidType: return "InvalidType";
        case Errc::NotAFriendDimension: return "NotAFriendDimension";
        case Errc::DegenerateCase: return "DegenerateCase";
        case Errc::ParseError: return "ParseError";
        case Errc::PairCapExceeded: return "PairCapExceeded";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Input parse failure with a 1-based source position.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error(Errc::ParseError,
                "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + reason),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace flagforge
