#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringline {

enum class ErrorCode {
    NotClosed,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
    NoUnity,
    ZeroIndexNotZero,
    OrderTooLarge,
    NotIrreducible,
    NotPrime,
    NotAutomorphism,
    ClosureTooLarge,
    SyntaxError,
    RightLineBreakdown,
    NoDistantPair,
    UnknownCandidate,
    UnknownRecipe,
    InvalidArgument,
    Internal,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotAbelianGroup: return "NotAbelianGroup";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NotDistributive: return "NotDistributive";
        case ErrorCode::NoUnity: return "NoUnity";
        case ErrorCode::ZeroIndexNotZero: return "ZeroIndexNotZero";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotAutomorphism: return "NotAutomorphism";
        case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::RightLineBreakdown: return "RightLineBreakdown";
        case ErrorCode::NoDistantPair: return "NoDistantPair";
        case ErrorCode::UnknownCandidate: return "UnknownCandidate";
        case ErrorCode::UnknownRecipe: return "UnknownRecipe";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

/// Base exception for every failure raised by the library. The message is
/// prefixed with the code name so CLI output carries it verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Right unit-orbits of admissible pairs with unequal cardinalities.
/// classSizes maps orbit size -> number of orbits of that size.
class RightLineBreakdown : public Error {
public:
    explicit RightLineBreakdown(std::map<std::size_t, std::size_t> sizes)
        : Error(ErrorCode::RightLineBreakdown, describe(sizes)), classSizes_(std::move(sizes)) {}

    const std::map<std::size_t, std::size_t>& classSizes() const noexcept { return classSizes_; }

private:
    static std::string describe(const std::map<std::size_t, std::size_t>& sizes) {
        std::string s = "right equivalence classes have unequal sizes {";
        bool first = true;
        for (auto [size, count] : sizes) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(size) + "x" + std::to_string(count);
        }
        return s + "}";
    }

    std::map<std::size_t, std::size_t> classSizes_;
};

}  // namespace ringline
