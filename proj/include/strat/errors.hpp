#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace strat {

// Base class for everything this library throws on bad input or bad state.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty input point set") {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what) : Error("rank mismatch: " + what) {}
};

struct ZeroDirection : Error {
    ZeroDirection() : Error("ray direction is the zero vector") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("ValidationError: " + what) {}
};

struct NegativeCodim : Error {
    explicit NegativeCodim(const std::string& what) : Error("negative codimension: " + what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("enumeration guard exceeded: " + what) {}
};

// Strictly semistable supports block the Betti computation; carries one witness.
struct StrictlySemistable : Error {
    std::vector<int> support;
    explicit StrictlySemistable(std::vector<int> s, const std::string& what)
        : Error("strictly semistable support: " + what), support(std::move(s)) {}
};

struct NotPolynomial : Error {
    explicit NotPolynomial(const std::string& what) : Error("series is not a polynomial: " + what) {}
};

struct ZeroBeta : Error {
    ZeroBeta() : Error("operation requires a nonzero stratum index") {}
};

struct NonPositiveEpsilon : Error {
    NonPositiveEpsilon() : Error("epsilon must be positive") {}
};

struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& what) : Error("reflection group too large: " + what) {}
};

struct NotInChamber : Error {
    explicit NotInChamber(const std::string& what) : Error("point not in the positive chamber: " + what) {}
};

}  // namespace strat
