#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "strat/errors.hpp"

namespace strat {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), so equality is structural.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// ---------------------------------------------------------------------------
// RationalVector: element of t ~ t* with a fixed ambient rank.
// ---------------------------------------------------------------------------

struct RationalVector {
    std::vector<Rational> coords;

    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> c) : coords(std::move(c)) {}
    static RationalVector zero(int rank) {
        return RationalVector(std::vector<Rational>(static_cast<size_t>(rank), Rational(0)));
    }

    int rank() const { return static_cast<int>(coords.size()); }
    const Rational& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return coords[static_cast<size_t>(i)]; }

    bool is_zero() const;

    RationalVector operator+(const RationalVector& o) const;
    RationalVector operator-(const RationalVector& o) const;
    RationalVector operator*(const Rational& s) const;

    bool operator==(const RationalVector& o) const { return coords == o.coords; }
    bool operator!=(const RationalVector& o) const { return !(*this == o); }
    // Entrywise numeric comparison, used for canonical orderings.
    bool operator<(const RationalVector& o) const;

    std::string str() const;
};

// ---------------------------------------------------------------------------
// InnerProduct: symmetric positive definite Gram matrix on t.
// Definiteness is checked at construction (leading principal minors > 0).
// ---------------------------------------------------------------------------

class InnerProduct {
  public:
    // Identity Gram matrix of the given rank.
    static InnerProduct identity(int rank);
    explicit InnerProduct(std::vector<std::vector<Rational>> gram);

    int rank() const { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }

    Rational dot(const RationalVector& a, const RationalVector& b) const;
    Rational norm_sq(const RationalVector& a) const { return dot(a, a); }

  private:
    std::vector<std::vector<Rational>> gram_;
};

}  // namespace strat
