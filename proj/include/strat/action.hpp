#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strat/rational.hpp"

namespace strat {

// ---------------------------------------------------------------------------
// Data model for a linearized torus action on projective space: the weights
// alpha_0..alpha_n of the diagonal action, the invariant inner product, and
// an optional root datum when the torus sits inside a larger compact group.
// ---------------------------------------------------------------------------

struct SupportSet {
    std::vector<int> indices;  // sorted, distinct, nonempty

    SupportSet() = default;
    explicit SupportSet(std::vector<int> idx);
    static SupportSet from_mask(uint32_t mask);

    int size() const { return static_cast<int>(indices.size()); }
    bool contains(int i) const;
    uint32_t mask() const;

    bool operator==(const SupportSet& o) const { return indices == o.indices; }
    bool operator<(const SupportSet& o) const { return indices < o.indices; }
    std::string str() const;
};

struct RootDatum {
    std::vector<RationalVector> positive_roots;
    std::vector<RationalVector> simple_roots;
    InnerProduct ip;  // the system's invariant form; reflections need it

    RootDatum(std::vector<RationalVector> positive, std::vector<RationalVector> simple,
              InnerProduct form);

    int rank() const { return ip.rank(); }
    // s_alpha(xi) = xi - 2 <xi,alpha>/<alpha,alpha> alpha.
    RationalVector reflect(const RationalVector& xi, const RationalVector& alpha) const;
};

struct WeightSystem {
    int rank = 0;                         // r = dim t
    std::vector<RationalVector> weights;  // alpha_0..alpha_n
    InnerProduct ip;
    std::optional<std::vector<std::string>> labels;

    WeightSystem(int r, std::vector<RationalVector> w, InnerProduct form,
                 std::optional<std::vector<std::string>> lab = std::nullopt);

    int n() const { return static_cast<int>(weights.size()) - 1; }
    const RationalVector& weight(int i) const { return weights[static_cast<size_t>(i)]; }
    std::vector<RationalVector> weights_of(const SupportSet& s) const;
};

// Point of P^n seen through its coordinate masses t_i = |x_i|^2 / |x|^2.
struct PointSample {
    std::vector<Rational> masses;  // nonnegative, sum exactly 1

    explicit PointSample(std::vector<Rational> m);
    SupportSet support() const;
};

struct ActionData {
    WeightSystem ws;
    std::optional<RootDatum> rd;
};

// Parse + validate the JSON input document (schema in the README). The Gram
// matrix defaults to the identity when absent.
ActionData load_action(const std::string& text);

// Canonical serialization; load_action(serialize_action(a)) reproduces a.
std::string serialize_action(const ActionData& a);

// mu_T(p) = sum_i t_i alpha_i.
RationalVector moment_value(const WeightSystem& ws, const PointSample& p);

// True iff <xi, alpha> >= 0 for every simple root (vacuously true without roots).
bool chamber_membership(const RationalVector& xi, const RootDatum& rd);

}  // namespace strat
