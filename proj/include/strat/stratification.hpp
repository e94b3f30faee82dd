#pragma once

#include <map>
#include <optional>
#include <vector>

#include "strat/action.hpp"
#include "strat/geometry.hpp"

namespace strat {

// One index beta of the Morse stratification of ||mu||^2, together with the
// combinatorial supports of its fixed locus Z_beta and flow-in set Y_beta.
struct StratumIndex {
    RationalVector beta;
    Rational norm_sq;
    SupportSet z_support;  // {i : <alpha_i, beta> = <beta, beta>}
    SupportSet y_support;  // {i : <alpha_i, beta> >= <beta, beta>}
    int codim = 0;         // d(beta), complex codimension of the stratum
    int fiber_dim = 0;     // m_beta = |y_support| - |z_support|
    std::vector<RationalVector> stabilizer_roots;  // roots orthogonal to beta
};

struct StabilityClass {
    enum class Tag { Unstable, Semistable, Stable };
    Tag tag;
    std::optional<RationalVector> beta;  // present iff Unstable

    static StabilityClass stable() { return {Tag::Stable, std::nullopt}; }
    static StabilityClass semistable() { return {Tag::Semistable, std::nullopt}; }
    static StabilityClass unstable(RationalVector b) { return {Tag::Unstable, std::move(b)}; }
    bool operator==(const StabilityClass& o) const { return tag == o.tag && beta == o.beta; }
};

// All beta such that beta is the min-norm point of the hull of the weights
// pinned to its own level set, and beta arises from some nonempty support.
// With a root datum, only chamber representatives are kept. Sorted by
// (norm_sq ascending, then lexicographic on coordinates).
std::vector<StratumIndex> index_set(const WeightSystem& ws,
                                    const std::optional<RootDatum>& rd = std::nullopt);

// d(beta) = #{i : <alpha_i,beta> < <beta,beta>} - #{gamma in R+ : <gamma,beta> > 0}.
int stratum_codim(const StratumIndex& si, const WeightSystem& ws,
                  const std::optional<RootDatum>& rd = std::nullopt);

// Hilbert-Mumford for the torus: position of the origin in the support hull.
StabilityClass classify_support(const SupportSet& s, const WeightSystem& ws);

// beta for every nonempty support; the fibers partition the support lattice.
std::map<SupportSet, RationalVector> strata_partition(const WeightSystem& ws);

// Numeric gradient-descent oracle for the stratum assignment. Integrates
//   dt_i/ds = -2 t_i (<alpha_i, mu(t)> - <mu(t), mu(t)>),  mu(t) = sum t_j alpha_j
// on the mass simplex with a fixed-step RK4 scheme.
struct DescentResult {
    std::vector<double> mu;  // moment value at the final state
    bool converged = false;
    long steps = 0;
    double residual = 0.0;
};

DescentResult simulate_descent(const WeightSystem& ws, const PointSample& p,
                               double step = 1e-2, double tol = 1e-9,
                               long max_steps = 1000000);

// Shared guard for the support enumerations.
inline constexpr int kMaxEnumerationWeights = 20;

}  // namespace strat
