#include "strat/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace strat {

namespace {

void check_points(const std::vector<RationalVector>& points) {
    if (points.empty()) throw EmptyInput();
    const int r = points.front().rank();
    for (const auto& p : points)
        if (p.rank() != r) throw RankMismatch("point set has mixed ranks");
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact simplex, dense tableau, Bland's rule (no cycling).
// ---------------------------------------------------------------------------

namespace lp {

namespace {

struct Tableau {
    int rows = 0;
    int cols = 0;                            // variable columns, rhs excluded
    std::vector<std::vector<Rational>> t;    // rows x (cols+1); last entry = rhs
    std::vector<int> basis;                  // basic variable per row

    Rational& rhs(int i) { return t[static_cast<size_t>(i)].back(); }

    void pivot(int prow, int pcol) {
        auto& pr = t[static_cast<size_t>(prow)];
        const Rational piv = pr[static_cast<size_t>(pcol)];
        for (auto& v : pr) v /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == prow) continue;
            auto& row = t[static_cast<size_t>(i)];
            const Rational f = row[static_cast<size_t>(pcol)];
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j)
                row[static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(prow)] = pcol;
    }

    // Minimize cost over columns [0, ncols_active). Returns false when
    // unbounded. Bland's rule on both the entering and leaving choice.
    bool run(const std::vector<Rational>& cost, int ncols_active) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_active; ++j) {
                Rational red = cost[static_cast<size_t>(j)];
                for (int i = 0; i < rows; ++i) {
                    const int b = basis[static_cast<size_t>(i)];
                    if (cost[static_cast<size_t>(b)] == 0) continue;
                    red -= cost[static_cast<size_t>(b)] * t[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
                if (red < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                const Rational& a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (a <= 0) continue;
                Rational ratio = rhs(i) / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result solve(const std::vector<std::vector<Rational>>& a,
             const std::vector<Rational>& b,
             const std::vector<Rational>& c) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    assert(static_cast<int>(b.size()) == m);

    Tableau tab;
    tab.rows = m;
    tab.cols = n + m;  // artificials appended
    tab.t.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(tab.cols) + 1, Rational(0)));
    tab.basis.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        assert(static_cast<int>(a[static_cast<size_t>(i)].size()) == n);
        const bool flip = b[static_cast<size_t>(i)] < 0;
        for (int j = 0; j < n; ++j) {
            const Rational& v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = flip ? Rational(-v) : v;
        }
        tab.t[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
        tab.rhs(i) = flip ? Rational(-b[static_cast<size_t>(i)]) : b[static_cast<size_t>(i)];
        tab.basis[static_cast<size_t>(i)] = n + i;
    }

    // Phase I: drive the artificials to zero.
    std::vector<Rational> phase1(static_cast<size_t>(tab.cols), Rational(0));
    for (int j = n; j < tab.cols; ++j) phase1[static_cast<size_t>(j)] = 1;
    const bool bounded = tab.run(phase1, tab.cols);
    assert(bounded);
    (void)bounded;
    Rational infeas(0);
    for (int i = 0; i < m; ++i)
        if (tab.basis[static_cast<size_t>(i)] >= n) infeas += tab.rhs(i);
    if (infeas > 0) return {Status::Infeasible, Rational(0), {}};

    // Pivot leftover artificials out; drop redundant rows.
    for (int i = 0; i < tab.rows;) {
        if (tab.basis[static_cast<size_t>(i)] < n) {
            ++i;
            continue;
        }
        int j = 0;
        while (j < n && tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) ++j;
        if (j < n) {
            tab.pivot(i, j);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.rows;
        }
    }

    // Phase II over the original columns only.
    std::vector<Rational> cost(static_cast<size_t>(tab.cols), Rational(0));
    for (int j = 0; j < n; ++j) cost[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    if (!tab.run(cost, n)) return {Status::Unbounded, Rational(0), {}};

    Result res;
    res.status = Status::Optimal;
    res.x.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < tab.rows; ++i)
        if (tab.basis[static_cast<size_t>(i)] < n)
            res.x[static_cast<size_t>(tab.basis[static_cast<size_t>(i)])] = tab.rhs(i);
    res.objective = 0;
    for (int j = 0; j < n; ++j) res.objective += c[static_cast<size_t>(j)] * res.x[static_cast<size_t>(j)];
    return res;
}

}  // namespace lp

// ---------------------------------------------------------------------------
// Affine rank
// ---------------------------------------------------------------------------

int affine_rank(const std::vector<RationalVector>& points) {
    check_points(points);
    const int r = points.front().rank();
    std::vector<std::vector<Rational>> rows;
    for (size_t k = 1; k < points.size(); ++k) {
        RationalVector d = points[k] - points[0];
        rows.push_back(d.coords);
    }
    // Row-echelon rank over Q.
    int rank = 0;
    for (int col = 0; col < r && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rank)]);
        const auto& prow = rows[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            if (row[static_cast<size_t>(col)] == 0) continue;
            Rational f = row[static_cast<size_t>(col)] / prow[static_cast<size_t>(col)];
            for (int j = col; j < r; ++j)
                row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Hull membership / relative position of the origin
// ---------------------------------------------------------------------------

HullPosition hull_position_of_origin(const std::vector<RationalVector>& points,
                                     const InnerProduct& ip) {
    check_points(points);
    (void)ip;  // membership is affine-invariant; kept for interface symmetry
    const int r = points.front().rank();
    const int n = static_cast<int>(points.size());

    // Variables: lambda_0..lambda_{n-1}, t, u_0..u_{n-1}.
    // sum lambda_i alpha_i = 0; sum lambda_i = 1; lambda_i - t - u_i = 0.
    // Maximize t: feasible with t=0 iff 0 in hull; optimum t>0 iff the origin
    // is a strictly positive convex combination.
    const int nv = 2 * n + 1;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int row = 0; row < r; ++row) {
        std::vector<Rational> arow(static_cast<size_t>(nv), Rational(0));
        for (int i = 0; i < n; ++i) arow[static_cast<size_t>(i)] = points[static_cast<size_t>(i)][row];
        A.push_back(std::move(arow));
        b.emplace_back(0);
    }
    {
        std::vector<Rational> arow(static_cast<size_t>(nv), Rational(0));
        for (int i = 0; i < n; ++i) arow[static_cast<size_t>(i)] = 1;
        A.push_back(std::move(arow));
        b.emplace_back(1);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> arow(static_cast<size_t>(nv), Rational(0));
        arow[static_cast<size_t>(i)] = 1;
        arow[static_cast<size_t>(n)] = -1;
        arow[static_cast<size_t>(n + 1 + i)] = -1;
        A.push_back(std::move(arow));
        b.emplace_back(0);
    }
    std::vector<Rational> c(static_cast<size_t>(nv), Rational(0));
    c[static_cast<size_t>(n)] = -1;  // maximize t

    const lp::Result res = lp::solve(A, b, c);
    if (res.status == lp::Status::Infeasible) return HullPosition::Outside;
    assert(res.status == lp::Status::Optimal);  // t <= 1 on the feasible set
    if (res.objective < 0 && affine_rank(points) == r) return HullPosition::Interior;
    return HullPosition::Boundary;
}

// ---------------------------------------------------------------------------
// Ray-hull window
// ---------------------------------------------------------------------------

std::optional<RayWindow> ray_hull_window(const RationalVector& direction,
                                         const std::vector<RationalVector>& points,
                                         const InnerProduct& ip) {
    check_points(points);
    (void)ip;
    if (direction.is_zero()) throw ZeroDirection();
    const int r = points.front().rank();
    if (direction.rank() != r) throw RankMismatch("ray direction");
    const int n = static_cast<int>(points.size());

    // Variables: lambda_0..lambda_{n-1}, s.
    // sum lambda_i alpha_i - s d = 0; sum lambda_i = 1; all vars >= 0.
    const int nv = n + 1;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int row = 0; row < r; ++row) {
        std::vector<Rational> arow(static_cast<size_t>(nv), Rational(0));
        for (int i = 0; i < n; ++i) arow[static_cast<size_t>(i)] = points[static_cast<size_t>(i)][row];
        arow[static_cast<size_t>(n)] = -direction[row];
        A.push_back(std::move(arow));
        b.emplace_back(0);
    }
    {
        std::vector<Rational> arow(static_cast<size_t>(nv), Rational(0));
        for (int i = 0; i < n; ++i) arow[static_cast<size_t>(i)] = 1;
        A.push_back(std::move(arow));
        b.emplace_back(1);
    }

    std::vector<Rational> cmin(static_cast<size_t>(nv), Rational(0));
    cmin[static_cast<size_t>(n)] = 1;
    const lp::Result lo = lp::solve(A, b, cmin);
    if (lo.status == lp::Status::Infeasible) return std::nullopt;
    assert(lo.status == lp::Status::Optimal);

    std::vector<Rational> cmax(static_cast<size_t>(nv), Rational(0));
    cmax[static_cast<size_t>(n)] = -1;
    const lp::Result hi = lp::solve(A, b, cmax);
    // s d ranges over a compact hull and d != 0, so s is bounded.
    assert(hi.status == lp::Status::Optimal);

    return RayWindow{lo.objective, -hi.objective};
}

// ---------------------------------------------------------------------------
// Min-norm point of a convex hull: Wolfe's method in exact arithmetic.
// ---------------------------------------------------------------------------

namespace {

// Coefficients of the norm minimizer over the affine hull of the corral.
// Solves the bordered Gram system; the corral stays affinely independent, so
// the system is nonsingular.
std::vector<Rational> affine_minimizer_coeffs(const std::vector<RationalVector>& pts,
                                              const std::vector<int>& corral,
                                              const InnerProduct& ip) {
    const int k = static_cast<int>(corral.size());
    std::vector<std::vector<Rational>> m(static_cast<size_t>(k) + 1,
                                         std::vector<Rational>(static_cast<size_t>(k) + 2, Rational(0)));
    for (int j = 0; j < k; ++j) m[0][static_cast<size_t>(j) + 1] = 1;
    m[0].back() = 1;
    for (int i = 0; i < k; ++i) {
        m[static_cast<size_t>(i) + 1][0] = 1;
        for (int j = 0; j < k; ++j)
            m[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1] =
                ip.dot(pts[static_cast<size_t>(corral[static_cast<size_t>(i)])],
                       pts[static_cast<size_t>(corral[static_cast<size_t>(j)])]);
    }
    // Gaussian elimination with first-nonzero pivoting.
    const int dim = k + 1;
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        while (piv < dim && m[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
        if (piv == dim) throw std::logic_error("degenerate corral in min_norm_point");
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
        const Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (auto& v : m[static_cast<size_t>(col)]) v /= p;
        for (int i = 0; i < dim; ++i) {
            if (i == col) continue;
            const Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= dim; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    std::vector<Rational> mu(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] = m[static_cast<size_t>(i) + 1].back();
    return mu;
}

RationalVector combine(const std::vector<RationalVector>& pts,
                       const std::vector<int>& corral,
                       const std::vector<Rational>& lambda) {
    RationalVector x = RationalVector::zero(pts.front().rank());
    for (size_t i = 0; i < corral.size(); ++i) {
        const RationalVector& p = pts[static_cast<size_t>(corral[i])];
        for (int j = 0; j < x.rank(); ++j) x[j] += lambda[i] * p[j];
    }
    return x;
}

}  // namespace

RationalVector min_norm_point(const std::vector<RationalVector>& points,
                              const InnerProduct& ip) {
    check_points(points);
    const int r = points.front().rank();
    if (ip.rank() != r) throw RankMismatch("inner product rank");

    // Start from the shortest input point.
    size_t best = 0;
    Rational best_norm = ip.norm_sq(points[0]);
    for (size_t i = 1; i < points.size(); ++i) {
        Rational nn = ip.norm_sq(points[i]);
        if (nn < best_norm) {
            best_norm = nn;
            best = i;
        }
    }
    std::vector<int> corral{static_cast<int>(best)};
    std::vector<Rational> lambda{Rational(1)};
    RationalVector x = points[best];

    const long max_iter = 1000000;
    for (long iter = 0; iter < max_iter; ++iter) {
        // Optimality: the variational inequality <x, p - x> >= 0 for all p.
        const Rational xx = ip.norm_sq(x);
        int enter = -1;
        Rational enter_val;
        for (size_t i = 0; i < points.size(); ++i) {
            Rational v = ip.dot(x, points[i]);
            if (enter < 0 || v < enter_val) {
                enter = static_cast<int>(i);
                enter_val = v;
            }
        }
        if (enter_val >= xx) return x;

        corral.push_back(enter);
        lambda.emplace_back(0);

        // Minor cycles: restore a corral whose affine minimizer has strictly
        // positive coefficients.
        for (;;) {
            std::vector<Rational> mu = affine_minimizer_coeffs(points, corral, ip);
            bool all_pos = true;
            for (const auto& v : mu)
                if (v <= 0) {
                    all_pos = false;
                    break;
                }
            if (all_pos) {
                lambda = std::move(mu);
                break;
            }
            // Step from lambda toward mu until the first coefficient vanishes.
            Rational theta(1);
            for (size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] > 0) continue;
                Rational t = lambda[i] / (lambda[i] - mu[i]);
                if (t < theta) theta = t;
            }
            std::vector<int> next_corral;
            std::vector<Rational> next_lambda;
            for (size_t i = 0; i < mu.size(); ++i) {
                Rational v = (1 - theta) * lambda[i] + theta * mu[i];
                if (v == 0) continue;
                next_corral.push_back(corral[i]);
                next_lambda.push_back(std::move(v));
            }
            corral = std::move(next_corral);
            lambda = std::move(next_lambda);
        }
        x = combine(points, corral, lambda);
    }
    throw std::logic_error("min_norm_point failed to terminate");
}

}  // namespace strat
