#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idem/interval.hpp"

namespace idem {

/// One instance of X = AX add B, in point or interval form.
struct BellmanProblem {
    std::optional<Matrix> point_a, point_b;
    std::optional<IntervalMatrix> iv_a, iv_b;

    static BellmanProblem point(Matrix a, Matrix b);
    static BellmanProblem interval(IntervalMatrix a, IntervalMatrix b);

    bool is_interval() const { return iv_a.has_value(); }
    const Semiring& semiring() const;
    int n() const;
    int s() const;

    /// Interval view; point problems embed as degenerate intervals.
    IntervalMatrix interval_a(IvMode mode = IvMode::Weak) const;
    IntervalMatrix interval_b(IvMode mode = IvMode::Weak) const;
};

/// Minimal solution A*B of X = AX add B. The result satisfies the equation
/// exactly and every other solution lies above it.
Matrix solve_point(const Matrix& a, const Matrix& b);

/// A*B computed per bound: the least interval containing every minimal
/// point solution with A in the interval of matrices and B likewise, with
/// both bounds attained at the corner instances. O(n^3 + n^2 s) semiring
/// operations per bound.
IntervalMatrix solve_interval(const IntervalMatrix& a,
                              const IntervalMatrix& b);

enum class Precondition { Verified, Violated, Unverified };

struct IterationTrace {
    /// X0, X1, ..., X_m with X_m the last distinct iterate.
    std::vector<IntervalMatrix> iterates;
    /// Set to m when X_{m+1} = X_m was observed (exactly for idempotent
    /// profiles, within relative 1e-10 for nonneg-real).
    std::optional<int> stabilized_at;
    bool converged = false;
    /// Whether X0 <= A*B could be confirmed before iterating.
    Precondition precondition = Precondition::Unverified;
};

/// Runs X_{k+1} = A X_k add B for at most max_k steps (defaults to 2n + 2
/// when max_k <= 0). Non-convergence is reported through the trace rather
/// than thrown so callers can inspect the divergent iterates.
IterationTrace iterate(const IntervalMatrix& a, const IntervalMatrix& b,
                       const IntervalMatrix& x0, int max_k = 0);

/// spectral_radius(upper(A)) <= unity: guarantees the iteration stabilizes
/// to A*B within n steps from any X0 <= A*B.
bool spectral_criterion(const IntervalMatrix& a);

struct SampleReport {
    int requested = 0;
    int evaluated = 0;  // requested + the two corner draws
    int containment_failures = 0;
    bool lower_attained = false;
    bool upper_attained = false;
    double tolerance = 0.0;
};

/// Validation harness for the outer-estimate theorem: draws `samples`
/// instances elementwise from {lo, hi, blend}, solves each, and reports
/// containment in solve_interval(a, b) plus bound attainment at the two
/// corners. tol < 0 selects 0 for idempotent profiles and 1e-9 for
/// nonneg-real.
SampleReport sample_united_check(const IntervalMatrix& a,
                                 const IntervalMatrix& b, int samples,
                                 std::uint64_t seed, double tol = -1.0);

}  // namespace idem
