#include "idem/bellman.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace idem {

namespace {

void validate_shapes(int an, int am, int bn, const char* who) {
    if (an != am)
        raise(Errc::DimensionMismatch,
              std::string(who) + ": A must be square, got " +
                  std::to_string(an) + "x" + std::to_string(am));
    if (bn != an)
        raise(Errc::DimensionMismatch,
              std::string(who) + ": B has " + std::to_string(bn) +
                  " rows, expected " + std::to_string(an));
}

}  // namespace

BellmanProblem BellmanProblem::point(Matrix a, Matrix b) {
    validate_shapes(a.rows(), a.cols(), b.rows(), "bellman");
    if (&a.semiring() != &b.semiring())
        raise(Errc::ModeMismatch, "bellman: A and B use different semirings");
    BellmanProblem p;
    p.point_a = std::move(a);
    p.point_b = std::move(b);
    return p;
}

BellmanProblem BellmanProblem::interval(IntervalMatrix a, IntervalMatrix b) {
    validate_shapes(a.rows(), a.cols(), b.rows(), "bellman");
    if (&a.semiring() != &b.semiring())
        raise(Errc::ModeMismatch, "bellman: A and B use different semirings");
    if (a.mode() != b.mode())
        raise(Errc::ModeMismatch, "bellman: A and B interval modes differ");
    BellmanProblem p;
    p.iv_a = std::move(a);
    p.iv_b = std::move(b);
    return p;
}

const Semiring& BellmanProblem::semiring() const {
    return is_interval() ? iv_a->semiring() : point_a->semiring();
}

int BellmanProblem::n() const {
    return is_interval() ? iv_a->rows() : point_a->rows();
}

int BellmanProblem::s() const {
    return is_interval() ? iv_b->cols() : point_b->cols();
}

IntervalMatrix BellmanProblem::interval_a(IvMode mode) const {
    return is_interval() ? *iv_a : IntervalMatrix::degenerate(*point_a, mode);
}

IntervalMatrix BellmanProblem::interval_b(IvMode mode) const {
    return is_interval() ? *iv_b : IntervalMatrix::degenerate(*point_b, mode);
}

Matrix solve_point(const Matrix& a, const Matrix& b) {
    validate_shapes(a.rows(), a.cols(), b.rows(), "solve_point");
    return mul(closure(a), b);
}

IntervalMatrix solve_interval(const IntervalMatrix& a,
                              const IntervalMatrix& b) {
    validate_shapes(a.rows(), a.cols(), b.rows(), "solve_interval");
    if (a.mode() != b.mode())
        raise(Errc::ModeMismatch,
              "solve_interval: A and B interval modes differ");
    Matrix lo = solve_point(a.lower(), b.lower());
    Matrix hi = solve_point(a.upper(), b.upper());
    return IntervalMatrix(std::move(lo), std::move(hi), a.mode());
}

namespace {

bool near_equal_nonneg(double x, double y, double rel) {
    if (x == y) return true;
    return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

// Stabilization test: exact for idempotent profiles (iterates are
// selections), relative 1e-10 for nonneg-real (convergence semantics).
bool stabilized(const IntervalMatrix& x, const IntervalMatrix& y) {
    const Semiring& sr = x.semiring();
    if (sr.flags().idempotent) return x == y;
    constexpr double kRel = 1e-10;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            if (!near_equal_nonneg(x.lower().at(i, j).num(),
                                   y.lower().at(i, j).num(), kRel))
                return false;
            if (!near_equal_nonneg(x.upper().at(i, j).num(),
                                   y.upper().at(i, j).num(), kRel))
                return false;
        }
    return true;
}

}  // namespace

IterationTrace iterate(const IntervalMatrix& a, const IntervalMatrix& b,
                       const IntervalMatrix& x0, int max_k) {
    validate_shapes(a.rows(), a.cols(), b.rows(), "iterate");
    if (x0.rows() != b.rows() || x0.cols() != b.cols())
        raise(Errc::DimensionMismatch, "iterate: X0 shape must match B");
    if (max_k <= 0) max_k = 2 * a.rows() + 2;

    IterationTrace trace;
    try {
        IntervalMatrix fixed = solve_interval(a, b);
        trace.precondition = is_true(leq(x0, fixed))
                                 ? Precondition::Verified
                                 : Precondition::Violated;
    } catch (const AlgebraError&) {
        trace.precondition = Precondition::Unverified;
    }

    trace.iterates.push_back(x0);
    IntervalMatrix x = x0;
    for (int k = 1; k <= max_k; ++k) {
        IntervalMatrix next = add(mul(a, x), b);
        if (stabilized(x, next)) {
            trace.stabilized_at = k - 1;
            trace.converged = true;
            return trace;
        }
        trace.iterates.push_back(next);
        x = std::move(next);
    }
    trace.converged = false;
    return trace;
}

bool spectral_criterion(const IntervalMatrix& a) {
    const Semiring& sr = a.semiring();
    return is_true(sr.leq(spectral_radius(a.upper()), sr.one()));
}

namespace {

// Per-sample deterministic stream, independent of evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return std::mt19937_64(z ^ (z >> 31));
}

Value draw_entry(const Interval& iv, std::mt19937_64& rng) {
    if (iv.degenerate()) return iv.lo();
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double u = uni(rng);
    if (u < 0.35) return iv.lo();
    if (u < 0.70) return iv.hi();
    // interior point: affine blend on the real scale, available only when
    // both bounds are finite; infinite or boolean bounds are drawn as-is
    if (iv.lo().is_finite() && iv.hi().is_finite()) {
        double t = uni(rng);
        double v = iv.lo().num() + t * (iv.hi().num() - iv.lo().num());
        v = std::clamp(v, iv.lo().num(), iv.hi().num());
        return Value::finite(v);
    }
    return u < 0.85 ? iv.lo() : iv.hi();
}

Matrix draw_matrix(const IntervalMatrix& m, std::mt19937_64& rng) {
    Matrix r(m.semiring(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.set(i, j, draw_entry(m.at(i, j), rng));
    return r;
}

bool entry_contained(const Semiring& sr, const Value& x, const Value& lo,
                     const Value& hi, double tol) {
    if (tol <= 0.0 || sr.instance() != Instance::NonnegReal)
        return is_true(sr.leq(lo, x)) && is_true(sr.leq(x, hi));
    double slack_lo = tol * std::max(1.0, lo.num());
    double slack_hi = tol * std::max(1.0, hi.num());
    return x.num() >= lo.num() - slack_lo && x.num() <= hi.num() + slack_hi;
}

bool matrix_contained(const IntervalMatrix& box, const Matrix& x, double tol) {
    const Semiring& sr = box.semiring();
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!entry_contained(sr, x.at(i, j), box.lower().at(i, j),
                                 box.upper().at(i, j), tol))
                return false;
    return true;
}

bool matrix_near(const Semiring& sr, const Matrix& a, const Matrix& b,
                 double tol) {
    if (tol <= 0.0 || sr.instance() != Instance::NonnegReal) return a == b;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!near_equal_nonneg(a.at(i, j).num(), b.at(i, j).num(), tol))
                return false;
    return true;
}

}  // namespace

SampleReport sample_united_check(const IntervalMatrix& a,
                                 const IntervalMatrix& b, int samples,
                                 std::uint64_t seed, double tol) {
    const Semiring& sr = a.semiring();
    if (tol < 0.0)
        tol = sr.instance() == Instance::NonnegReal ? 1e-9 : 0.0;

    IntervalMatrix box = solve_interval(a, b);

    SampleReport report;
    report.requested = samples;
    report.tolerance = tol;

    // Corner draws witness sharpness of both bounds.
    Matrix lo_sol = solve_point(a.lower(), b.lower());
    Matrix hi_sol = solve_point(a.upper(), b.upper());
    report.lower_attained = matrix_near(sr, lo_sol, box.lower(), tol);
    report.upper_attained = matrix_near(sr, hi_sol, box.upper(), tol);
    report.evaluated = 2;
    if (!matrix_contained(box, lo_sol, tol)) ++report.containment_failures;
    if (!matrix_contained(box, hi_sol, tol)) ++report.containment_failures;

    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(s));
        Matrix sa = draw_matrix(a, rng);
        Matrix sb = draw_matrix(b, rng);
        Matrix x = solve_point(sa, sb);
        ++report.evaluated;
        if (!matrix_contained(box, x, tol)) ++report.containment_failures;
    }
    return report;
}

}  // namespace idem
