#include "idem/interval.hpp"

#include <string>

namespace idem {

namespace {

void validate_bounds(const Semiring& sr, const Value& lo, const Value& hi,
                     IvMode mode) {
    Tri t = sr.leq(lo, hi);
    if (t == Tri::Incomparable)
        raise(Errc::InvalidBounds, "interval bounds are incomparable: [" +
                                       sr.format(lo) + ", " + sr.format(hi) +
                                       "]");
    if (t != Tri::True)
        raise(Errc::InvalidBounds, "interval lower bound above upper: [" +
                                       sr.format(lo) + ", " + sr.format(hi) +
                                       "]");
    if (mode == IvMode::Strong && lo == sr.zero() && hi != sr.zero())
        raise(Errc::StrongViolation,
              "strong interval may touch zero only as [0,0]: [" +
                  sr.format(lo) + ", " + sr.format(hi) + "]");
}

void require_compatible(const Interval& x, const Interval& y,
                        const char* who) {
    if (&x.semiring() != &y.semiring())
        raise(Errc::ModeMismatch,
              std::string(who) + ": intervals bound to different semirings");
    if (x.mode() != y.mode())
        raise(Errc::ModeMismatch,
              std::string(who) + ": weak/strong interval modes differ");
}

void require_strong_ok(const Interval& x, const char* who) {
    // Closure of the strong extension under the operations needs entirety.
    if (x.mode() == IvMode::Strong && !x.semiring().flags().entire)
        raise(Errc::CapabilityMissing,
              std::string(who) +
                  ": strong intervals require an entire semiring");
}

}  // namespace

Interval::Interval(const Semiring& sr, const Value& lo, const Value& hi,
                   IvMode mode)
    : sr_(&sr), mode_(mode), lo_(lo), hi_(hi) {
    if (!sr.valid(lo) || !sr.valid(hi))
        raise(Errc::ParseError, "interval bound not admitted by semiring " +
                                    std::string(sr.key()));
    validate_bounds(sr, lo, hi, mode);
}

Interval Interval::point(const Semiring& sr, const Value& v, IvMode mode) {
    return Interval(sr, v, v, mode);
}

Interval add(const Interval& x, const Interval& y) {
    require_compatible(x, y, "add");
    require_strong_ok(x, "add");
    const Semiring& sr = x.semiring();
    return Interval(sr, sr.add(x.lo(), y.lo()), sr.add(x.hi(), y.hi()),
                    x.mode());
}

Interval mul(const Interval& x, const Interval& y) {
    require_compatible(x, y, "mul");
    require_strong_ok(x, "mul");
    const Semiring& sr = x.semiring();
    return Interval(sr, sr.mul(x.lo(), y.lo()), sr.mul(x.hi(), y.hi()),
                    x.mode());
}

Interval pow(const Interval& x, int n) {
    const Semiring& sr = x.semiring();
    return Interval(sr, sr.pow(x.lo(), n), sr.pow(x.hi(), n), x.mode());
}

Interval closure(const Interval& x) {
    const Semiring& sr = x.semiring();
    return Interval(sr, sr.scalar_closure(x.lo()), sr.scalar_closure(x.hi()),
                    x.mode());
}

Interval nth_root(const Interval& y, int n) {
    const Semiring& sr = y.semiring();
    if (!sr.flags().algebraically_closed || !sr.flags().freshman_dream)
        raise(Errc::CapabilityMissing,
              "interval nth_root needs the algebraically-closed and "
              "freshman-dream capabilities");
    Value zl = sr.nth_root(y.lo(), n);
    Value zh = sr.nth_root(y.hi(), n);
    // The roots of ordered bounds need not come out ordered in a partial
    // order; r(lo) add r(hi) is always a valid upper root.
    return Interval(sr, zl, sr.add(zl, zh), y.mode());
}

Interval sum(const Semiring& sr, std::span<const Interval> xs, IvMode mode) {
    Interval acc = Interval::point(sr, sr.zero(), mode);
    for (const Interval& x : xs) acc = add(acc, x);
    return acc;
}

bool contains(const Interval& x, const Value& v) {
    const Semiring& sr = x.semiring();
    return is_true(sr.leq(x.lo(), v)) && is_true(sr.leq(v, x.hi()));
}

bool subset(const Interval& x, const Interval& y) {
    const Semiring& sr = x.semiring();
    return is_true(sr.leq(y.lo(), x.lo())) &&
           is_true(sr.leq(x.hi(), y.hi()));
}

Tri leq(const Interval& x, const Interval& y) {
    const Semiring& sr = x.semiring();
    bool fwd = is_true(sr.leq(x.lo(), y.lo())) &&
               is_true(sr.leq(x.hi(), y.hi()));
    bool rev = is_true(sr.leq(y.lo(), x.lo())) &&
               is_true(sr.leq(y.hi(), x.hi()));
    if (fwd) return Tri::True;
    return rev ? Tri::False : Tri::Incomparable;
}

IntervalMatrix::IntervalMatrix(Matrix lower, Matrix upper, IvMode mode)
    : lo_(std::move(lower)), hi_(std::move(upper)), mode_(mode) {
    if (&lo_.semiring() != &hi_.semiring())
        raise(Errc::ModeMismatch,
              "merge: bound matrices use different semirings");
    if (lo_.rows() != hi_.rows() || lo_.cols() != hi_.cols())
        raise(Errc::DimensionMismatch, "merge: bound matrix shapes differ");
    const Semiring& sr = lo_.semiring();
    for (int i = 0; i < lo_.rows(); ++i)
        for (int j = 0; j < lo_.cols(); ++j)
            validate_bounds(sr, lo_.at(i, j), hi_.at(i, j), mode_);
}

IntervalMatrix IntervalMatrix::degenerate(const Matrix& a, IvMode mode) {
    return IntervalMatrix(a, a, mode);
}

IntervalMatrix IntervalMatrix::zero(const Semiring& sr, int rows, int cols,
                                    IvMode mode) {
    return IntervalMatrix(Matrix(sr, rows, cols), Matrix(sr, rows, cols),
                          mode);
}

void IntervalMatrix::set(int i, int j, const Interval& v) {
    if (v.mode() != mode_)
        raise(Errc::ModeMismatch, "set: interval mode differs from matrix");
    lo_.set(i, j, v.lo());
    hi_.set(i, j, v.hi());
}

namespace {

void require_compatible(const IntervalMatrix& a, const IntervalMatrix& b,
                        const char* who) {
    if (&a.semiring() != &b.semiring())
        raise(Errc::ModeMismatch,
              std::string(who) + ": operands bound to different semirings");
    if (a.mode() != b.mode())
        raise(Errc::ModeMismatch,
              std::string(who) + ": weak/strong interval modes differ");
}

}  // namespace

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b) {
    require_compatible(a, b, "add");
    return IntervalMatrix(add(a.lower(), b.lower()), add(a.upper(), b.upper()),
                          a.mode());
}

IntervalMatrix mul(const IntervalMatrix& a, const IntervalMatrix& b) {
    require_compatible(a, b, "mul");
    return IntervalMatrix(mul(a.lower(), b.lower()), mul(a.upper(), b.upper()),
                          a.mode());
}

IntervalMatrix closure(const IntervalMatrix& a) {
    return IntervalMatrix(closure(a.lower()), closure(a.upper()), a.mode());
}

Tri leq(const IntervalMatrix& a, const IntervalMatrix& b) {
    Tri lo = leq(a.lower(), b.lower());
    Tri hi = leq(a.upper(), b.upper());
    if (is_true(lo) && is_true(hi)) return Tri::True;
    if (lo == Tri::False && hi == Tri::False) return Tri::False;
    // mixed outcomes: compare the other way explicitly
    Tri rlo = leq(b.lower(), a.lower());
    Tri rhi = leq(b.upper(), a.upper());
    if (is_true(rlo) && is_true(rhi)) return Tri::False;
    return Tri::Incomparable;
}

}  // namespace idem
