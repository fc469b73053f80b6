#pragma once

#include <span>
#include <utility>

#include "idem/matrix.hpp"

namespace idem {

/// Weak extension admits every order interval [lo, hi]. Strong extension
/// additionally requires lo strictly above zero unless the interval is the
/// zero interval itself; it restores cancellation and stabilization, which
/// weak intervals touching zero break.
enum class IvMode { Weak, Strong };

/// Closed order interval [lo, hi] in a semiring, lo <= hi in the canonical
/// (or declared) order. Operations are bound-wise and give the least
/// interval containing the elementwise image, with both bounds attained.
class Interval {
public:
    Interval(const Semiring& sr, const Value& lo, const Value& hi,
             IvMode mode);

    /// Degenerate interval [v, v]: the canonical embedding of S.
    static Interval point(const Semiring& sr, const Value& v,
                          IvMode mode = IvMode::Weak);

    const Semiring& semiring() const { return *sr_; }
    IvMode mode() const { return mode_; }
    const Value& lo() const { return lo_; }
    const Value& hi() const { return hi_; }
    bool degenerate() const { return lo_ == hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.sr_ == b.sr_ && a.mode_ == b.mode_ && a.lo_ == b.lo_ &&
               a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) {
        return !(a == b);
    }

private:
    const Semiring* sr_;
    IvMode mode_;
    Value lo_, hi_;
};

Interval add(const Interval& x, const Interval& y);
Interval mul(const Interval& x, const Interval& y);
Interval pow(const Interval& x, int n);

// Mixed scalar/interval arithmetic promotes the scalar through the
// degenerate embedding [v, v].
inline Interval add(const Interval& x, const Value& v) {
    return add(x, Interval::point(x.semiring(), v, x.mode()));
}
inline Interval add(const Value& v, const Interval& x) {
    return add(Interval::point(x.semiring(), v, x.mode()), x);
}
inline Interval mul(const Interval& x, const Value& v) {
    return mul(x, Interval::point(x.semiring(), v, x.mode()));
}
inline Interval mul(const Value& v, const Interval& x) {
    return mul(Interval::point(x.semiring(), v, x.mode()), x);
}

/// Bound-wise Kleene closure; justified by monotonicity of the scalar
/// closure.
Interval closure(const Interval& x);

/// Interval z with z^n = y, built as [r(lo), r(lo) add r(hi)] from scalar
/// roots r. Requires the algebraically-closed and freshman-dream flags.
Interval nth_root(const Interval& y, int n);

/// Finite add-fold of a collection: [fold of lower bounds, fold of upper
/// bounds]. For idempotent profiles this is the bounded supremum of the
/// family; unbounded index sets are not representable. Empty input folds to
/// the zero interval.
Interval sum(const Semiring& sr, std::span<const Interval> xs,
             IvMode mode = IvMode::Weak);

bool contains(const Interval& x, const Value& v);
bool subset(const Interval& x, const Interval& y);

/// Canonical order of the interval extension: x <= y iff both bounds are
/// below. Distinct intervals are frequently incomparable.
Tri leq(const Interval& x, const Interval& y);

/// Interval matrix, stored as the (lower, upper) matrix pair; by the
/// bound-wise definition of the operations this is isomorphic to an order
/// interval of matrices, and all arithmetic reduces to the two bounds.
class IntervalMatrix {
public:
    /// Merge two bound matrices; validates lower <= upper elementwise plus
    /// the strong-mode constraint per entry.
    IntervalMatrix(Matrix lower, Matrix upper, IvMode mode);

    static IntervalMatrix degenerate(const Matrix& a,
                                     IvMode mode = IvMode::Weak);
    static IntervalMatrix zero(const Semiring& sr, int rows, int cols,
                               IvMode mode);

    int rows() const { return lo_.rows(); }
    int cols() const { return lo_.cols(); }
    IvMode mode() const { return mode_; }
    const Semiring& semiring() const { return lo_.semiring(); }

    const Matrix& lower() const { return lo_; }
    const Matrix& upper() const { return hi_; }

    Interval at(int i, int j) const {
        return Interval(lo_.semiring(), lo_.at(i, j), hi_.at(i, j), mode_);
    }
    void set(int i, int j, const Interval& v);

    friend bool operator==(const IntervalMatrix& a, const IntervalMatrix& b) {
        return a.mode_ == b.mode_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const IntervalMatrix& a, const IntervalMatrix& b) {
        return !(a == b);
    }

private:
    Matrix lo_, hi_;
    IvMode mode_;
};

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix mul(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix closure(const IntervalMatrix& a);
Tri leq(const IntervalMatrix& a, const IntervalMatrix& b);

inline std::pair<Matrix, Matrix> split(const IntervalMatrix& a) {
    return {a.lower(), a.upper()};
}
inline IntervalMatrix merge(Matrix lower, Matrix upper,
                            IvMode mode = IvMode::Weak) {
    return IntervalMatrix(std::move(lower), std::move(upper), mode);
}

}  // namespace idem
