// Seeded random instance generators shared across the test binaries.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "idem/checks.hpp"
#include "idem/interval.hpp"

namespace gen {

using idem::Instance;
using idem::IntervalMatrix;
using idem::IvMode;
using idem::Matrix;
using idem::Semiring;
using idem::Value;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// Dyadic payload k/denom with k integer; mul chains over such values stay
/// exact in double precision.
inline double dyadic(Rng& rng, int lo_num, int hi_num, double denom = 4.0) {
    return uniform_int(rng, lo_num, hi_num) / denom;
}

/// Random matrix with the given arc density; off-support entries are zero.
/// Finite weights are dyadics in [lo, hi] so mul chains compare exactly no
/// matter how an algorithm associates the sums.
inline Matrix random_matrix(const Semiring& sr, int rows, int cols, Rng& rng,
                            double density, double lo, double hi) {
    Matrix a(sr, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!chance(rng, density)) continue;
            if (sr.instance() == Instance::Boolean)
                a.set(i, j, sr.one());
            else
                a.set(i, j,
                      Value::finite(dyadic(rng, static_cast<int>(lo * 4),
                                           static_cast<int>(hi * 4))));
        }
    return a;
}

/// Semi-definite matrix for max-plus (all weights <= 0) or min-plus (all
/// weights >= 0): every cycle weight then sits below the unity. A sprinkle
/// of exact-unity loops exercises the boundary.
inline Matrix random_semidefinite(const Semiring& sr, int n, Rng& rng,
                                  double density = 0.6) {
    Matrix a(sr, n, n);
    const bool maxplus = sr.instance() == Instance::MaxPlus;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!chance(rng, density)) continue;
            double w = maxplus ? dyadic(rng, -20, 0) : dyadic(rng, 0, 20);
            if (chance(rng, 0.05)) w = 0.0;  // weight exactly at the unity
            a.set(i, j, Value::finite(w));
        }
    return a;
}

/// Strongly connected max-plus matrix on an integer lattice: weights are
/// multiples of scale = lcm(1..n), so every cycle mean of length <= n is an
/// exact integer double. A full permutation cycle guarantees irreducibility.
inline Matrix random_irreducible_lattice(int n, Rng& rng,
                                         double scale = 840.0) {
    const Semiring& sr = Semiring::of(Instance::MaxPlus);
    Matrix a(sr, n, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i) {
        int w = uniform_int(rng, -20, 20);
        a.set(perm[i], perm[(i + 1) % n], Value::finite(w * scale));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (chance(rng, 0.3) && a.at(i, j) == sr.zero())
                a.set(i, j, Value::finite(uniform_int(rng, -20, 20) * scale));
    return a;
}

/// Interval matrix around a semi-definite upper max-plus/min-plus matrix:
/// the lower matrix shifts each finite weight away from the unity, keeping
/// supports equal so strong mode is valid.
inline IntervalMatrix random_interval_semidef(const Semiring& sr, int n,
                                              Rng& rng, IvMode mode) {
    Matrix hi = random_semidefinite(sr, n, rng);
    Matrix lo(sr, n, n);
    const bool maxplus = sr.instance() == Instance::MaxPlus;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (hi.at(i, j) == sr.zero()) continue;
            double delta = dyadic(rng, 0, 8);
            double w = hi.at(i, j).num() + (maxplus ? -delta : delta);
            lo.set(i, j, Value::finite(w));
        }
    return IntervalMatrix(std::move(lo), std::move(hi), mode);
}

/// Interval right-hand side with full support (strong-mode friendly). In
/// min-plus the canonical order runs opposite to the numeric one, so the
/// lower bound is the numerically larger value there.
inline IntervalMatrix random_interval_rhs(const Semiring& sr, int n, int s,
                                          Rng& rng, IvMode mode) {
    Matrix lo(sr, n, s), hi(sr, n, s);
    const bool maxplus = sr.instance() == Instance::MaxPlus;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) {
            double base = dyadic(rng, -16, 16);
            double delta = dyadic(rng, 0, 12);
            lo.set(i, j, Value::finite(maxplus ? base - delta : base + delta));
            hi.set(i, j, Value::finite(base));
        }
    return IntervalMatrix(std::move(lo), std::move(hi), mode);
}

/// Interval scalar on the dyadic lattice (16ths for nonneg-real, quarters
/// elsewhere), so even three-factor mul chains compare exactly. Tags from
/// the carrier show up with the random_element mixture.
inline idem::Interval random_interval(const Semiring& sr, Rng& rng,
                                      IvMode mode = IvMode::Weak) {
    using idem::Interval;
    if (sr.instance() == Instance::NonnegReal) {
        double lo = dyadic(rng, 0, 256, 16.0);
        double hi = lo + dyadic(rng, 0, 64, 16.0);
        return Interval(sr, Value::finite(lo), Value::finite(hi), mode);
    }
    std::uint64_t state = rng();
    Value a = idem::random_element(sr, state);
    Value b = idem::random_element(sr, state);
    if (sr.instance() != Instance::Boolean) {
        if (a.is_finite()) a = Value::finite(dyadic(rng, -32, 32));
        if (b.is_finite()) b = Value::finite(dyadic(rng, -32, 32));
    }
    Value lo = is_true(sr.leq(a, b)) ? a : b;
    Value hi = is_true(sr.leq(a, b)) ? b : a;
    if (mode == IvMode::Strong && lo == sr.zero() && hi != sr.zero())
        lo = hi;  // keep strong validity
    return Interval(sr, lo, hi, mode);
}

/// Nonneg-real interval system matrix with entries in [0, cap] and upper
/// row sums <= cap < 1 scaled in, so the closure series converges at both
/// bounds.
inline IntervalMatrix random_nonneg_interval(int n, Rng& rng,
                                             double cap = 0.9) {
    const Semiring& sr = Semiring::of(Instance::NonnegReal);
    Matrix lo(sr, n, n), hi(sr, n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n);
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            row[j] = uniform(rng, 0.0, 1.0);
            sum += row[j];
        }
        double scale = cap / std::max(sum, 1.0);
        for (int j = 0; j < n; ++j) {
            double h = row[j] * scale;
            double l = h * uniform(rng, 0.0, 1.0);
            lo.set(i, j, Value::finite(l));
            hi.set(i, j, Value::finite(h));
        }
    }
    return IntervalMatrix(std::move(lo), std::move(hi), IvMode::Weak);
}

}  // namespace gen
