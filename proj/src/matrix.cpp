#include "idem/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace idem {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (!a.square())
        raise(Errc::DimensionMismatch,
              std::string(who) + " requires a square matrix, got " +
                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_same_profile(const Matrix& a, const Matrix& b, const char* who) {
    if (&a.semiring() != &b.semiring())
        raise(Errc::ModeMismatch,
              std::string(who) + ": operands bound to different semirings");
}

}  // namespace

Matrix::Matrix(const Semiring& sr, int rows, int cols)
    : sr_(&sr), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        raise(Errc::DimensionMismatch,
              "matrix dimensions must be positive, got " +
                  std::to_string(rows) + "x" + std::to_string(cols));
    data_.assign(static_cast<std::size_t>(rows) * cols, sr.zero());
}

Matrix Matrix::identity(const Semiring& sr, int n) {
    Matrix e(sr, n, n);
    for (int i = 0; i < n; ++i) e.set(i, i, sr.one());
    return e;
}

void Matrix::set(int i, int j, const Value& v) {
    if (!sr_->valid(v))
        raise(Errc::ParseError, "element " + sr_->format(v) +
                                    " not admitted by semiring " +
                                    std::string(sr_->key()));
    data_[idx(i, j)] = v;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.sr_ == b.sr_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_profile(a, b, "add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        raise(Errc::DimensionMismatch,
              "add: " + std::to_string(a.rows()) + "x" +
                  std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                  "x" + std::to_string(b.cols()));
    const Semiring& sr = a.semiring();
    Matrix r(sr, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.set(i, j, sr.add(a.at(i, j), b.at(i, j)));
    return r;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    require_same_profile(a, b, "mul");
    if (a.cols() != b.rows())
        raise(Errc::DimensionMismatch,
              "mul: inner dimensions " + std::to_string(a.cols()) + " vs " +
                  std::to_string(b.rows()));
    const Semiring& sr = a.semiring();
    Matrix r(sr, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Value acc = sr.zero();
            for (int k = 0; k < a.cols(); ++k)
                acc = sr.add(acc, sr.mul(a.at(i, k), b.at(k, j)));
            r.set(i, j, acc);
        }
    return r;
}

Matrix scalar_mul(const Value& c, const Matrix& a) {
    const Semiring& sr = a.semiring();
    Matrix r(sr, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, sr.mul(c, a.at(i, j)));
    return r;
}

Matrix pow(const Matrix& a, int k) {
    require_square(a, "pow");
    if (k < 0) raise(Errc::DimensionMismatch, "pow: negative exponent");
    Matrix r = Matrix::identity(a.semiring(), a.rows());
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Matrix power_sum(const Matrix& a, int k) {
    require_square(a, "power_sum");
    // Horner form: E add A (E add A (...)) expands to E add A add ... add A^k.
    Matrix e = Matrix::identity(a.semiring(), a.rows());
    Matrix s = e;
    for (int i = 0; i < k; ++i) s = add(mul(a, s), e);
    return s;
}

Tri leq(const Matrix& a, const Matrix& b) {
    require_same_profile(a, b, "leq");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        raise(Errc::DimensionMismatch, "leq: shape mismatch");
    const Semiring& sr = a.semiring();
    bool fwd = true, rev = true;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (!is_true(sr.leq(a.at(i, j), b.at(i, j)))) fwd = false;
            if (!is_true(sr.leq(b.at(i, j), a.at(i, j)))) rev = false;
        }
    if (fwd) return Tri::True;
    return rev ? Tri::False : Tri::Incomparable;
}

Matrix closure(const Matrix& a) {
    require_square(a, "closure");
    const Semiring& sr = a.semiring();
    const int n = a.rows();
    Matrix b = a;
    std::vector<Value> row_k(n), col_k(n);
    for (int k = 0; k < n; ++k) {
        Value star;
        try {
            star = sr.scalar_closure(b.at(k, k));
        } catch (const AlgebraError& e) {
            if (e.code() != Errc::ClosureUndefined) throw;
            if (sr.flags().idempotent && is_semi_definite(a))
                return power_sum(a, n - 1);
            raise(Errc::ClosureDiverges,
                  "closure diverges: closed path of weight above unity "
                  "through node " +
                      std::to_string(k));
        }
        // Snapshot the pivot row/column so every update in this sweep reads
        // the pre-sweep state; required for non-idempotent profiles.
        for (int j = 0; j < n; ++j) row_k[j] = b.at(k, j);
        for (int i = 0; i < n; ++i) col_k[i] = b.at(i, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                b.set(i, j, sr.add(b.at(i, j),
                                   sr.mul(col_k[i], sr.mul(star, row_k[j]))));
    }
    for (int i = 0; i < n; ++i) b.set(i, i, sr.add(b.at(i, i), sr.one()));
    return b;
}

namespace {

// Diagonal of A add A^2 add ... add A^n; covers every elementary cycle.
std::vector<Value> cycle_diagonal(const Matrix& a) {
    const Semiring& sr = a.semiring();
    const int n = a.rows();
    Matrix acc = a;
    Matrix p = a;
    for (int k = 2; k <= n; ++k) {
        p = mul(p, a);
        acc = add(acc, p);
    }
    std::vector<Value> d(n);
    for (int i = 0; i < n; ++i) d[i] = acc.at(i, i);
    (void)sr;
    return d;
}

}  // namespace

bool is_semi_definite(const Matrix& a) {
    require_square(a, "is_semi_definite");
    const Semiring& sr = a.semiring();
    for (const Value& d : cycle_diagonal(a))
        if (!is_true(sr.leq(d, sr.one()))) return false;
    return true;
}

bool is_definite(const Matrix& a) {
    require_square(a, "is_definite");
    const Semiring& sr = a.semiring();
    for (const Value& d : cycle_diagonal(a)) {
        if (!is_true(sr.leq(d, sr.one()))) return false;
        if (d == sr.one()) return false;
    }
    return true;
}

Matrix BlockStructure::permuted(const Matrix& a) const {
    const int n = static_cast<int>(order.size());
    Matrix r(a.semiring(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.set(i, j, a.at(order[i], order[j]));
    return r;
}

BlockStructure scc_blocks(const Matrix& a) {
    require_square(a, "scc_blocks");
    const int n = a.rows();
    const Value zero = a.semiring().zero();

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != zero) adj[i].push_back(j);

    // Iterative Tarjan; components come out with sinks of the condensation
    // first, so the reversed sequence yields an upper block triangular form.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    std::reverse(comps.begin(), comps.end());

    BlockStructure bs;
    bs.block_starts.push_back(0);
    for (auto& c : comps) {
        bs.order.insert(bs.order.end(), c.begin(), c.end());
        bs.block_starts.push_back(static_cast<int>(bs.order.size()));
    }
    return bs;
}

bool is_irreducible(const Matrix& a) {
    require_square(a, "is_irreducible");
    if (a.rows() == 1) return a.at(0, 0) != a.semiring().zero();
    return scc_blocks(a).block_count() == 1;
}

namespace {

constexpr int kCycleEnumGuard = 12;

// Visits every elementary cycle once, as the node path (c0, ..., cm) with
// c0 the smallest node on the cycle; the closing arc cm -> c0 is implicit.
template <class F>
void for_each_elementary_cycle(const Matrix& a, F&& visit) {
    const int n = a.rows();
    const Value zero = a.semiring().zero();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto dfs = [&](auto&& self, int s, int u) -> void {
        for (int t = s; t < n; ++t) {
            if (a.at(u, t) == zero) continue;
            if (t == s) {
                visit(path);
            } else if (!on_path[t]) {
                path.push_back(t);
                on_path[t] = 1;
                self(self, s, t);
                on_path[t] = 0;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
}

// add-fold of the l-th roots of elementary cycle weights; nullopt when the
// support digraph is acyclic.
std::optional<Value> cycle_formula_lambda(const Matrix& a) {
    const Semiring& sr = a.semiring();
    std::optional<Value> lam;
    for_each_elementary_cycle(a, [&](const std::vector<int>& path) {
        Value w = sr.one();
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            w = sr.mul(w, a.at(path[i], path[i + 1]));
        w = sr.mul(w, a.at(path.back(), path.front()));
        Value root = sr.nth_root(w, static_cast<int>(path.size()));
        lam = lam ? sr.add(*lam, root) : root;
    });
    return lam;
}

double karp_cycle_mean(const Matrix& a, bool negate) {
    const int n = a.rows();
    const double kNone = -std::numeric_limits<double>::infinity();
    const Value zero = a.semiring().zero();

    auto weight = [&](int u, int v) {
        double w = a.at(u, v).num();
        return negate ? -w : w;
    };

    // D[k][v] = best walk weight of length k from node 0 to v.
    std::vector<std::vector<double>> d(
        n + 1, std::vector<double>(n, kNone));
    d[0][0] = 0.0;
    for (int k = 1; k <= n; ++k)
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                if (d[k - 1][u] == kNone || a.at(u, v) == zero) continue;
                d[k][v] = std::max(d[k][v], d[k - 1][u] + weight(u, v));
            }

    double best = kNone;
    for (int v = 0; v < n; ++v) {
        if (d[n][v] == kNone) continue;
        double worst = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) {
            if (d[k][v] == kNone) continue;
            worst = std::min(worst, (d[n][v] - d[k][v]) / (n - k));
        }
        best = std::max(best, worst);
    }
    return negate ? -best : best;
}

Matrix submatrix(const Matrix& a, const std::vector<int>& nodes, int begin,
                 int end) {
    const int m = end - begin;
    Matrix r(a.semiring(), m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            r.set(i, j, a.at(nodes[begin + i], nodes[begin + j]));
    return r;
}

// Eigenvalue of one irreducible block.
Value block_lambda(const Matrix& sub) {
    const Semiring& sr = sub.semiring();
    if (sr.instance() == Instance::Boolean) return sr.one();
    if (sub.rows() <= kCycleEnumGuard) {
        auto lam = cycle_formula_lambda(sub);
        return *lam;  // irreducible blocks always carry a cycle
    }
    switch (sr.instance()) {
    case Instance::MaxPlus:
        return Value::finite(karp_cycle_mean(sub, false));
    case Instance::MinPlus:
        return Value::finite(karp_cycle_mean(sub, true));
    default:
        raise(Errc::CapabilityMissing,
              "generic cycle enumeration is limited to n <= " +
                  std::to_string(kCycleEnumGuard) + " nodes on semiring " +
                  std::string(sr.key()));
    }
}

void require_eigen_capability(const Matrix& a) {
    const Flags& f = a.semiring().flags();
    if (!(f.commutative && f.algebraically_closed && f.cancellative &&
          f.stabilizing))
        raise(Errc::CapabilityMissing,
              "eigenvalue needs a commutative, algebraically closed, "
              "cancellative, stabilizing semiring; " +
                  std::string(a.semiring().key()) + " is not");
}

Value lambda_inverse(const Semiring& sr, const Value& lam) {
    switch (sr.instance()) {
    case Instance::MaxPlus:
    case Instance::MinPlus:
        return Value::finite(-lam.num());
    case Instance::Boolean:
        return sr.one();
    default:
        raise(Errc::CapabilityMissing,
              "eigenvector construction needs a semifield instance");
    }
}

// add-fold of block eigenvalues over the SCC decomposition; zero blocks
// are skipped. nullopt when no block carries a cycle.
std::optional<Value> fold_block_lambdas(const Matrix& a,
                                        const BlockStructure& bs) {
    const Semiring& sr = a.semiring();
    std::optional<Value> lam;
    for (int b = 0; b < bs.block_count(); ++b) {
        const int begin = bs.block_begin(b), end = bs.block_end(b);
        if (end - begin == 1 &&
            a.at(bs.order[begin], bs.order[begin]) == sr.zero())
            continue;  // zero 1x1 block: no cycle
        Value bl = block_lambda(submatrix(a, bs.order, begin, end));
        lam = lam ? sr.add(*lam, bl) : bl;
    }
    return lam;
}

}  // namespace

EigenResult eigenvalue(const Matrix& a) {
    require_square(a, "eigenvalue");
    require_eigen_capability(a);
    const Semiring& sr = a.semiring();
    const int n = a.rows();

    BlockStructure bs = scc_blocks(a);
    const bool irreducible =
        bs.block_count() == 1 && !(n == 1 && a.at(0, 0) == sr.zero());

    std::optional<Value> lam = fold_block_lambdas(a, bs);
    if (!lam)
        raise(Errc::NoCycle,
              "matrix is reducible and its support digraph has no cycle");

    EigenResult res;
    res.eigenvalue = *lam;
    res.unique = irreducible;

    const Instance k = sr.instance();
    const bool semifield = k == Instance::MaxPlus || k == Instance::MinPlus ||
                           k == Instance::Boolean;
    if (irreducible && semifield) {
        // Critical-column construction: V = column j of (lam^-1 A)+ whose
        // diagonal entry is the unity. The scaled matrix is semi-definite,
        // so the (n-1)-term power sum realizes its closure without pivots.
        Matrix scaled = scalar_mul(lambda_inverse(sr, *lam), a);
        Matrix plus = mul(scaled, power_sum(scaled, n - 1));
        int col = -1;
        for (int j = 0; j < n && col < 0; ++j)
            if (plus.at(j, j) == sr.one()) col = j;
        if (col < 0) {
            // Rounding can nudge the critical diagonal off the unity; take
            // the largest diagonal entry instead.
            col = 0;
            for (int j = 1; j < n; ++j)
                if (is_true(sr.leq(plus.at(col, col), plus.at(j, j)))) col = j;
        }
        Matrix v(sr, n, 1);
        for (int i = 0; i < n; ++i) v.set(i, 0, plus.at(i, col));
        res.eigenvector = std::move(v);
    }
    return res;
}

Value spectral_radius(const Matrix& a) {
    require_square(a, "spectral_radius");
    require_eigen_capability(a);
    BlockStructure bs = scc_blocks(a);
    std::optional<Value> lam = fold_block_lambdas(a, bs);
    return lam ? *lam : a.semiring().zero();
}

Value max_cycle_mean(const Matrix& a) {
    require_square(a, "max_cycle_mean");
    if (a.semiring().instance() != Instance::MaxPlus)
        raise(Errc::CapabilityMissing, "max_cycle_mean is a max-plus routine");
    if (!is_irreducible(a))
        raise(Errc::NoCycle, "max_cycle_mean requires an irreducible matrix");
    return Value::finite(karp_cycle_mean(a, false));
}

}  // namespace idem
