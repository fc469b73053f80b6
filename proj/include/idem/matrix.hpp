#pragma once

#include <optional>
#include <vector>

#include "idem/semiring.hpp"

namespace idem {

/// Dense matrix over a bound semiring profile. Row-major storage; value
/// semantics; algorithms never mutate their inputs.
class Matrix {
public:
    Matrix(const Semiring& sr, int rows, int cols);  // zero-filled

    static Matrix identity(const Semiring& sr, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const Semiring& semiring() const { return *sr_; }

    const Value& at(int i, int j) const { return data_[idx(i, j)]; }

    /// Validates the element against the bound profile.
    void set(int i, int j, const Value& v);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) {
        return !(a == b);
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    const Semiring* sr_;
    int rows_, cols_;
    std::vector<Value> data_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Value& c, const Matrix& a);
Matrix pow(const Matrix& a, int k);

/// E add A add ... add A^k.
Matrix power_sum(const Matrix& a, int k);

/// Elementwise order; True iff every entry of a is below the matching entry
/// of b.
Tri leq(const Matrix& a, const Matrix& b);

/// Kleene closure E add A add A^2 add ..., computed by generalized
/// Gauss-Jordan elimination in O(n^3) semiring operations. Falls back to the
/// explicit (n-1)-term power sum if a pivot closure is undefined while the
/// matrix is still semi-definite (idempotent profiles only, where that
/// truncation is exact). Throws ClosureDiverges when some closed path has
/// weight strictly above the unity and the carrier has no top element.
Matrix closure(const Matrix& a);

/// Every closed path of weight <= unity (respectively < unity). Decided on
/// the diagonal of A add A^2 add ... add A^n, which covers every elementary
/// cycle.
bool is_semi_definite(const Matrix& a);
bool is_definite(const Matrix& a);

/// True iff every ordered node pair is joined by a nonzero path of length
/// >= 1; the 1x1 zero matrix is reducible under this convention.
bool is_irreducible(const Matrix& a);

/// Strongly connected components of the support digraph, ordered so the
/// permuted matrix is upper block triangular with each diagonal block zero
/// or irreducible.
struct BlockStructure {
    std::vector<int> order;         // order[new_position] = original index
    std::vector<int> block_starts;  // positions in `order`; ends with n

    int block_count() const {
        return static_cast<int>(block_starts.size()) - 1;
    }
    int block_begin(int b) const { return block_starts[b]; }
    int block_end(int b) const { return block_starts[b + 1]; }

    /// P A P^T under this ordering.
    Matrix permuted(const Matrix& a) const;
};

BlockStructure scc_blocks(const Matrix& a);

struct EigenResult {
    Value eigenvalue;
    std::optional<Matrix> eigenvector;  // n x 1, nonzero when present
    bool unique = false;
};

/// Eigenvalue by the cycle formula: the add-sum over elementary cycles c of
/// length l of the l-th root of the cycle weight. For max-plus this is the
/// maximum cycle mean. Requires a commutative, algebraically closed,
/// cancellative, stabilizing profile. Eigenvectors come from the critical
/// columns of (lambda^-1 A)+ and are produced for the semifield instances
/// (max-plus, min-plus, boolean) when A is irreducible.
EigenResult eigenvalue(const Matrix& a);

/// add-sum of the eigenvalues of the irreducible diagonal blocks of the SCC
/// decomposition; zero blocks contribute the zero element.
Value spectral_radius(const Matrix& a);

/// Karp max cycle mean for max-plus matrices (the large-n eigenvalue path).
/// Pre: a is irreducible max-plus.
Value max_cycle_mean(const Matrix& a);

}  // namespace idem
