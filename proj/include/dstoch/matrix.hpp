#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "dstoch/errors.hpp"
#include "dstoch/rational.hpp"

namespace dstoch {

// Bijection on {0,...,n-1}. images()[i] is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Dense rational matrix, row-major. All operations are exact; there is no
// floating point anywhere in this library.
class Matrix {
public:
    Matrix(int n_rows, int n_cols);
    Matrix(int n_rows, int n_cols, const Rational& fill);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);
    // The n x n matrix with every entry equal to `value`.
    static Matrix constant(int n, const Rational& value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * cols_ + j];
    }
    Rational& operator()(int i, int j) {
        return cells_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> cells_;
};

Matrix transpose(const Matrix& m);

// Exact product; throws DimensionError unless a.cols() == b.rows().
Matrix multiply(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

// Nonnegative entries, every row sums to exactly 1. Non-square allowed.
bool is_stochastic(const Matrix& m);
// Square, stochastic, and stochastic after transposition.
bool is_doubly_stochastic(const Matrix& m);
// Square 0/1 matrix with exactly one 1 in every row and column.
bool is_permutation_matrix(const Matrix& m);

// Reduced row echelon form by exact elimination. Pivot: first nonzero entry
// in column order, so the result is deterministic.
struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols;
};
Rref reduced_row_echelon(const Matrix& m);

// Exact rank over the rationals.
int rank(const Matrix& m);

// Exact inverse, or nullopt when singular. Throws DimensionError if non-square.
std::optional<Matrix> inverse(const Matrix& m);

// Full solution set of coeffs * x = rhs.
struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> particular;               // one solution (free vars = 0)
    std::vector<std::vector<Rational>> nullspace;   // basis of the homogeneous space
    bool unique() const { return consistent && nullspace.empty(); }
};
LinearSolution solve_linear(const Matrix& coeffs, const std::vector<Rational>& rhs);

// Matrix of p: column j has its single 1 in row p(j).
Matrix permutation_matrix(const Permutation& p);

// P m P^T, which relabels both indices by p: the result C satisfies
// C(p(i), p(j)) == m(i, j). Throws DimensionError unless m is square of
// size |p|.
Matrix conjugate_by_permutation(const Permutation& p, const Matrix& m);

// Block-diagonal decomposition of a doubly stochastic matrix. `relabeling`
// maps original indices to block positions: conjugate_by_permutation(
// relabeling, m) is block diagonal with the returned blocks in order.
struct BlockDecomposition {
    Permutation relabeling;
    std::vector<Matrix> blocks;
};

// Splits m into its irreducible doubly stochastic diagonal blocks. Blocks are
// the strongly connected components of the support digraph (edge i -> j iff
// m(i,j) > 0), ordered by smallest original index. Verifies that no positive
// entry crosses components and throws InternalCheckError otherwise; throws
// NotDoublyStochasticError when m is not doubly stochastic.
BlockDecomposition irreducible_components(const Matrix& m);

// Deterministic test-sample generator: a convex combination of `terms`
// uniformly drawn permutation matrices with positive rational weights that
// sum to 1. Same (n, seed, terms) always yields the same matrix.
Matrix random_doubly_stochastic(int n, std::uint64_t seed, int terms);

}  // namespace dstoch
