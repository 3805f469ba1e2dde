#include "dstoch/matrix.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace dstoch {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw DimensionError(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw DimensionError("permutation images must be a bijection on 0..n-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Matrix::Matrix(int n_rows, int n_cols) : rows_(n_rows), cols_(n_cols) {
    require(n_rows > 0 && n_cols > 0, "matrix dimensions must be positive");
    cells_.resize(static_cast<std::size_t>(n_rows) * n_cols);
}

Matrix::Matrix(int n_rows, int n_cols, const Rational& fill) : Matrix(n_rows, n_cols) {
    std::fill(cells_.begin(), cells_.end(), fill);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    require(rows_ > 0, "matrix needs at least one row");
    cols_ = static_cast<int>(rows.begin()->size());
    require(cols_ > 0, "matrix needs at least one column");
    cells_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == cols_, "ragged row in matrix literal");
        cells_.insert(cells_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::constant(int n, const Rational& value) {
    return Matrix(n, n, value);
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "multiply: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool is_stochastic(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        Rational sum = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) < 0) return false;
            sum += m(i, j);
        }
        if (sum != 1) return false;
    }
    return true;
}

bool is_doubly_stochastic(const Matrix& m) {
    return m.is_square() && is_stochastic(m) && is_stochastic(transpose(m));
}

bool is_permutation_matrix(const Matrix& m) {
    if (!m.is_square()) return false;
    const int n = m.rows();
    std::vector<int> col_ones(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int row_ones = 0;
        for (int j = 0; j < n; ++j) {
            const Rational& v = m(i, j);
            if (v.is_zero()) continue;
            if (v != 1) return false;
            ++row_ones;
            ++col_ones[static_cast<std::size_t>(j)];
        }
        if (row_ones != 1) return false;
    }
    return std::all_of(col_ones.begin(), col_ones.end(), [](int c) { return c == 1; });
}

Rref reduced_row_echelon(const Matrix& m) {
    Rref result{m, {}};
    Matrix& a = result.mat;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < a.rows(); ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead, j));
        }
        const Rational inv_p = Rational(1) / a(lead, col);
        for (int j = col; j < a.cols(); ++j) a(lead, j) *= inv_p;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == lead || a(i, col).is_zero()) continue;
            const Rational factor = a(i, col);
            for (int j = col; j < a.cols(); ++j) a(i, j) -= factor * a(lead, j);
        }
        result.pivot_cols.push_back(col);
        ++lead;
    }
    return result;
}

int rank(const Matrix& m) {
    return static_cast<int>(reduced_row_echelon(m).pivot_cols.size());
}

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.is_square(), "inverse: matrix must be square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = reduced_row_echelon(aug);
    if (static_cast<int>(r.pivot_cols.size()) < n || r.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) {
        return std::nullopt;
    }
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = r.mat(i, n + j);
    return out;
}

LinearSolution solve_linear(const Matrix& coeffs, const std::vector<Rational>& rhs) {
    require(static_cast<int>(rhs.size()) == coeffs.rows(), "solve_linear: rhs size mismatch");
    const int n_vars = coeffs.cols();
    Matrix aug(coeffs.rows(), n_vars + 1);
    for (int i = 0; i < coeffs.rows(); ++i) {
        for (int j = 0; j < n_vars; ++j) aug(i, j) = coeffs(i, j);
        aug(i, n_vars) = rhs[static_cast<std::size_t>(i)];
    }
    Rref r = reduced_row_echelon(aug);

    LinearSolution sol;
    // A pivot in the augmented column means 0 = 1 somewhere.
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == n_vars) return sol;
    sol.consistent = true;

    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n_vars), -1);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        pivot_row_of_col[static_cast<std::size_t>(r.pivot_cols[k])] = static_cast<int>(k);
    }

    sol.particular.assign(static_cast<std::size_t>(n_vars), Rational(0));
    for (int col = 0; col < n_vars; ++col) {
        int row = pivot_row_of_col[static_cast<std::size_t>(col)];
        if (row >= 0) sol.particular[static_cast<std::size_t>(col)] = r.mat(row, n_vars);
    }

    for (int free_col = 0; free_col < n_vars; ++free_col) {
        if (pivot_row_of_col[static_cast<std::size_t>(free_col)] >= 0) continue;
        std::vector<Rational> basis(static_cast<std::size_t>(n_vars), Rational(0));
        basis[static_cast<std::size_t>(free_col)] = 1;
        for (int col = 0; col < n_vars; ++col) {
            int row = pivot_row_of_col[static_cast<std::size_t>(col)];
            if (row >= 0) basis[static_cast<std::size_t>(col)] = -r.mat(row, free_col);
        }
        sol.nullspace.push_back(std::move(basis));
    }
    return sol;
}

Matrix permutation_matrix(const Permutation& p) {
    Matrix m(p.size(), p.size());
    for (int j = 0; j < p.size(); ++j) m(p(j), j) = 1;
    return m;
}

Matrix conjugate_by_permutation(const Permutation& p, const Matrix& m) {
    require(m.is_square() && m.rows() == p.size(), "conjugate: size mismatch");
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(p(i), p(j)) = m(i, j);
    return out;
}

namespace {

// Iterative Tarjan over the support digraph.
std::vector<std::vector<int>> strongly_connected_components(const Matrix& m) {
    const int n = m.rows();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    struct Frame {
        int v;
        int next_child;
    };

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> call_stack{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const int v = frame.v;
            bool descended = false;
            while (frame.next_child < n) {
                const int w = frame.next_child++;
                if (m(v, w).is_zero()) continue;
                if (index[static_cast<std::size_t>(w)] < 0) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> component;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const int parent = call_stack.back().v;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }

    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

}  // namespace

BlockDecomposition irreducible_components(const Matrix& m) {
    if (!is_doubly_stochastic(m)) {
        throw NotDoublyStochasticError("irreducible_components: input is not doubly stochastic");
    }
    const int n = m.rows();
    auto components = strongly_connected_components(m);

    std::vector<int> images(static_cast<std::size_t>(n));
    int position = 0;
    for (const auto& component : components) {
        for (int v : component) images[static_cast<std::size_t>(v)] = position++;
    }
    Permutation relabeling{std::move(images)};
    Matrix arranged = conjugate_by_permutation(relabeling, m);

    // Complete reducibility: nothing may survive outside the diagonal blocks.
    std::vector<Matrix> blocks;
    int offset = 0;
    for (const auto& component : components) {
        const int size = static_cast<int>(component.size());
        Matrix block(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) block(i, j) = arranged(offset + i, offset + j);
        blocks.push_back(std::move(block));
        offset += size;
    }
    offset = 0;
    for (const auto& component : components) {
        const int size = static_cast<int>(component.size());
        for (int i = offset; i < offset + size; ++i) {
            for (int j = 0; j < n; ++j) {
                if ((j < offset || j >= offset + size) && !arranged(i, j).is_zero()) {
                    throw InternalCheckError(
                        "irreducible_components: positive entry crosses components");
                }
            }
        }
        offset += size;
    }

    return BlockDecomposition{std::move(relabeling), std::move(blocks)};
}

namespace {

// mt19937_64 has a standard-fixed output sequence, and we avoid
// std::uniform_int_distribution (implementation-defined), so samples are
// identical on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t bounded(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

std::vector<int> random_permutation(int n, DeterministicRng& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    return images;
}

}  // namespace

Matrix random_doubly_stochastic(int n, std::uint64_t seed, int terms) {
    require(n >= 1, "random_doubly_stochastic: n must be positive");
    if (terms < 1) throw std::invalid_argument("random_doubly_stochastic: terms must be >= 1");

    DeterministicRng rng(seed);
    std::vector<std::vector<int>> perms;
    std::vector<BigInt> weights;
    BigInt total = 0;
    for (int t = 0; t < terms; ++t) {
        perms.push_back(random_permutation(n, rng));
        weights.emplace_back(1 + rng.bounded(1000));
        total += weights.back();
    }

    Matrix out(n, n);
    for (int t = 0; t < terms; ++t) {
        const Rational w = make_rational(weights[static_cast<std::size_t>(t)], total);
        for (int i = 0; i < n; ++i) {
            out(i, perms[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]) += w;
        }
    }
    return out;
}

}  // namespace dstoch
