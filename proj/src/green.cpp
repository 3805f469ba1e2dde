#include "dstoch/green.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace dstoch {

bool verify_d_witness(const DWitness& w, const Idempotent& e, const Idempotent& f) {
    const int n = e.n();
    if (f.n() != n || w.x.rows() != n || w.x.cols() != n || w.y.rows() != n || w.y.cols() != n) {
        throw DimensionError("verify_d_witness: size mismatch");
    }
    if (!is_doubly_stochastic(w.x) || !is_doubly_stochastic(w.y)) return false;
    const Matrix& em = e.matrix();
    const Matrix& fm = f.matrix();
    return multiply(w.x, w.y) == em && multiply(w.y, w.x) == fm &&
           multiply(multiply(em, w.x), fm) == w.x && multiply(multiply(fm, w.y), em) == w.y;
}

Permutation find_conjugating_permutation(const SetPartition& p, const SetPartition& q) {
    if (p.n() != q.n()) throw DimensionError("find_conjugating_permutation: different n");
    if (!(shape_of(p) == shape_of(q))) {
        throw ShapeMismatchError("find_conjugating_permutation: partitions have different shapes");
    }
    // Blocks are canonically ordered by minimum element, so filtering by size
    // keeps the required matching order.
    std::map<std::size_t, std::vector<const std::vector<int>*>> by_size_p, by_size_q;
    for (const auto& block : p.blocks()) by_size_p[block.size()].push_back(&block);
    for (const auto& block : q.blocks()) by_size_q[block.size()].push_back(&block);

    std::vector<int> images(static_cast<std::size_t>(p.n()));
    for (const auto& [size, p_blocks] : by_size_p) {
        const auto& q_blocks = by_size_q[size];
        for (std::size_t b = 0; b < p_blocks.size(); ++b) {
            for (std::size_t i = 0; i < size; ++i) {
                images[static_cast<std::size_t>((*p_blocks[b])[i])] = (*q_blocks[b])[i];
            }
        }
    }
    return Permutation(std::move(images));
}

DWitness same_shape_d_witness(const Idempotent& e, const Idempotent& f) {
    const Permutation p = find_conjugating_permutation(e.partition(), f.partition());
    const Matrix pm = permutation_matrix(p);
    return DWitness{multiply(e.matrix(), transpose(pm)), multiply(pm, e.matrix())};
}

namespace {

// Search state for one side's block matrix: margin equations are fixed,
// branch decisions add entry = 0 rows.
struct SideSystem {
    int rows_blocks;                 // kE for x, kF for y
    int cols_blocks;
    std::vector<int> row_sizes;      // weights on the "constant columns" axis
    std::vector<int> col_sizes;
    int vars() const { return rows_blocks * cols_blocks; }
    int var(int r, int c) const { return r * cols_blocks + c; }

    // Margins: forall r: sum_c col_weight[c] * v(r,c) = 1
    //          forall c: sum_r row_weight[r] * v(r,c) = 1
    // where the weights are the block sizes on the matching axis.
    LinearSolution solve_with_zeros(const std::vector<int>& zero_vars) const {
        const int n_rows = rows_blocks + cols_blocks + static_cast<int>(zero_vars.size());
        Matrix coeffs(n_rows, vars());
        std::vector<Rational> rhs(static_cast<std::size_t>(n_rows), Rational(0));
        int row = 0;
        for (int r = 0; r < rows_blocks; ++r, ++row) {
            for (int c = 0; c < cols_blocks; ++c) {
                coeffs(row, var(r, c)) = col_sizes[static_cast<std::size_t>(c)];
            }
            rhs[static_cast<std::size_t>(row)] = 1;
        }
        for (int c = 0; c < cols_blocks; ++c, ++row) {
            for (int r = 0; r < rows_blocks; ++r) {
                coeffs(row, var(r, c)) = row_sizes[static_cast<std::size_t>(r)];
            }
            rhs[static_cast<std::size_t>(row)] = 1;
        }
        for (int v : zero_vars) {
            coeffs(row, v) = 1;
            ++row;
        }
        return solve_linear(coeffs, rhs);
    }
};

Matrix expand_blocks(const std::vector<Rational>& block_values, const SetPartition& row_part,
                     const SetPartition& col_part, int cols_blocks) {
    const int n = row_part.n();
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = block_values[static_cast<std::size_t>(
                row_part.block_of(i) * cols_blocks + col_part.block_of(j))];
        }
    }
    return out;
}

}  // namespace

WitnessSearchResult search_d_witness(const Idempotent& e, const Idempotent& f,
                                     int max_product_constraints) {
    if (e.n() != f.n()) throw DimensionError("search_d_witness: different n");
    const SetPartition& pe = e.partition();
    const SetPartition& pf = f.partition();
    const int ke = pe.block_count();
    const int kf = pf.block_count();

    std::vector<int> se, sf;
    for (const auto& block : pe.blocks()) se.push_back(static_cast<int>(block.size()));
    for (const auto& block : pf.blocks()) sf.push_back(static_cast<int>(block.size()));

    const SideSystem x_side{ke, kf, se, sf};
    const SideSystem y_side{kf, ke, sf, se};

    // Product-zero constraints from the off-diagonal (zero) blocks of E and F:
    // every term of a nonnegative sum equal to 0 must vanish.
    std::set<std::pair<int, int>> constraint_set;  // (x var, y var)
    for (int b = 0; b < ke; ++b) {
        for (int b2 = 0; b2 < ke; ++b2) {
            if (b == b2) continue;
            for (int c = 0; c < kf; ++c) {
                constraint_set.insert({x_side.var(b, c), y_side.var(c, b2)});
            }
        }
    }
    for (int c = 0; c < kf; ++c) {
        for (int c2 = 0; c2 < kf; ++c2) {
            if (c == c2) continue;
            for (int b = 0; b < ke; ++b) {
                constraint_set.insert({x_side.var(b, c2), y_side.var(c, b)});
            }
        }
    }
    const std::vector<std::pair<int, int>> constraints(constraint_set.begin(),
                                                       constraint_set.end());

    WitnessSearchResult result;
    if (static_cast<int>(constraints.size()) > max_product_constraints ||
        x_side.vars() > 64 || y_side.vars() > 64) {
        return result;  // undecided: instance too large for the branch search
    }

    bool any_open = false;
    std::set<std::pair<std::uint64_t, std::uint64_t>> visited;

    const auto nonneg = [](const std::vector<Rational>& values) {
        return std::all_of(values.begin(), values.end(),
                           [](const Rational& v) { return v >= 0; });
    };

    // Depth-first over zero patterns; masks fit in 64 bits for any lattice
    // size this search accepts.
    const std::function<bool(std::uint64_t, std::uint64_t)> explore =
        [&](std::uint64_t zx, std::uint64_t zy) -> bool {
        if (!visited.insert({zx, zy}).second) return false;
        for (const auto& [xv, yv] : constraints) {
            if ((zx >> xv) & 1) continue;
            if ((zy >> yv) & 1) continue;
            // Unsatisfied product-zero constraint: branch on which side dies.
            return explore(zx | (std::uint64_t{1} << xv), zy) ||
                   explore(zx, zy | (std::uint64_t{1} << yv));
        }
        ++result.branches;

        std::vector<int> x_zeros, y_zeros;
        for (int v = 0; v < x_side.vars(); ++v)
            if ((zx >> v) & 1) x_zeros.push_back(v);
        for (int v = 0; v < y_side.vars(); ++v)
            if ((zy >> v) & 1) y_zeros.push_back(v);

        const LinearSolution xs = x_side.solve_with_zeros(x_zeros);
        if (!xs.consistent) return false;
        const LinearSolution ys = y_side.solve_with_zeros(y_zeros);
        if (!ys.consistent) return false;
        if (!xs.unique() || !ys.unique()) {
            any_open = true;  // cannot refute this branch by linear algebra alone
            return false;
        }
        if (!nonneg(xs.particular) || !nonneg(ys.particular)) return false;

        const Matrix x = expand_blocks(xs.particular, pe, pf, kf);
        const Matrix y = expand_blocks(ys.particular, pf, pe, ke);
        if (multiply(x, y) != e.matrix() || multiply(y, x) != f.matrix()) return false;

        result.status = WitnessSearchStatus::found;
        result.witness = DWitness{x, y};
        return true;
    };

    if (!explore(0, 0)) {
        result.status = any_open ? WitnessSearchStatus::undecided : WitnessSearchStatus::infeasible;
    }
    return result;
}

}  // namespace dstoch
