#include "dstoch/idempotents.hpp"

#include <algorithm>
#include <numeric>

namespace dstoch {

namespace {

Matrix matrix_of_partition(const SetPartition& p) {
    Matrix m(p.n(), p.n());
    for (const auto& block : p.blocks()) {
        const Rational value = make_rational(1, static_cast<int>(block.size()));
        for (int i : block)
            for (int j : block) m(i, j) = value;
    }
    return m;
}

}  // namespace

Idempotent::Idempotent(SetPartition partition)
    : partition_(std::move(partition)), matrix_(matrix_of_partition(partition_)) {}

Idempotent idempotent_from_partition(const SetPartition& p) { return Idempotent(p); }

bool is_idempotent(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("is_idempotent: matrix must be square");
    return multiply(m, m) == m;
}

SetPartition partition_from_matrix(const Matrix& m) {
    if (!m.is_square()) throw NotIdempotentError("not an idempotent of D_n: not square");
    const int n = m.rows();

    // Group indices by exact row equality.
    std::vector<std::vector<int>> blocks;
    std::vector<int> representative;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const int r = representative[b];
            bool equal = true;
            for (int j = 0; j < n; ++j) {
                if (m(i, j) != m(r, j)) {
                    equal = false;
                    break;
                }
            }
            if (equal) {
                blocks[b].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            blocks.push_back({i});
            representative.push_back(i);
        }
    }

    SetPartition partition(n, std::move(blocks));
    if (matrix_of_partition(partition) != m) {
        throw NotIdempotentError("not an idempotent of D_n");
    }
    return partition;
}

BlockForm canonical_block_form(const Idempotent& e) {
    std::vector<int> order(e.partition().blocks().size());
    std::iota(order.begin(), order.end(), 0);
    const auto& blocks = e.partition().blocks();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (blocks[static_cast<std::size_t>(a)].size() != blocks[static_cast<std::size_t>(b)].size()) {
            return blocks[static_cast<std::size_t>(a)].size() > blocks[static_cast<std::size_t>(b)].size();
        }
        return blocks[static_cast<std::size_t>(a)].front() < blocks[static_cast<std::size_t>(b)].front();
    });

    std::vector<int> images(static_cast<std::size_t>(e.n()));
    int position = 0;
    for (int b : order) {
        for (int v : blocks[static_cast<std::size_t>(b)]) {
            images[static_cast<std::size_t>(v)] = position++;
        }
    }
    Permutation relabeling{std::move(images)};
    Matrix arranged = conjugate_by_permutation(relabeling, e.matrix());
    return BlockForm{std::move(relabeling), std::move(arranged)};
}

std::optional<Idempotent> IdempotentStream::next() {
    auto p = inner_.next();
    if (!p) return std::nullopt;
    return Idempotent(std::move(*p));
}

std::vector<Idempotent> all_idempotents(int n) {
    std::vector<Idempotent> out;
    IdempotentStream stream(n);
    while (auto e = stream.next()) out.push_back(std::move(*e));
    return out;
}

}  // namespace dstoch
