#pragma once

#include <optional>
#include <vector>

#include "dstoch/matrix.hpp"
#include "dstoch/partitions.hpp"

namespace dstoch {

// Idempotent of D_n, keyed by its set partition: entry (i,j) is 1/|B| when i
// and j share block B, else 0. The matrix is cached; equality is partition
// equality.
class Idempotent {
public:
    explicit Idempotent(SetPartition partition);

    int n() const { return partition_.n(); }
    const SetPartition& partition() const { return partition_; }
    const Matrix& matrix() const { return matrix_; }

    bool operator==(const Idempotent& o) const { return partition_ == o.partition_; }

private:
    SetPartition partition_;
    Matrix matrix_;
};

Idempotent idempotent_from_partition(const SetPartition& p);

// Exact test m*m == m. Throws DimensionError for non-square input.
bool is_idempotent(const Matrix& m);

// Partition whose blocks are the classes of equal rows of m. Verifies by
// rebuilding the idempotent and comparing exactly, which rejects
// non-idempotents and idempotent matrices outside D_n in one pass; throws
// NotIdempotentError on any mismatch.
SetPartition partition_from_matrix(const Matrix& m);

// Relabeling that sorts the blocks by size (descending; ties by smallest
// original index) so the conjugated matrix is block diagonal with constant
// blocks of sizes n_1 >= ... >= n_k.
struct BlockForm {
    Permutation relabeling;
    Matrix block_diagonal;
};
BlockForm canonical_block_form(const Idempotent& e);

// Streams the bell_number(n) idempotents in canonical partition order.
class IdempotentStream {
public:
    explicit IdempotentStream(int n) : inner_(n) {}
    std::optional<Idempotent> next();

private:
    SetPartitionStream inner_;
};

std::vector<Idempotent> all_idempotents(int n);

}  // namespace dstoch
