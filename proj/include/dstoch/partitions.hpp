#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dstoch/matrix.hpp"
#include "dstoch/rational.hpp"

namespace dstoch {

// Integer partition of n, stored as a descending list of parts. Equivalently
// a multiset of block sizes: the "shape" of a set partition.
class IntShape {
public:
    IntShape(int n, std::vector<int> parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int multiplicity(int part) const;                // number of parts equal to `part`
    std::map<int, int> multiplicities() const;       // part size -> multiplicity
    std::string to_string() const;                   // "2+1+1"

    bool operator==(const IntShape&) const = default;

private:
    int n_;
    std::vector<int> parts_;  // descending
};

// Partition of {0,...,n-1} into disjoint non-empty blocks. Canonical form:
// elements ascending within blocks, blocks ordered by minimum element. The
// canonical order over partitions is lexicographic on restricted growth
// strings, matching the enumeration order.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);
    static SetPartition singletons(int n);
    static SetPartition one_block(int n);
    // rgs[i] = block number of element i, blocks numbered by first appearance.
    static SetPartition from_rgs(const std::vector<int>& rgs);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int element) const { return block_index_[static_cast<std::size_t>(element)]; }
    const std::vector<int>& rgs() const { return block_index_; }

    // The partition whose blocks are the p-images of this one's blocks.
    SetPartition relabeled(const Permutation& p) const;

    bool operator==(const SetPartition& o) const {
        return n_ == o.n_ && block_index_ == o.block_index_;
    }
    bool operator<(const SetPartition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return block_index_ < o.block_index_;
    }

private:
    struct Trusted {};
    SetPartition(Trusted, int n, std::vector<std::vector<int>> blocks, std::vector<int> index);

    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // element -> position of its block
};

// Streams every set partition of {0,...,n-1} exactly once, in restricted
// growth string lexicographic order. Lazy: fine for n up to 12 and beyond.
class SetPartitionStream {
public:
    explicit SetPartitionStream(int n);
    std::optional<SetPartition> next();

private:
    int n_;
    bool first_ = true;
    bool exhausted_ = false;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
};

std::vector<SetPartition> all_set_partitions(int n);

// All integer partitions of n, descending-parts lexicographic order:
// n=4 gives 4; 3+1; 2+2; 2+1+1; 1+1+1+1.
std::vector<IntShape> enumerate_int_shapes(int n);

// Multiset of block sizes.
IntShape shape_of(const SetPartition& p);

// Bell number via the Bell-triangle recurrence (independent of the factorial
// counting formula below).
BigInt bell_number(int n);

// Stirling numbers of the second kind, S(n,k) = k*S(n-1,k) + S(n-1,k-1).
BigInt stirling_second(int n, int k);

// Number of set partitions with the given shape:
// n! / prod_alpha (alpha!)^rho_alpha * rho_alpha!.
BigInt count_idempotents_of_shape(const IntShape& shape);

// Sum of the shape counts over all integer partitions of n. Always equals
// bell_number(n); the two routes are kept independent so tests can compare.
BigInt count_idempotents(int n);

// Every block of p lies inside some block of q.
bool refines(const SetPartition& p, const SetPartition& q);

// Coarsest common refinement: blocks are the non-empty pairwise
// intersections of a p-block with a q-block.
SetPartition partition_meet(const SetPartition& p, const SetPartition& q);

// Finest partition refined by both, via union-find over the merged blocks.
SetPartition partition_join(const SetPartition& p, const SetPartition& q);

}  // namespace dstoch
