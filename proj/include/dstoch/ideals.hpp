#pragma once

#include <string>

#include "dstoch/idempotents.hpp"
#include "dstoch/matrix.hpp"
#include "dstoch/partitions.hpp"

namespace dstoch {

// Principal right ideal E * D_n, represented by the generator's partition.
// Left ideals are obtained by transposition: M is in D_n * E iff M^T is in
// E * D_n.
class IdealHandle {
public:
    explicit IdealHandle(SetPartition generator) : generator_(std::move(generator)) {}

    int n() const { return generator_.n(); }
    const SetPartition& generator() const { return generator_; }

    bool operator==(const IdealHandle& o) const { return generator_ == o.generator_; }

private:
    SetPartition generator_;
};

IdealHandle ideal_of(const Idempotent& e);

// Exact membership: m is in E*D_n iff m is doubly stochastic and E*m == m
// (equivalently, the rows of m agree within every generator block).
bool contains_matrix(const IdealHandle& ideal, const Matrix& m);

// Membership with the first violated condition spelled out. Row/column
// labels in `reason` are 1-based.
struct MembershipReport {
    bool member = false;
    std::string reason;  // empty when member
};
MembershipReport check_membership(const IdealHandle& ideal, const Matrix& m);

// inner is a subset of outer iff outer's generator refines inner's: a finer
// generator imposes fewer row identifications, hence a larger ideal.
bool contains_ideal(const IdealHandle& outer, const IdealHandle& inner);

// Intersection of the two ideals; generator is the partition join.
IdealHandle ideal_meet(const IdealHandle& a, const IdealHandle& b);

// Smallest idempotent-generated ideal containing both; generator is the
// partition meet.
IdealHandle ideal_join(const IdealHandle& a, const IdealHandle& b);

// Symbolic description of the ideal's members: one representative stochastic
// row per generator block, rows within a block identical, and the column
// sums force the last block's row. The k-block family in D_n therefore has
// k-1 free rows and (k-1)(n-1) scalar parameters, constrained so every
// forced entry stays nonnegative.
struct FamilyDescription {
    SetPartition generator;
    int free_rows;
    int free_parameters;
    bool single_member;    // one-block generator: the ideal is {E}
    bool full_semigroup;   // all-singletons generator: the ideal is D_n
    std::string text;
};
FamilyDescription describe_family(const IdealHandle& ideal);

// Paper-style ideal label: I^k with the non-singleton generator blocks
// listed 1-based, e.g. I^2_(1,2),(3,4). Singleton blocks are omitted.
std::string ideal_label(const SetPartition& generator);

}  // namespace dstoch
