#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dstoch/ideals.hpp"

namespace dstoch {

// The lattice of idempotent-generated ideals of D_n. Nodes are in canonical
// partition order; cover_edges hold (lower, upper) node indices in ideal
// containment order, so the bottom is the one-block generator ({E}) and the
// top the all-singletons generator (D_n itself).
struct IdealLattice {
    int n = 0;
    std::vector<IdealHandle> nodes;
    std::vector<std::pair<int, int>> cover_edges;
    std::map<int, std::uint64_t> level_sizes;  // generator block count -> node count
};

// Builds the full lattice. Cover edges are generated combinatorially: the
// upper neighbours of a node are exactly the generators obtained by
// splitting one block into two. Throws LimitError when n exceeds the limit
// (Bell-number blow-up guard).
IdealLattice build_lattice(int n, int limit = 12);

// Index of the node whose generator equals p (nodes are sorted in canonical
// order, so this is a binary search). Throws DimensionError if p has the
// wrong n.
int node_index(const IdealLattice& lattice, const SetPartition& p);

struct LawReport {
    std::uint64_t pair_checks = 0;
    std::uint64_t triple_checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Exhaustively checks commutativity, idempotence, absorption and the
// meet/join-vs-containment consistency over all node pairs, and
// associativity over all triples. Violations are collected, never dropped.
LawReport verify_lattice_laws(const IdealLattice& lattice);

struct MeetJoinTable {
    std::vector<std::vector<int>> meet;  // node index tables
    std::vector<std::vector<int>> join;
};

// Full Bell(n) x Bell(n) meet and join tables. Guarded by `limit`.
MeetJoinTable meet_join_table(const IdealLattice& lattice, int limit = 6);

// GraphViz Hasse diagram, edges bottom-to-top, nodes labeled in the
// I^k_(...) notation. Output is deterministic for a given n.
std::string export_dot(const IdealLattice& lattice);

}  // namespace dstoch
