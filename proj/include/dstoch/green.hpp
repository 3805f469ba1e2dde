#pragma once

#include <cstdint>
#include <optional>

#include "dstoch/idempotents.hpp"
#include "dstoch/matrix.hpp"

namespace dstoch {

// Certificate that two idempotents E, F are D-related: x*y == E and
// y*x == F, with x, y doubly stochastic and normalized (x == E*x*F,
// y == F*y*E, i.e. x in E*D_n*F and y in F*D_n*E).
struct DWitness {
    Matrix x;
    Matrix y;
};

// Checks the full certificate exactly. Throws DimensionError when the sizes
// disagree; returns false (never throws) when any certificate equation or
// stochasticity condition fails.
bool verify_d_witness(const DWitness& w, const Idempotent& e, const Idempotent& f);

// Permutation carrying p's blocks onto q's blocks: blocks of equal size are
// matched in order of minimum element, and elements map ascending to
// ascending. Requires shape_of(p) == shape_of(q), else ShapeMismatchError.
Permutation find_conjugating_permutation(const SetPartition& p, const SetPartition& q);

// Constructive witness for same-shape idempotents: with P the conjugating
// permutation matrix, x = E*P^T and y = P*E. Throws ShapeMismatchError for
// cross-shape pairs; no constructive witness is known there (and for some
// same-rank cross-shape pairs none exists, see search_d_witness).
DWitness same_shape_d_witness(const Idempotent& e, const Idempotent& f);

enum class WitnessSearchStatus { found, infeasible, undecided };

struct WitnessSearchResult {
    WitnessSearchStatus status = WitnessSearchStatus::undecided;
    std::optional<DWitness> witness;   // set iff status == found
    std::uint64_t branches = 0;        // zero-pattern branches examined
};

// Exact decision search for a normalized witness pair. Every x in E*D_n*F is
// block-constant (rows constant on E-blocks, columns on F-blocks), so x and
// y live in small transportation polytopes; the zero entries of E and F
// force per-branch support conditions, and each branch reduces to an exact
// linear system. Returns `infeasible` only when every branch is refuted,
// `undecided` when a branch's solution space stays underdetermined or the
// instance exceeds max_product_constraints.
WitnessSearchResult search_d_witness(const Idempotent& e, const Idempotent& f,
                                     int max_product_constraints = 24);

}  // namespace dstoch
