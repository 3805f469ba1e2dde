#include "dstoch/ideals.hpp"

namespace dstoch {

IdealHandle ideal_of(const Idempotent& e) { return IdealHandle(e.partition()); }

bool contains_matrix(const IdealHandle& ideal, const Matrix& m) {
    if (!m.is_square() || m.rows() != ideal.n()) {
        throw DimensionError("contains_matrix: matrix size does not match the ideal");
    }
    if (!is_doubly_stochastic(m)) return false;
    const Matrix generator = idempotent_from_partition(ideal.generator()).matrix();
    return multiply(generator, m) == m;
}

MembershipReport check_membership(const IdealHandle& ideal, const Matrix& m) {
    if (!m.is_square() || m.rows() != ideal.n()) {
        throw DimensionError("check_membership: matrix size does not match the ideal");
    }
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
        Rational sum = 0;
        for (int j = 0; j < n; ++j) {
            if (m(i, j) < 0) {
                return {false, "entry at row " + std::to_string(i + 1) + ", column " +
                                   std::to_string(j + 1) + " is negative"};
            }
            sum += m(i, j);
        }
        if (sum != 1) {
            return {false,
                    "row " + std::to_string(i + 1) + " sums to " + to_string(sum) + ", not 1"};
        }
    }
    for (int j = 0; j < n; ++j) {
        Rational sum = 0;
        for (int i = 0; i < n; ++i) sum += m(i, j);
        if (sum != 1) {
            return {false,
                    "column " + std::to_string(j + 1) + " sums to " + to_string(sum) + ", not 1"};
        }
    }
    for (const auto& block : ideal.generator().blocks()) {
        const int first = block.front();
        for (std::size_t t = 1; t < block.size(); ++t) {
            const int other = block[t];
            for (int j = 0; j < n; ++j) {
                if (m(first, j) != m(other, j)) {
                    return {false, "rows " + std::to_string(first + 1) + "," +
                                       std::to_string(other + 1) + " differ"};
                }
            }
        }
    }
    return {true, ""};
}

bool contains_ideal(const IdealHandle& outer, const IdealHandle& inner) {
    if (outer.n() != inner.n()) throw DimensionError("contains_ideal: different n");
    return refines(outer.generator(), inner.generator());
}

IdealHandle ideal_meet(const IdealHandle& a, const IdealHandle& b) {
    if (a.n() != b.n()) throw DimensionError("ideal_meet: different n");
    return IdealHandle(partition_join(a.generator(), b.generator()));
}

IdealHandle ideal_join(const IdealHandle& a, const IdealHandle& b) {
    if (a.n() != b.n()) throw DimensionError("ideal_join: different n");
    return IdealHandle(partition_meet(a.generator(), b.generator()));
}

namespace {

std::string blocks_text(const SetPartition& p) {
    std::string out;
    for (const auto& block : p.blocks()) {
        out += '(';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(block[i] + 1);
        }
        out += ')';
    }
    return out;
}

}  // namespace

FamilyDescription describe_family(const IdealHandle& ideal) {
    const SetPartition& generator = ideal.generator();
    const int n = generator.n();
    const int k = generator.block_count();

    FamilyDescription out{generator,
                          k - 1,
                          (k - 1) * (n - 1),
                          k == 1,
                          k == n,
                          ""};

    std::string text = "generator blocks " + blocks_text(generator) + "; ";
    if (out.single_member) {
        text += "the ideal contains exactly one matrix, the generator itself";
    } else if (out.full_semigroup) {
        text += "the ideal is all of D_" + std::to_string(n);
    } else {
        text += "members carry one representative stochastic row per block, rows within a "
                "block identical; column sums force the last block's row; " +
                std::to_string(out.free_rows) + " free row(s), " +
                std::to_string(out.free_parameters) +
                " free parameter(s), constrained so every forced entry stays nonnegative";
    }
    out.text = std::move(text);
    return out;
}

std::string ideal_label(const SetPartition& generator) {
    std::string label = "I^" + std::to_string(generator.block_count());
    std::string subscript;
    for (const auto& block : generator.blocks()) {
        if (block.size() < 2) continue;
        if (!subscript.empty()) subscript += ',';
        subscript += '(';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) subscript += ',';
            subscript += std::to_string(block[i] + 1);
        }
        subscript += ')';
    }
    if (!subscript.empty()) label += "_" + subscript;
    return label;
}

}  // namespace dstoch
