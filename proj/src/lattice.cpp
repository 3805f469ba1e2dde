#include "dstoch/lattice.hpp"

#include <algorithm>

namespace dstoch {

IdealLattice build_lattice(int n, int limit) {
    if (n < 1) throw DimensionError("build_lattice: n must be positive");
    if (n > limit) {
        throw LimitError("build_lattice: n = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limit) + " (Bell-number blow-up)");
    }

    IdealLattice lattice;
    lattice.n = n;
    SetPartitionStream stream(n);
    while (auto p = stream.next()) {
        ++lattice.level_sizes[p->block_count()];
        lattice.nodes.emplace_back(std::move(*p));
    }

    // Upper covers of a node: split one generator block into two. The split
    // keeping the block's minimum on one side enumerates each unordered
    // split exactly once.
    for (std::size_t idx = 0; idx < lattice.nodes.size(); ++idx) {
        const SetPartition& generator = lattice.nodes[idx].generator();
        const auto& blocks = generator.blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& block = blocks[b];
            const std::size_t m = block.size();
            if (m < 2) continue;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                std::vector<int> keep{block[0]}, moved;
                for (std::size_t t = 1; t < m; ++t) {
                    if ((mask >> (t - 1)) & 1) {
                        moved.push_back(block[t]);
                    } else {
                        keep.push_back(block[t]);
                    }
                }
                std::vector<std::vector<int>> split_blocks;
                split_blocks.reserve(blocks.size() + 1);
                for (std::size_t other = 0; other < blocks.size(); ++other) {
                    if (other != b) split_blocks.push_back(blocks[other]);
                }
                split_blocks.push_back(std::move(keep));
                split_blocks.push_back(std::move(moved));
                const int upper = node_index(lattice, SetPartition(n, std::move(split_blocks)));
                lattice.cover_edges.emplace_back(static_cast<int>(idx), upper);
            }
        }
    }
    std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
    return lattice;
}

int node_index(const IdealLattice& lattice, const SetPartition& p) {
    if (p.n() != lattice.n) throw DimensionError("node_index: partition has wrong n");
    const auto it = std::lower_bound(
        lattice.nodes.begin(), lattice.nodes.end(), p,
        [](const IdealHandle& node, const SetPartition& value) { return node.generator() < value; });
    if (it == lattice.nodes.end() || !(it->generator() == p)) {
        throw InternalCheckError("node_index: partition missing from lattice");
    }
    return static_cast<int>(it - lattice.nodes.begin());
}

namespace {

MeetJoinTable compute_tables(const IdealLattice& lattice) {
    const int count = static_cast<int>(lattice.nodes.size());
    MeetJoinTable tables;
    tables.meet.assign(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(count)));
    tables.join = tables.meet;
    for (int i = 0; i < count; ++i) {
        for (int j = i; j < count; ++j) {
            const IdealHandle& a = lattice.nodes[static_cast<std::size_t>(i)];
            const IdealHandle& b = lattice.nodes[static_cast<std::size_t>(j)];
            const int meet = node_index(lattice, ideal_meet(a, b).generator());
            const int join = node_index(lattice, ideal_join(a, b).generator());
            tables.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = meet;
            tables.meet[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = meet;
            tables.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = join;
            tables.join[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = join;
        }
    }
    return tables;
}

}  // namespace

LawReport verify_lattice_laws(const IdealLattice& lattice) {
    LawReport report;
    const int count = static_cast<int>(lattice.nodes.size());
    const auto node = [&](int i) -> const IdealHandle& {
        return lattice.nodes[static_cast<std::size_t>(i)];
    };
    const auto complain = [&](int i, int j, int k, const char* law) {
        report.violations.push_back(std::string(law) + " fails at nodes (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
    };

    // The tables double as the commutativity witness source and make the
    // cubic associativity sweep a pure index computation.
    const MeetJoinTable tables = compute_tables(lattice);
    const auto meet_of = [&](int i, int j) {
        return tables.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    const auto join_of = [&](int i, int j) {
        return tables.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };

    for (int i = 0; i < count; ++i) {
        if (meet_of(i, i) != i) complain(i, i, i, "meet idempotence");
        if (join_of(i, i) != i) complain(i, i, i, "join idempotence");
        for (int j = 0; j < count; ++j) {
            ++report.pair_checks;
            const IdealHandle meet = ideal_meet(node(i), node(j));
            const IdealHandle join = ideal_join(node(i), node(j));
            if (!(meet == ideal_meet(node(j), node(i)))) complain(i, j, -1, "meet commutativity");
            if (!(join == ideal_join(node(j), node(i)))) complain(i, j, -1, "join commutativity");
            if (node_index(lattice, meet.generator()) != meet_of(i, j)) {
                complain(i, j, -1, "meet table consistency");
            }
            if (node_index(lattice, join.generator()) != join_of(i, j)) {
                complain(i, j, -1, "join table consistency");
            }
            if (join_of(i, meet_of(i, j)) != i) complain(i, j, -1, "absorption join(a, meet(a,b))");
            if (meet_of(i, join_of(i, j)) != i) complain(i, j, -1, "absorption meet(a, join(a,b))");
            if (!contains_ideal(node(i), meet)) complain(i, j, -1, "meet below left operand");
            if (!contains_ideal(node(j), meet)) complain(i, j, -1, "meet below right operand");
            if (!contains_ideal(join, node(i))) complain(i, j, -1, "join above left operand");
            if (!contains_ideal(join, node(j))) complain(i, j, -1, "join above right operand");
        }
    }

    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            for (int k = 0; k < count; ++k) {
                ++report.triple_checks;
                if (meet_of(meet_of(i, j), k) != meet_of(i, meet_of(j, k))) {
                    complain(i, j, k, "meet associativity");
                }
                if (join_of(join_of(i, j), k) != join_of(i, join_of(j, k))) {
                    complain(i, j, k, "join associativity");
                }
            }
        }
    }
    return report;
}

MeetJoinTable meet_join_table(const IdealLattice& lattice, int limit) {
    if (lattice.n > limit) {
        throw LimitError("meet_join_table: n = " + std::to_string(lattice.n) +
                         " exceeds the table limit " + std::to_string(limit));
    }
    return compute_tables(lattice);
}

std::string export_dot(const IdealLattice& lattice) {
    std::string out = "digraph ideal_lattice_" + std::to_string(lattice.n) + " {\n";
    out += "  rankdir=BT;\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" +
               ideal_label(lattice.nodes[i].generator()) + "\"];\n";
    }
    for (const auto& [lower, upper] : lattice.cover_edges) {
        out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace dstoch
