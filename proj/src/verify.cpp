#include "dstoch/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "dstoch/green.hpp"
#include "dstoch/ideals.hpp"
#include "dstoch/idempotents.hpp"
#include "dstoch/io.hpp"
#include "dstoch/lattice.hpp"
#include "dstoch/matrix.hpp"
#include "dstoch/partitions.hpp"

namespace dstoch {

namespace {

// The D_3 and D_4 idempotent catalogs, frozen entry by entry.
const char* const kCatalogD3[] = {
    "1/3,1/3,1/3\n1/3,1/3,1/3\n1/3,1/3,1/3",
    "1/2,1/2,0\n1/2,1/2,0\n0,0,1",
    "1/2,0,1/2\n0,1,0\n1/2,0,1/2",
    "1,0,0\n0,1/2,1/2\n0,1/2,1/2",
    "1,0,0\n0,1,0\n0,0,1",
};

const char* const kCatalogD4[] = {
    "1/4,1/4,1/4,1/4\n1/4,1/4,1/4,1/4\n1/4,1/4,1/4,1/4\n1/4,1/4,1/4,1/4",
    "1/2,1/2,0,0\n1/2,1/2,0,0\n0,0,1/2,1/2\n0,0,1/2,1/2",
    "1/2,0,1/2,0\n0,1/2,0,1/2\n1/2,0,1/2,0\n0,1/2,0,1/2",
    "1/2,0,0,1/2\n0,1/2,1/2,0\n0,1/2,1/2,0\n1/2,0,0,1/2",
    "1,0,0,0\n0,1/3,1/3,1/3\n0,1/3,1/3,1/3\n0,1/3,1/3,1/3",
    "1/3,0,1/3,1/3\n0,1,0,0\n1/3,0,1/3,1/3\n1/3,0,1/3,1/3",
    "1/3,1/3,0,1/3\n1/3,1/3,0,1/3\n0,0,1,0\n1/3,1/3,0,1/3",
    "1/3,1/3,1/3,0\n1/3,1/3,1/3,0\n1/3,1/3,1/3,0\n0,0,0,1",
    "1,0,0,0\n0,1,0,0\n0,0,1/2,1/2\n0,0,1/2,1/2",
    "1/2,1/2,0,0\n1/2,1/2,0,0\n0,0,1,0\n0,0,0,1",
    "1,0,0,0\n0,1/2,0,1/2\n0,0,1,0\n0,1/2,0,1/2",
    "1,0,0,0\n0,1/2,1/2,0\n0,1/2,1/2,0\n0,0,0,1",
    "1/2,0,1/2,0\n0,1,0,0\n1/2,0,1/2,0\n0,0,0,1",
    "1/2,0,0,1/2\n0,1,0,0\n0,0,1,0\n1/2,0,0,1/2",
    "1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1",
};

class Runner {
public:
    explicit Runner(const VerifyOptions& options) : options_(options) {}

    // body returns pass/fail and may write a detail message.
    void check(const std::string& name, int needs_n,
               const std::function<bool(std::string&)>& body) {
        CheckResult result;
        result.name = name;
        if (needs_n > options_.max_n) {
            result.passed = true;
            result.skipped = true;
            result.detail = "skipped (requires max-n >= " + std::to_string(needs_n) + ")";
            results_.push_back(std::move(result));
            return;
        }
        std::string detail;
        bool passed = false;
        try {
            passed = body(detail);
        } catch (const std::exception& e) {
            passed = false;
            detail = std::string("exception: ") + e.what();
        }
        if (options_.inject_failure == name) {
            passed = false;
            detail = "failure injected for harness testing";
        }
        result.passed = passed;
        result.detail = detail;
        results_.push_back(std::move(result));
    }

    std::vector<CheckResult> take() { return std::move(results_); }
    const VerifyOptions& options() const { return options_; }

private:
    VerifyOptions options_;
    std::vector<CheckResult> results_;
};

std::vector<Matrix> parse_catalog(const char* const* entries, std::size_t count) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_csv(entries[i]));
    return out;
}

bool same_matrix_set(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                     std::string& detail) {
    std::multiset<std::string> left, right;
    for (const Matrix& m : a) left.insert(matrix_to_csv(m));
    for (const Matrix& m : b) right.insert(matrix_to_csv(m));
    if (left == right) return true;
    detail = "matrix sets differ (" + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()) + " entries)";
    return false;
}

// All stochastic vectors of length n with entries in (1/d) * {0,...,d}.
std::vector<std::vector<Rational>> stochastic_grid(int n, int d) {
    std::vector<std::vector<Rational>> out;
    std::vector<int> acc(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == n - 1) {
            acc[static_cast<std::size_t>(index)] = remaining;
            std::vector<Rational> vec;
            vec.reserve(static_cast<std::size_t>(n));
            for (int v : acc) vec.push_back(make_rational(v, d));
            out.push_back(std::move(vec));
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            acc[static_cast<std::size_t>(index)] = take;
            rec(index + 1, remaining - take);
        }
    };
    rec(0, d);
    return out;
}

Matrix assemble_family_member(const SetPartition& generator,
                              const std::vector<std::vector<Rational>>& rep_rows,
                              const std::vector<Rational>& forced_row) {
    const int n = generator.n();
    Matrix m(n, n);
    const auto& blocks = generator.blocks();
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        for (int i : blocks[b])
            for (int j = 0; j < n; ++j) m(i, j) = rep_rows[b][static_cast<std::size_t>(j)];
    }
    for (int i : blocks.back())
        for (int j = 0; j < n; ++j) m(i, j) = forced_row[static_cast<std::size_t>(j)];
    return m;
}

// Grid members of the ideal family: one representative stochastic row per
// block, the last block's row forced by the column sums. DFS prunes as soon
// as a running weighted column sum exceeds 1.
std::vector<Matrix> family_grid_members(const SetPartition& generator, int grid_denominator,
                                        std::size_t want) {
    const int n = generator.n();
    const auto& blocks = generator.blocks();
    const int k = generator.block_count();
    std::vector<Matrix> members;
    if (k == 1) {
        members.push_back(idempotent_from_partition(generator).matrix());
        return members;
    }

    const auto grid = stochastic_grid(n, grid_denominator);
    std::vector<std::vector<Rational>> chosen;
    std::vector<Rational> weighted_sum(static_cast<std::size_t>(n), Rational(0));

    const std::function<bool(int)> dfs = [&](int block_idx) -> bool {
        if (block_idx == k - 1) {
            std::vector<Rational> forced(static_cast<std::size_t>(n));
            const Rational size = static_cast<int>(blocks.back().size());
            for (int j = 0; j < n; ++j) {
                forced[static_cast<std::size_t>(j)] =
                    (Rational(1) - weighted_sum[static_cast<std::size_t>(j)]) / size;
            }
            members.push_back(assemble_family_member(generator, chosen, forced));
            return members.size() >= want;
        }
        const Rational block_size = static_cast<int>(blocks[static_cast<std::size_t>(block_idx)].size());
        for (const auto& row : grid) {
            bool feasible = true;
            for (int j = 0; j < n; ++j) {
                if (weighted_sum[static_cast<std::size_t>(j)] + block_size * row[static_cast<std::size_t>(j)] > 1) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            for (int j = 0; j < n; ++j) {
                weighted_sum[static_cast<std::size_t>(j)] += block_size * row[static_cast<std::size_t>(j)];
            }
            chosen.push_back(row);
            const bool done = dfs(block_idx + 1);
            chosen.pop_back();
            for (int j = 0; j < n; ++j) {
                weighted_sum[static_cast<std::size_t>(j)] -= block_size * row[static_cast<std::size_t>(j)];
            }
            if (done) return true;
        }
        return false;
    };
    dfs(0);
    return members;
}

bool check_family(const SetPartition& generator, std::uint64_t seed, std::string& detail) {
    const Idempotent e = idempotent_from_partition(generator);
    const IdealHandle ideal = ideal_of(e);
    const int n = generator.n();

    std::vector<Matrix> members = family_grid_members(generator, 12, 10);
    const std::size_t grid_count = members.size();
    if (generator.block_count() > 1 && grid_count < 10) {
        detail = "only " + std::to_string(grid_count) + " grid members found for " +
                 ideal_label(generator);
        return false;
    }
    for (int i = 0; i < 10; ++i) {
        members.push_back(multiply(e.matrix(), random_doubly_stochastic(n, seed + static_cast<std::uint64_t>(i), 3)));
    }
    for (const Matrix& m : members) {
        if (!is_doubly_stochastic(m) || !contains_matrix(ideal, m) ||
            multiply(e.matrix(), m) != m) {
            detail = "family member check failed for " + ideal_label(generator);
            return false;
        }
    }
    return true;
}

Matrix reassemble(const BlockDecomposition& decomposition, int n) {
    Matrix diag(n, n);
    int offset = 0;
    for (const Matrix& block : decomposition.blocks) {
        for (int i = 0; i < block.rows(); ++i)
            for (int j = 0; j < block.cols(); ++j) diag(offset + i, offset + j) = block(i, j);
        offset += block.rows();
    }
    return conjugate_by_permutation(decomposition.relabeling.inverse(), diag);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Runner runner(options);
    const int max_n = options.max_n;
    const std::uint64_t seed = options.seed;

    runner.check("counting/per-shape", 1, [&](std::string& detail) {
        const std::map<std::string, BigInt> expected3{{"3", 1}, {"2+1", 3}, {"1+1+1", 1}};
        const std::map<std::string, BigInt> expected4{
            {"4", 1}, {"3+1", 4}, {"2+2", 3}, {"2+1+1", 6}, {"1+1+1+1", 1}};
        for (const auto& [n, expected] :
             std::vector<std::pair<int, const std::map<std::string, BigInt>*>>{
                 {3, &expected3}, {4, &expected4}}) {
            std::map<std::string, BigInt> actual;
            for (const IntShape& shape : enumerate_int_shapes(n)) {
                actual[shape.to_string()] = count_idempotents_of_shape(shape);
            }
            if (actual != *expected) {
                detail = "per-shape counts wrong for n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    runner.check("counting/bell", 1, [&](std::string& detail) {
        for (int n = 1; n <= 10; ++n) {
            if (count_idempotents(n) != bell_number(n)) {
                detail = "formula and Bell triangle disagree at n=" + std::to_string(n);
                return false;
            }
        }
        if (count_idempotents(3) != 5 || count_idempotents(4) != 15) {
            detail = "expected totals 5 and 15 for n=3,4";
            return false;
        }
        return true;
    });

    runner.check("catalog/d3", 3, [&](std::string& detail) {
        std::vector<Matrix> enumerated;
        for (const Idempotent& e : all_idempotents(3)) enumerated.push_back(e.matrix());
        return same_matrix_set(enumerated, parse_catalog(kCatalogD3, 5), detail);
    });

    runner.check("catalog/d4", 4, [&](std::string& detail) {
        std::vector<Matrix> enumerated;
        for (const Idempotent& e : all_idempotents(4)) enumerated.push_back(e.matrix());
        return same_matrix_set(enumerated, parse_catalog(kCatalogD4, 15), detail);
    });

    runner.check("rank/blocks", 1, [&](std::string& detail) {
        for (int n = 1; n <= std::min(6, max_n); ++n) {
            for (const Idempotent& e : all_idempotents(n)) {
                if (rank(e.matrix()) != e.partition().block_count()) {
                    detail = "rank != block count at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        if (max_n >= 3) {
            if (rank(Matrix::constant(3, make_rational(1, 3))) != 1 ||
                rank(Matrix::identity(3)) != 3) {
                detail = "rank fixtures for the constant and identity matrices failed";
                return false;
            }
        }
        return true;
    });

    runner.check("families/d3", 3, [&](std::string& detail) {
        for (const Idempotent& e : all_idempotents(3)) {
            if (!check_family(e.partition(), seed, detail)) return false;
        }
        return true;
    });

    runner.check("families/d4", 4, [&](std::string& detail) {
        for (const Idempotent& e : all_idempotents(4)) {
            if (e.partition().block_count() == 1) continue;  // trivial single-member family
            if (!check_family(e.partition(), seed, detail)) return false;
        }
        return true;
    });

    runner.check("identities/meet-join", 4, [&](std::string& detail) {
        const auto ideal = [](std::initializer_list<std::initializer_list<int>> blocks) {
            std::vector<std::vector<int>> copy;
            for (const auto& block : blocks) copy.emplace_back(block);
            return IdealHandle(SetPartition(4, std::move(copy)));
        };
        const IdealHandle e1 = ideal({{0, 1, 2, 3}});
        const IdealHandle e2_1 = ideal({{0, 1}, {2, 3}});
        const IdealHandle e2_2 = ideal({{0, 2}, {1, 3}});
        const IdealHandle e2_5 = ideal({{0, 2, 3}, {1}});
        const IdealHandle e2_6 = ideal({{0, 1, 3}, {2}});
        const IdealHandle e3_1 = ideal({{0}, {1}, {2, 3}});
        const IdealHandle e3_2 = ideal({{0, 1}, {2}, {3}});
        const IdealHandle e3_6 = ideal({{0, 3}, {1}, {2}});
        const IdealHandle e4 = ideal({{0}, {1}, {2}, {3}});

        const std::vector<std::tuple<IdealHandle, const char*>> cases{
            {ideal_meet(e3_1, e3_2), "I^2_(1,2),(3,4)"},
            {ideal_join(e3_1, e3_2), "I^4"},
            {ideal_meet(e2_1, e2_2), "I^1_(1,2,3,4)"},
            {ideal_join(e2_1, e2_2), "I^4"},
            {ideal_meet(e2_5, e2_6), "I^1_(1,2,3,4)"},
            {ideal_join(e2_5, e2_6), "I^3_(1,4)"},
        };
        const std::vector<IdealHandle> expected{e2_1, e4, e1, e4, e1, e3_6};
        for (std::size_t i = 0; i < cases.size(); ++i) {
            if (!(std::get<0>(cases[i]) == expected[i])) {
                detail = std::string("identity ") + std::get<1>(cases[i]) + " failed";
                return false;
            }
        }
        if (!(ideal_meet(e2_1, e3_1) == e2_1) || !(ideal_join(e2_1, e3_1) == e3_1)) {
            detail = "comparable-pair identities failed";
            return false;
        }
        return true;
    });

    runner.check("lattice/laws", 1, [&](std::string& detail) {
        for (int n = 1; n <= std::min(5, max_n); ++n) {
            const IdealLattice lattice = build_lattice(n);
            const LawReport report = verify_lattice_laws(lattice);
            if (!report.ok()) {
                detail = "law violations at n=" + std::to_string(n) + ": " +
                         report.violations.front();
                return false;
            }
            const std::uint64_t count = lattice.nodes.size();
            if (report.pair_checks != count * count ||
                report.triple_checks != count * count * count) {
                detail = "check counts wrong at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    runner.check("lattice/levels", 1, [&](std::string& detail) {
        for (int n = 1; n <= std::min(8, max_n); ++n) {
            const IdealLattice lattice = build_lattice(n);
            for (int k = 1; k <= n; ++k) {
                const auto it = lattice.level_sizes.find(k);
                const std::uint64_t actual = it == lattice.level_sizes.end() ? 0 : it->second;
                if (BigInt(actual) != stirling_second(n, k)) {
                    detail = "level size != S(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    runner.check("absorption", 3, [&](std::string& detail) {
        for (int n = 3; n <= std::min(4, max_n); ++n) {
            const Matrix bottom = Matrix::constant(n, make_rational(1, n));
            for (int i = 0; i < 100; ++i) {
                const Matrix d =
                    random_doubly_stochastic(n, seed + static_cast<std::uint64_t>(100 * n + i), 1 + i % 4);
                if (multiply(bottom, d) != bottom || multiply(d, bottom) != bottom) {
                    detail = "absorption failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    runner.check("irreducible/unique-and-roundtrip", 1, [&](std::string& detail) {
        for (int n = 1; n <= std::min(5, max_n); ++n) {
            const Matrix bottom = Matrix::constant(n, make_rational(1, n));
            int single_block = 0;
            for (const Idempotent& e : all_idempotents(n)) {
                const BlockDecomposition decomposition = irreducible_components(e.matrix());
                if (decomposition.blocks.size() == 1) {
                    ++single_block;
                    if (e.matrix() != bottom) {
                        detail = "unexpected irreducible idempotent at n=" + std::to_string(n);
                        return false;
                    }
                }
                if (reassemble(decomposition, n) != e.matrix()) {
                    detail = "round-trip failed at n=" + std::to_string(n);
                    return false;
                }
            }
            if (single_block != 1) {
                detail = "expected exactly one irreducible idempotent at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    runner.check("witness/same-shape", 1, [&](std::string& detail) {
        for (int n = 1; n <= std::min(4, max_n); ++n) {
            const std::vector<Idempotent> idempotents = all_idempotents(n);
            for (const Idempotent& e : idempotents) {
                for (const Idempotent& f : idempotents) {
                    if (!(shape_of(e.partition()) == shape_of(f.partition()))) continue;
                    if (!verify_d_witness(same_shape_d_witness(e, f), e, f)) {
                        detail = "witness failed for " + ideal_label(e.partition()) + " vs " +
                                 ideal_label(f.partition());
                        return false;
                    }
                }
            }
        }
        return true;
    });

    runner.check("witness/cross-shape-oracle", 4, [&](std::string& detail) {
        const Idempotent e(SetPartition(4, {{0, 1}, {2, 3}}));
        const Idempotent f(SetPartition(4, {{0}, {1, 2, 3}}));
        const WitnessSearchResult result = search_d_witness(e, f);
        if (result.status != WitnessSearchStatus::infeasible) {
            detail = "expected the exact search to refute a normalized witness for the "
                     "(2+2, 3+1) pair";
            return false;
        }
        return true;
    });

    runner.check("closure/products", 3, [&](std::string& detail) {
        const int high = std::min(4, max_n);
        for (int i = 0; i < 1000; ++i) {
            const int n = 3 + (high > 3 ? i % 2 : 0);
            const Matrix a =
                random_doubly_stochastic(n, seed + static_cast<std::uint64_t>(2 * i), 1 + i % 3);
            const Matrix b =
                random_doubly_stochastic(n, seed + static_cast<std::uint64_t>(2 * i + 1), 1 + (i / 3) % 3);
            if (!is_doubly_stochastic(multiply(a, b))) {
                detail = "product left the doubly stochastic set at sample " + std::to_string(i);
                return false;
            }
        }
        return true;
    });

    runner.check("classify/examples", 3, [&](std::string& detail) {
        const Matrix stochastic_only = matrix_from_csv("1/2,1/2,0\n1,0,0\n1/4,1/4,1/2");
        const Matrix doubly = matrix_from_csv("1/2,1/2,0\n0,0,1\n1/2,1/2,0");
        if (!is_stochastic(stochastic_only) || is_doubly_stochastic(stochastic_only)) {
            detail = "the stochastic-only example misclassified";
            return false;
        }
        if (!is_doubly_stochastic(doubly)) {
            detail = "the doubly stochastic example misclassified";
            return false;
        }
        return true;
    });

    return runner.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace dstoch
