// Command-line front end: counting, enumeration, ideal membership, meet/join,
// D-witnesses, lattice export, and the self-verification suite. Exit codes:
// 0 success / positive answer, 1 negative answer or failed verification,
// 2 usage or parse error, 3 internal invariant violation.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dstoch/green.hpp"
#include "dstoch/ideals.hpp"
#include "dstoch/idempotents.hpp"
#include "dstoch/io.hpp"
#include "dstoch/lattice.hpp"
#include "dstoch/matrix.hpp"
#include "dstoch/partitions.hpp"
#include "dstoch/verify.hpp"

namespace {

using namespace dstoch;

// Size guards default to the documented limits; DSTOCH_MAX_N overrides them.
int guard_limit(int default_limit) {
    if (const char* env = std::getenv("DSTOCH_MAX_N")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
            throw ParseError("DSTOCH_MAX_N is not an integer");
        }
    }
    return default_limit;
}

void require_guard(int n, int limit, const std::string& what) {
    if (n > limit) {
        throw LimitError(what + ": n = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limit) + " (override with DSTOCH_MAX_N)");
    }
}

int cmd_count(int n, bool by_shape, bool as_json) {
    require_guard(n, guard_limit(30), "count");
    if (as_json) {
        Json out;
        out["n"] = n;
        out["total"] = count_idempotents(n).str();
        if (by_shape) {
            Json rows = Json::array();
            for (const IntShape& shape : enumerate_int_shapes(n)) {
                Json row;
                row["shape"] = shape.to_string();
                row["parts"] = shape.parts();
                row["count"] = count_idempotents_of_shape(shape).str();
                rows.push_back(std::move(row));
            }
            out["by_shape"] = std::move(rows);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (by_shape) {
        std::size_t width = 0;
        const auto shapes = enumerate_int_shapes(n);
        for (const IntShape& shape : shapes) width = std::max(width, shape.to_string().size());
        for (const IntShape& shape : shapes) {
            std::string label = shape.to_string();
            label.append(width - label.size(), ' ');
            std::cout << "shape " << label << "  count " << count_idempotents_of_shape(shape).str()
                      << "\n";
        }
        std::cout << "total " << count_idempotents(n).str() << "\n";
    } else {
        std::cout << count_idempotents(n).str() << "\n";
    }
    return 0;
}

int cmd_enumerate(int n, const std::string& format) {
    require_guard(n, guard_limit(8), "enumerate");
    if (format == "dot") {
        std::cout << export_dot(build_lattice(n, guard_limit(12)));
        return 0;
    }
    if (format == "json") {
        Json out = Json::array();
        IdempotentStream stream(n);
        while (auto e = stream.next()) {
            Json record;
            record["partition"] = partition_to_json(e->partition());
            record["shape"] = shape_to_json(shape_of(e->partition()));
            record["rank"] = e->partition().block_count();
            record["matrix"] = matrix_to_json(e->matrix());
            out.push_back(std::move(record));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    int index = 0;
    IdempotentStream stream(n);
    while (auto e = stream.next()) {
        std::cout << "#" << index++ << "  partition " << partition_spec(e->partition())
                  << "  shape " << shape_of(e->partition()).to_string() << "  rank "
                  << e->partition().block_count() << "\n"
                  << matrix_pretty(e->matrix()) << "\n";
    }
    return 0;
}

int cmd_membership(const std::string& path, const std::string& ideal_spec,
                   const std::string& side, bool as_json) {
    Matrix m = read_matrix_file(path);
    if (!m.is_square()) throw ParseError("membership needs a square matrix");
    const IdealHandle ideal(parse_partition_spec(ideal_spec, m.rows()));
    const Matrix oriented = side == "left" ? transpose(m) : m;

    const MembershipReport report = check_membership(ideal, oriented);
    if (report.member != contains_matrix(ideal, oriented)) {
        throw InternalCheckError("membership criteria disagree");
    }
    if (as_json) {
        Json out;
        out["member"] = report.member;
        out["ideal"] = ideal_to_json(ideal);
        out["side"] = side;
        if (!report.member) out["reason"] = report.reason;
        std::cout << out.dump(2) << "\n";
    } else if (report.member) {
        std::cout << "member\n";
    } else {
        std::cout << "non-member: " << report.reason << "\n";
    }
    return report.member ? 0 : 1;
}

int cmd_ideal_op(int n, const std::string& op, const std::string& spec_a,
                 const std::string& spec_b, bool as_json) {
    const IdealHandle a(parse_partition_spec(spec_a, n));
    if (op == "describe") {
        const FamilyDescription family = describe_family(a);
        if (as_json) {
            std::cout << family_to_json(family).dump(2) << "\n";
        } else {
            std::cout << ideal_label(a.generator()) << ": " << family.text << "\n";
        }
        return 0;
    }
    if (spec_b.empty()) throw ParseError("--b is required for op '" + op + "'");
    const IdealHandle b(parse_partition_spec(spec_b, n));
    if (op == "contains") {
        const bool result = contains_ideal(a, b);
        if (as_json) {
            Json out;
            out["contains"] = result;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (result ? "true" : "false") << "\n";
        }
        return result ? 0 : 1;
    }
    const IdealHandle result = op == "meet" ? ideal_meet(a, b) : ideal_join(a, b);
    if (as_json) {
        Json out;
        out["op"] = op;
        out["result"] = ideal_to_json(result);
        out["label"] = ideal_label(result.generator());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << partition_spec(result.generator()) << "  [" << ideal_label(result.generator())
                  << "]\n";
    }
    return 0;
}

int cmd_witness(int n, const std::string& spec_e, const std::string& spec_f, bool search,
                bool as_json) {
    const Idempotent e(parse_partition_spec(spec_e, n));
    const Idempotent f(parse_partition_spec(spec_f, n));
    const bool same_shape = shape_of(e.partition()) == shape_of(f.partition());

    if (!same_shape && !search) {
        throw ParseError("no constructive witness for cross-shape pairs; rerun with --search");
    }

    std::string status;
    std::optional<DWitness> witness;
    if (same_shape) {
        witness = same_shape_d_witness(e, f);
        if (!verify_d_witness(*witness, e, f)) {
            throw InternalCheckError("constructed witness failed verification");
        }
        status = "constructed";
    } else {
        const WitnessSearchResult result = search_d_witness(e, f);
        switch (result.status) {
            case WitnessSearchStatus::found:
                witness = result.witness;
                status = "found";
                break;
            case WitnessSearchStatus::infeasible:
                status = "infeasible";
                break;
            case WitnessSearchStatus::undecided:
                status = "undecided";
                break;
        }
    }

    if (as_json) {
        Json out;
        out["status"] = status;
        if (witness) out["witness"] = witness_to_json(*witness);
        std::cout << out.dump(2) << "\n";
    } else if (witness) {
        std::cout << "status: " << status << "\nx =\n"
                  << matrix_pretty(witness->x) << "y =\n"
                  << matrix_pretty(witness->y);
    } else if (status == "infeasible") {
        std::cout << "status: infeasible (no normalized witness pair exists)\n";
    } else {
        std::cout << "status: undecided (search could not settle the pair)\n";
    }
    return witness ? 0 : 1;
}

int cmd_lattice(int n, const std::string& format, bool tables) {
    const IdealLattice lattice = build_lattice(n, guard_limit(12));
    if (format == "dot") {
        std::cout << export_dot(lattice);
        return 0;
    }
    if (format == "json") {
        Json out = lattice_to_json(lattice);
        if (tables) {
            const MeetJoinTable mj = meet_join_table(lattice, guard_limit(6));
            out["meet"] = mj.meet;
            out["join"] = mj.join;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n " << lattice.n << "\nnodes " << lattice.nodes.size() << "\ncovers "
              << lattice.cover_edges.size() << "\n";
    for (const auto& [rank, count] : lattice.level_sizes) {
        std::cout << "level " << rank << " size " << count << "\n";
    }
    return 0;
}

int cmd_verify(int max_n, std::uint64_t seed, bool as_json, const std::string& inject) {
    require_guard(max_n, guard_limit(6), "verify");
    VerifyOptions options;
    options.max_n = max_n;
    options.seed = seed;
    options.inject_failure = inject;
    const std::vector<CheckResult> results = run_verification(options);

    if (as_json) {
        Json checks = Json::array();
        for (const CheckResult& r : results) {
            Json entry;
            entry["name"] = r.name;
            entry["passed"] = r.passed;
            entry["skipped"] = r.skipped;
            entry["detail"] = r.detail;
            checks.push_back(std::move(entry));
        }
        Json out;
        out["max_n"] = max_n;
        out["seed"] = seed;
        out["checks"] = std::move(checks);
        out["all_passed"] = all_passed(results);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            if (r.skipped) {
                std::cout << "SKIP " << r.name << " (" << r.detail << ")\n";
            } else if (r.passed) {
                std::cout << "PASS " << r.name << "\n";
            } else {
                std::cout << "FAIL " << r.name << " -- " << r.detail << "\n";
            }
        }
        const auto failed = std::count_if(results.begin(), results.end(),
                                          [](const CheckResult& r) { return !r.passed; });
        std::cout << (failed == 0 ? "all checks passed"
                                  : std::to_string(failed) + " check(s) failed")
                  << "\n";
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for idempotents and idempotent-generated ideals of the "
                 "semigroup D_n of doubly stochastic matrices"};
    app.require_subcommand(1);

    int count_n = 1;
    bool count_by_shape = false, count_json = false;
    CLI::App* count = app.add_subcommand("count", "count the idempotents of D_n");
    count->add_option("n", count_n, "matrix size")->required()->check(CLI::PositiveNumber);
    count->add_flag("--by-shape", count_by_shape, "one row per integer partition of n");
    count->add_flag("--json", count_json, "JSON output");

    int enum_n = 1;
    std::string enum_format = "pretty";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all idempotents of D_n");
    enumerate->add_option("n", enum_n, "matrix size")->required()->check(CLI::PositiveNumber);
    enumerate
        ->add_option("--format", enum_format,
                     "pretty, json, or dot (ideal-lattice Hasse diagram)")
        ->check(CLI::IsMember({"pretty", "json", "dot"}));

    std::string member_file, member_ideal, member_side = "right";
    bool member_json = false;
    CLI::App* membership =
        app.add_subcommand("membership", "test a matrix for membership in an ideal");
    membership->add_option("matrix-file", member_file, "matrix as JSON or CSV")->required();
    membership->add_option("--ideal", member_ideal, "generator partition, e.g. \"(1,2)(3,4)\"")
        ->required();
    membership->add_option("--side", member_side, "right (E*D_n) or left (D_n*E)")
        ->check(CLI::IsMember({"right", "left"}));
    membership->add_flag("--json", member_json, "JSON output");

    int op_n = 0;
    std::string op_name, op_a, op_b;
    bool op_json = false;
    CLI::App* ideal_op = app.add_subcommand("ideal-op", "meet, join, containment, or description");
    ideal_op->add_option("--n", op_n, "matrix size")->required()->check(CLI::PositiveNumber);
    ideal_op->add_option("--op", op_name, "meet, join, contains, or describe")
        ->required()
        ->check(CLI::IsMember({"meet", "join", "contains", "describe"}));
    ideal_op->add_option("--a", op_a, "first generator partition")->required();
    ideal_op->add_option("--b", op_b, "second generator partition");
    ideal_op->add_flag("--json", op_json, "JSON output");

    int witness_n = 0;
    std::string witness_e, witness_f;
    bool witness_search = false, witness_json = false;
    CLI::App* witness = app.add_subcommand("witness", "D-relation witness for two idempotents");
    witness->add_option("--n", witness_n, "matrix size")->required()->check(CLI::PositiveNumber);
    witness->add_option("--e", witness_e, "first idempotent's partition")->required();
    witness->add_option("--f", witness_f, "second idempotent's partition")->required();
    witness->add_flag("--search", witness_search,
                      "run the exact witness search (needed for cross-shape pairs)");
    witness->add_flag("--json", witness_json, "JSON output");

    int lattice_n = 1;
    std::string lattice_format = "dot";
    bool lattice_tables = false;
    CLI::App* lattice = app.add_subcommand("lattice", "the lattice of idempotent-generated ideals");
    lattice->add_option("n", lattice_n, "matrix size")->required()->check(CLI::PositiveNumber);
    lattice->add_option("--format", lattice_format, "dot, json, or summary")
        ->check(CLI::IsMember({"dot", "json", "summary"}));
    lattice->add_flag("--tables", lattice_tables, "include meet/join tables in JSON output");

    int verify_max_n = 4;
    std::uint64_t verify_seed = 1;
    bool verify_json = false;
    std::string verify_inject;
    CLI::App* verify = app.add_subcommand("verify", "run the identity-reproduction suite");
    verify->add_option("--max-n", verify_max_n, "cap for enumeration-heavy checks (default 4)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "seed for sampled checks");
    verify->add_flag("--json", verify_json, "machine-readable JSON report");
    verify->add_option("--inject-failure", verify_inject, "force the named check to fail")
        ->group("");  // hidden; exercises the failure-reporting path

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_n, count_by_shape, count_json);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_format);
        if (membership->parsed())
            return cmd_membership(member_file, member_ideal, member_side, member_json);
        if (ideal_op->parsed()) return cmd_ideal_op(op_n, op_name, op_a, op_b, op_json);
        if (witness->parsed())
            return cmd_witness(witness_n, witness_e, witness_f, witness_search, witness_json);
        if (lattice->parsed()) return cmd_lattice(lattice_n, lattice_format, lattice_tables);
        if (verify->parsed())
            return cmd_verify(verify_max_n, verify_seed, verify_json, verify_inject);
    } catch (const InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
