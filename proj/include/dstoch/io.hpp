#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dstoch/green.hpp"
#include "dstoch/ideals.hpp"
#include "dstoch/lattice.hpp"
#include "dstoch/matrix.hpp"
#include "dstoch/partitions.hpp"

namespace dstoch {

using Json = nlohmann::json;

// Matrix JSON: {"n": 3, "rows": [["1/2","1/2","0"], ...]} with rationals as
// "p/q" or integer strings. Round-trips are bit-exact. The CSV variant is
// one row per line with comma-separated p/q cells.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(std::string_view text);

// Sniffs the format: JSON when the first non-space byte is '{', else CSV.
Matrix parse_matrix_text(std::string_view text);
Matrix read_matrix_file(const std::string& path);

// SetPartition JSON: {"n": 4, "blocks": [[0,1],[2,3]]}, canonical order.
Json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const Json& j);

// IntShape JSON: {"n": 4, "parts": [2,2]}, parts descending.
Json shape_to_json(const IntShape& s);
IntShape shape_from_json(const Json& j);

// IdealHandle JSON: {"n": 4, "generator": {"blocks": [[0,1],[2,3]]}}.
Json ideal_to_json(const IdealHandle& ideal);
IdealHandle ideal_from_json(const Json& j);

Json family_to_json(const FamilyDescription& family);

// Witness JSON: {"x": <matrix>, "y": <matrix>}.
Json witness_to_json(const DWitness& w);
DWitness witness_from_json(const Json& j);

// Lattice JSON: {"n":4, "nodes":[{"blocks":...},...], "covers":[[i,j],...],
// "levels":{"1":1,"2":7,...}}.
Json lattice_to_json(const IdealLattice& lattice);

// Partition spec syntax used on the command line: 1-based groups like
// "(1,2)(3,4)" or "(1,2),(3,4)"; indices not listed become singletons. The
// empty spec means all singletons.
SetPartition parse_partition_spec(std::string_view spec, int n);
std::string partition_spec(const SetPartition& p);

// Aligned p/q grid, one row per line.
std::string matrix_pretty(const Matrix& m);

}  // namespace dstoch
