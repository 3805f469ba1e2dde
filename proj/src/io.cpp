#include "dstoch/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace dstoch {

namespace {

Rational cell_from_json(const Json& cell) {
    if (cell.is_string()) return parse_rational(cell.get<std::string>());
    if (cell.is_number_integer()) return Rational(cell.get<long long>());
    throw ParseError("matrix cell must be a \"p/q\" string or an integer");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = m.rows();
    out["rows"] = std::move(rows);
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty()) {
        throw ParseError("matrix JSON needs a non-empty \"rows\" array");
    }
    const Json& rows = j["rows"];
    const int n_rows = static_cast<int>(rows.size());
    if (!rows[0].is_array() || rows[0].empty()) {
        throw ParseError("matrix JSON rows must be non-empty arrays");
    }
    const int n_cols = static_cast<int>(rows[0].size());
    Matrix m(n_rows, n_cols);
    for (int i = 0; i < n_rows; ++i) {
        if (!rows[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n_cols) {
            throw ParseError("matrix JSON rows have inconsistent lengths", i + 1);
        }
        for (int col = 0; col < n_cols; ++col) {
            try {
                m(i, col) = cell_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]);
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), i + 1, col + 1);
            }
        }
    }
    if (j.contains("n") && j["n"].get<int>() != n_rows) {
        throw ParseError("matrix JSON \"n\" does not match the row count");
    }
    return m;
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix matrix_from_csv(std::string_view text) {
    std::vector<std::vector<Rational>> grid;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            if (end == text.size()) break;
            continue;
        }
        std::vector<Rational> row;
        std::size_t cell_start = 0;
        while (true) {
            const std::size_t comma = line.find(',', cell_start);
            std::string_view cell = line.substr(
                cell_start, comma == std::string_view::npos ? line.size() - cell_start
                                                            : comma - cell_start);
            try {
                row.push_back(parse_rational(cell));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), line_no,
                                 static_cast<int>(cell_start) + 1);
            }
            if (comma == std::string_view::npos) break;
            cell_start = comma + 1;
        }
        grid.push_back(std::move(row));
        if (end == text.size()) break;
    }
    if (grid.empty()) throw ParseError("CSV matrix is empty");
    const std::size_t n_cols = grid[0].size();
    Matrix m(static_cast<int>(grid.size()), static_cast<int>(n_cols));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != n_cols) {
            throw ParseError("CSV rows have inconsistent lengths", static_cast<int>(i) + 1);
        }
        for (std::size_t j = 0; j < n_cols; ++j) m(static_cast<int>(i), static_cast<int>(j)) = grid[i][j];
    }
    return m;
}

Matrix parse_matrix_text(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty matrix input");
    if (text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON");
        return matrix_from_json(j);
    }
    return matrix_from_csv(text);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str());
}

Json partition_to_json(const SetPartition& p) {
    Json blocks = Json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    Json out;
    out["n"] = p.n();
    out["blocks"] = std::move(blocks);
    return out;
}

SetPartition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
        throw ParseError("partition JSON needs a \"blocks\" array");
    }
    std::vector<std::vector<int>> blocks;
    int max_element = -1;
    for (const Json& block : j["blocks"]) {
        if (!block.is_array()) throw ParseError("partition blocks must be arrays");
        std::vector<int> members;
        for (const Json& v : block) {
            if (!v.is_number_integer()) throw ParseError("partition elements must be integers");
            members.push_back(v.get<int>());
            max_element = std::max(max_element, members.back());
        }
        blocks.push_back(std::move(members));
    }
    const int n = j.contains("n") ? j["n"].get<int>() : max_element + 1;
    try {
        return SetPartition(n, std::move(blocks));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

Json shape_to_json(const IntShape& s) {
    Json out;
    out["n"] = s.n();
    out["parts"] = s.parts();
    return out;
}

IntShape shape_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("parts") || !j["parts"].is_array()) {
        throw ParseError("shape JSON needs \"n\" and a \"parts\" array");
    }
    try {
        return IntShape(j["n"].get<int>(), j["parts"].get<std::vector<int>>());
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

Json ideal_to_json(const IdealHandle& ideal) {
    Json generator;
    Json blocks = Json::array();
    for (const auto& block : ideal.generator().blocks()) blocks.push_back(block);
    generator["blocks"] = std::move(blocks);
    Json out;
    out["n"] = ideal.n();
    out["generator"] = std::move(generator);
    return out;
}

IdealHandle ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generator")) {
        throw ParseError("ideal JSON needs \"n\" and \"generator\"");
    }
    Json generator = j["generator"];
    generator["n"] = j["n"];
    return IdealHandle(partition_from_json(generator));
}

Json family_to_json(const FamilyDescription& family) {
    Json out;
    out["n"] = family.generator.n();
    out["generator"] = partition_to_json(family.generator);
    out["free_rows"] = family.free_rows;
    out["free_parameters"] = family.free_parameters;
    out["single_member"] = family.single_member;
    out["full_semigroup"] = family.full_semigroup;
    out["description"] = family.text;
    return out;
}

Json witness_to_json(const DWitness& w) {
    Json out;
    out["x"] = matrix_to_json(w.x);
    out["y"] = matrix_to_json(w.y);
    return out;
}

DWitness witness_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw ParseError("witness JSON needs \"x\" and \"y\" matrices");
    }
    return DWitness{matrix_from_json(j["x"]), matrix_from_json(j["y"])};
}

Json lattice_to_json(const IdealLattice& lattice) {
    Json nodes = Json::array();
    for (const IdealHandle& node : lattice.nodes) {
        Json blocks = Json::array();
        for (const auto& block : node.generator().blocks()) blocks.push_back(block);
        Json entry;
        entry["blocks"] = std::move(blocks);
        nodes.push_back(std::move(entry));
    }
    Json covers = Json::array();
    for (const auto& [lower, upper] : lattice.cover_edges) {
        covers.push_back(Json::array({lower, upper}));
    }
    Json levels;
    for (const auto& [rank, count] : lattice.level_sizes) {
        levels[std::to_string(rank)] = count;
    }
    Json out;
    out["n"] = lattice.n;
    out["nodes"] = std::move(nodes);
    out["covers"] = std::move(covers);
    out["levels"] = std::move(levels);
    return out;
}

SetPartition parse_partition_spec(std::string_view spec, int n) {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t pos = 0;
    const auto skip_separators = [&] {
        while (pos < spec.size() &&
               (spec[pos] == ' ' || spec[pos] == '\t' || spec[pos] == ',')) {
            ++pos;
        }
    };
    skip_separators();
    while (pos < spec.size()) {
        if (spec[pos] != '(') {
            throw ParseError("expected '(' in partition spec", 1, static_cast<int>(pos) + 1);
        }
        ++pos;
        std::vector<int> block;
        while (true) {
            skip_separators();
            if (pos < spec.size() && spec[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
            if (start == pos) {
                throw ParseError("expected index in partition spec", 1, static_cast<int>(pos) + 1);
            }
            const int value = std::stoi(std::string(spec.substr(start, pos - start)));
            if (value < 1 || value > n) {
                throw ParseError("index " + std::to_string(value) + " out of range 1.." +
                                 std::to_string(n));
            }
            if (used[static_cast<std::size_t>(value - 1)]) {
                throw ParseError("index " + std::to_string(value) + " repeated in partition spec");
            }
            used[static_cast<std::size_t>(value - 1)] = true;
            block.push_back(value - 1);
        }
        if (block.empty()) throw ParseError("empty group in partition spec");
        blocks.push_back(std::move(block));
        skip_separators();
    }
    for (int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) blocks.push_back({v});
    }
    return SetPartition(n, std::move(blocks));
}

std::string partition_spec(const SetPartition& p) {
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

std::string matrix_pretty(const Matrix& m) {
    std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 0);
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::string cell = to_string(m(i, j));
            widths[static_cast<std::size_t>(j)] =
                std::max(widths[static_cast<std::size_t>(j)], cell.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(cell));
        }
    }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        out += "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& cell = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out.append(widths[static_cast<std::size_t>(j)] - cell.size(), ' ');
            out += cell;
            out += j + 1 < m.cols() ? "  " : " ";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace dstoch
