#include "dstoch/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace dstoch {

IntShape::IntShape(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    if (n_ < 1) throw DimensionError("shape: n must be positive");
    int sum = 0;
    for (int part : parts_) {
        if (part < 1) throw DimensionError("shape: parts must be positive");
        sum += part;
    }
    if (sum != n_) throw DimensionError("shape: parts must sum to n");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int IntShape::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> IntShape::multiplicities() const {
    std::map<int, int> out;
    for (int part : parts_) ++out[part];
    return out;
}

std::string IntShape::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw DimensionError("partition: n must be positive");
    block_index_.assign(static_cast<std::size_t>(n_), -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw DimensionError("partition: empty block");
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v < 0 || v >= n_) throw DimensionError("partition: element out of range");
            if (block_index_[static_cast<std::size_t>(v)] != -1) {
                throw DimensionError("partition: element repeated");
            }
            block_index_[static_cast<std::size_t>(v)] = 0;  // mark; renumbered below
        }
    }
    for (int v : block_index_) {
        if (v == -1) throw DimensionError("partition: elements do not cover 0..n-1");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int v : blocks_[b]) block_index_[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
}

SetPartition::SetPartition(Trusted, int n, std::vector<std::vector<int>> blocks,
                           std::vector<int> index)
    : n_(n), blocks_(std::move(blocks)), block_index_(std::move(index)) {}

SetPartition SetPartition::singletons(int n) {
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return from_rgs(rgs);
}

SetPartition SetPartition::one_block(int n) {
    if (n < 1) throw DimensionError("partition: n must be positive");
    return from_rgs(std::vector<int>(static_cast<std::size_t>(n), 0));
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    if (n < 1) throw DimensionError("partition: n must be positive");
    int max_seen = -1;
    for (int v : rgs) {
        if (v < 0 || v > max_seen + 1) throw DimensionError("partition: not a restricted growth string");
        max_seen = std::max(max_seen, v);
    }
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_seen + 1));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
    return SetPartition(Trusted{}, n, std::move(blocks), rgs);
}

SetPartition SetPartition::relabeled(const Permutation& p) const {
    if (p.size() != n_) throw DimensionError("relabeled: permutation size mismatch");
    std::vector<std::vector<int>> mapped;
    mapped.reserve(blocks_.size());
    for (const auto& block : blocks_) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block) image.push_back(p(v));
        mapped.push_back(std::move(image));
    }
    return SetPartition(n_, std::move(mapped));
}

SetPartitionStream::SetPartitionStream(int n) : n_(n) {
    if (n < 1) throw DimensionError("partition stream: n must be positive");
    rgs_.assign(static_cast<std::size_t>(n), 0);
    prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<SetPartition> SetPartitionStream::next() {
    if (exhausted_) return std::nullopt;
    if (first_) {
        first_ = false;
        return SetPartition::from_rgs(rgs_);
    }
    // Lexicographic successor: bump the rightmost digit that may grow
    // (rgs[i] <= max of the prefix), zero everything after it.
    for (int i = n_ - 1; i >= 1; --i) {
        if (rgs_[static_cast<std::size_t>(i)] <= prefix_max_[static_cast<std::size_t>(i - 1)]) {
            ++rgs_[static_cast<std::size_t>(i)];
            prefix_max_[static_cast<std::size_t>(i)] =
                std::max(prefix_max_[static_cast<std::size_t>(i - 1)], rgs_[static_cast<std::size_t>(i)]);
            for (int j = i + 1; j < n_; ++j) {
                rgs_[static_cast<std::size_t>(j)] = 0;
                prefix_max_[static_cast<std::size_t>(j)] = prefix_max_[static_cast<std::size_t>(j - 1)];
            }
            return SetPartition::from_rgs(rgs_);
        }
    }
    exhausted_ = true;
    return std::nullopt;
}

std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    SetPartitionStream stream(n);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

void int_shapes_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<IntShape>& out, int n) {
    if (remaining == 0) {
        out.emplace_back(n, acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        int_shapes_rec(remaining - part, part, acc, out, n);
        acc.pop_back();
    }
}

}  // namespace

std::vector<IntShape> enumerate_int_shapes(int n) {
    if (n < 1) throw DimensionError("int shapes: n must be positive");
    std::vector<IntShape> out;
    std::vector<int> acc;
    int_shapes_rec(n, n, acc, out, n);
    return out;
}

IntShape shape_of(const SetPartition& p) {
    std::vector<int> parts;
    parts.reserve(p.blocks().size());
    for (const auto& block : p.blocks()) parts.push_back(static_cast<int>(block.size()));
    return IntShape(p.n(), std::move(parts));
}

BigInt bell_number(int n) {
    if (n < 0) throw DimensionError("bell_number: n must be nonnegative");
    if (n == 0) return 1;
    std::vector<BigInt> row{1};
    for (int k = 2; k <= n; ++k) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

BigInt stirling_second(int n, int k) {
    if (n < 0 || k < 0) throw DimensionError("stirling_second: arguments must be nonnegative");
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    if (k == 0) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, BigInt(0));
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

namespace {

BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace

BigInt count_idempotents_of_shape(const IntShape& shape) {
    BigInt denom = 1;
    for (const auto& [part, multiplicity] : shape.multiplicities()) {
        BigInt part_factorial = factorial(part);
        for (int i = 0; i < multiplicity; ++i) denom *= part_factorial;
        denom *= factorial(multiplicity);
    }
    return factorial(shape.n()) / denom;
}

BigInt count_idempotents(int n) {
    BigInt total = 0;
    for (const IntShape& shape : enumerate_int_shapes(n)) {
        total += count_idempotents_of_shape(shape);
    }
    return total;
}

bool refines(const SetPartition& p, const SetPartition& q) {
    if (p.n() != q.n()) throw DimensionError("refines: partitions of different sets");
    for (const auto& block : p.blocks()) {
        const int home = q.block_of(block.front());
        for (int v : block) {
            if (q.block_of(v) != home) return false;
        }
    }
    return true;
}

SetPartition partition_meet(const SetPartition& p, const SetPartition& q) {
    if (p.n() != q.n()) throw DimensionError("partition_meet: partitions of different sets");
    // Group elements by the pair (p-block, q-block).
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int v = 0; v < p.n(); ++v) {
        cells[{p.block_of(v), q.block_of(v)}].push_back(v);
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(cells.size());
    for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
    return SetPartition(p.n(), std::move(blocks));
}

namespace {

int uf_find(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    parent[static_cast<std::size_t>(uf_find(parent, a))] = uf_find(parent, b);
}

}  // namespace

SetPartition partition_join(const SetPartition& p, const SetPartition& q) {
    if (p.n() != q.n()) throw DimensionError("partition_join: partitions of different sets");
    std::vector<int> parent(static_cast<std::size_t>(p.n()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto* part : {&p, &q}) {
        for (const auto& block : part->blocks()) {
            for (std::size_t i = 1; i < block.size(); ++i) uf_union(parent, block[0], block[i]);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < p.n(); ++v) groups[uf_find(parent, v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(groups.size());
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return SetPartition(p.n(), std::move(blocks));
}

}  // namespace dstoch
