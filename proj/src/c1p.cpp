#include "twocross/c1p.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace twocross {

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<uint8_t>>& rows) {
    if (rows.empty() || rows[0].empty()) {
        throw std::invalid_argument("binary matrix must have at least one row and column");
    }
    BinaryMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(rows[0].size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.cols) {
            throw std::invalid_argument("binary matrix rows have unequal length");
        }
        for (uint8_t b : row) {
            if (b > 1) throw std::invalid_argument("binary matrix entries must be 0 or 1");
        }
    }
    m.bits = rows;
    return m;
}

RowPermutation RowPermutation::identity(int r) {
    RowPermutation p;
    p.perm.resize(r);
    std::iota(p.perm.begin(), p.perm.end(), 1);
    return p;
}

bool RowPermutation::is_permutation_of(int r) const {
    if (static_cast<int>(perm.size()) != r) return false;
    std::vector<char> seen(r + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > r || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

namespace {

using Bitset = std::vector<uint64_t>;

Bitset make_bitset(int n) { return Bitset((n + 63) / 64, 0); }

void bitset_set(Bitset& b, int i) { b[i / 64] |= uint64_t{1} << (i % 64); }

int intersection_size(const Bitset& a, const Bitset& b) {
    int total = 0;
    for (size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

// Ordered partition of a component's union into blocks; any valid row order
// places the blocks in sequence (or reversed) with rows free within a block.
struct ComponentState {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // -1 for rows outside the union

    explicit ComponentState(int num_rows) : block_of(num_rows, -1) {}

    void rebuild_index() {
        std::fill(block_of.begin(), block_of.end(), -1);
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
            for (int r : blocks[b]) block_of[r] = b;
        }
    }

    // Refines the block structure so that srows can be made contiguous.
    // Returns false when no row order can satisfy all placed columns.
    bool insert(const std::vector<int>& srows, std::vector<char>& in_s) {
        const int t = static_cast<int>(blocks.size());
        if (t == 0) {
            blocks.push_back(srows);
            rebuild_index();
            return true;
        }
        for (int r : srows) in_s[r] = 1;
        std::vector<int> cnt(t, 0);
        std::vector<int> outside;
        int lo = t, hi = -1;
        for (int r : srows) {
            const int b = block_of[r];
            if (b >= 0) {
                ++cnt[b];
                lo = std::min(lo, b);
                hi = std::max(hi, b);
            } else {
                outside.push_back(r);
            }
        }
        if (hi < 0) throw std::logic_error("column inserted without overlap into component");

        auto split_block = [&](int b, std::vector<int>& in_part, std::vector<int>& out_part) {
            in_part.clear();
            out_part.clear();
            for (int r : blocks[b]) {
                (in_s[r] ? in_part : out_part).push_back(r);
            }
        };

        auto full = [&](int b) { return cnt[b] == static_cast<int>(blocks[b].size()); };

        bool ok = true;
        std::vector<std::vector<int>> next;
        auto push = [&next](std::vector<int>&& blk) {
            if (!blk.empty()) next.push_back(std::move(blk));
        };

        if (outside.empty()) {
            if (lo == hi) {
                if (!full(lo)) {
                    // would require an unforced split; cannot arise when the
                    // column overlaps a placed column of this component
                    throw std::logic_error("contained column reached component refinement");
                }
                // column equals a block; nothing to refine
            } else {
                for (int b = lo + 1; b < hi && ok; ++b) ok = full(b);
                if (ok) {
                    for (int b = 0; b < lo; ++b) push(std::move(blocks[b]));
                    std::vector<int> in_part, out_part;
                    split_block(lo, in_part, out_part);
                    push(std::move(out_part));
                    push(std::move(in_part));
                    for (int b = lo + 1; b < hi; ++b) push(std::move(blocks[b]));
                    split_block(hi, in_part, out_part);
                    push(std::move(in_part));
                    push(std::move(out_part));
                    for (int b = hi + 1; b < t; ++b) push(std::move(blocks[b]));
                    blocks = std::move(next);
                    rebuild_index();
                }
            }
        } else if (t == 1) {
            std::vector<int> in_part, out_part;
            split_block(0, in_part, out_part);
            push(std::move(outside));
            push(std::move(in_part));
            push(std::move(out_part));
            blocks = std::move(next);
            rebuild_index();
        } else {
            bool prefix_ok = lo == 0;
            for (int b = 0; b < hi && prefix_ok; ++b) prefix_ok = full(b);
            bool suffix_ok = hi == t - 1;
            for (int b = lo + 1; b < t && suffix_ok; ++b) suffix_ok = full(b);
            if (prefix_ok && suffix_ok) {
                throw std::logic_error("column covering whole union reached refinement");
            }
            if (prefix_ok) {
                std::vector<int> in_part, out_part;
                push(std::move(outside));
                for (int b = 0; b < hi; ++b) push(std::move(blocks[b]));
                split_block(hi, in_part, out_part);
                push(std::move(in_part));
                push(std::move(out_part));
                for (int b = hi + 1; b < t; ++b) push(std::move(blocks[b]));
                blocks = std::move(next);
                rebuild_index();
            } else if (suffix_ok) {
                std::vector<int> in_part, out_part;
                for (int b = 0; b < lo; ++b) push(std::move(blocks[b]));
                split_block(lo, in_part, out_part);
                push(std::move(out_part));
                push(std::move(in_part));
                for (int b = lo + 1; b < t; ++b) push(std::move(blocks[b]));
                push(std::move(outside));
                blocks = std::move(next);
                rebuild_index();
            } else {
                ok = false;
            }
        }
        for (int r : srows) in_s[r] = 0;
        return ok;
    }
};

}  // namespace

std::optional<RowPermutation> c1p_witness(const BinaryMatrix& m) {
    const int r = m.rows;

    // preprocessing: keep columns as row sets, dropping all-zero, all-one
    // and duplicate columns (they impose no extra constraint)
    std::vector<std::vector<int>> cols;
    std::vector<Bitset> colbits;
    {
        std::vector<std::vector<int>> raw;
        for (int c = 0; c < m.cols; ++c) {
            std::vector<int> s;
            for (int row = 0; row < r; ++row) {
                if (m.bits[row][c]) s.push_back(row);
            }
            if (s.empty() || static_cast<int>(s.size()) == r) continue;
            raw.push_back(std::move(s));
        }
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        for (auto& s : raw) {
            Bitset b = make_bitset(r);
            for (int row : s) bitset_set(b, row);
            cols.push_back(std::move(s));
            colbits.push_back(std::move(b));
        }
    }
    const int c = static_cast<int>(cols.size());
    if (c == 0) return RowPermutation::identity(r);

    // overlap graph: columns that intersect without containment
    std::vector<std::vector<int>> overlap(c);
    for (int a = 0; a < c; ++a) {
        for (int b = a + 1; b < c; ++b) {
            const int inter = intersection_size(colbits[a], colbits[b]);
            if (inter > 0 && inter < static_cast<int>(cols[a].size()) &&
                inter < static_cast<int>(cols[b].size())) {
                overlap[a].push_back(b);
                overlap[b].push_back(a);
            }
        }
    }

    // refine each overlap component via BFS; the block order of a component
    // is rigid up to reversal
    std::vector<char> in_s(r, 0);
    std::vector<int> comp_of(c, -1);
    std::vector<ComponentState> comps;
    for (int start = 0; start < c; ++start) {
        if (comp_of[start] >= 0) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back(r);
        std::vector<int> queue = {start};
        comp_of[start] = id;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int col = queue[qi];
            if (!comps[id].insert(cols[col], in_s)) return std::nullopt;
            for (int nb : overlap[col]) {
                if (comp_of[nb] < 0) {
                    comp_of[nb] = id;
                    queue.push_back(nb);
                }
            }
        }
    }

    // assemble: component unions form a laminar family; each inner component
    // sits inside a single block of its parent
    const int nc = static_cast<int>(comps.size());
    std::vector<std::vector<int>> unions(nc);
    std::vector<Bitset> union_bits(nc, make_bitset(r));
    for (int x = 0; x < nc; ++x) {
        for (const auto& blk : comps[x].blocks) {
            for (int row : blk) {
                unions[x].push_back(row);
                bitset_set(union_bits[x], row);
            }
        }
    }
    std::vector<int> order_idx(nc);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        if (unions[a].size() != unions[b].size()) return unions[a].size() > unions[b].size();
        return comps[a].blocks.size() < comps[b].blocks.size();
    });

    std::vector<int> parent(nc, -1);
    std::vector<int> parent_block(nc, -1);
    for (int pi = 0; pi < nc; ++pi) {
        const int x = order_idx[pi];
        for (int pj = pi - 1; pj >= 0; --pj) {
            const int y = order_idx[pj];
            const int probe = unions[x][0];
            if (comps[y].block_of[probe] < 0) continue;
            const int blk = comps[y].block_of[probe];
            for (int row : unions[x]) {
                if (comps[y].block_of[row] != blk) {
                    throw std::logic_error("component union straddles parent blocks");
                }
            }
            parent[x] = y;
            parent_block[x] = blk;
            break;
        }
    }

    std::vector<std::vector<std::vector<int>>> children(nc);
    for (int x = 0; x < nc; ++x) {
        children[x].resize(comps[x].blocks.size());
    }
    std::vector<int> top_level;
    for (int pi = 0; pi < nc; ++pi) {
        const int x = order_idx[pi];
        if (parent[x] < 0) {
            top_level.push_back(x);
        } else {
            children[parent[x]][parent_block[x]].push_back(x);
        }
    }

    // each row is emitted by the deepest component containing it; walking
    // order_idx from largest union to smallest leaves that component behind
    std::vector<int> owner(r, -1);
    for (int x : order_idx) {
        for (int row : unions[x]) owner[row] = x;
    }

    std::vector<int> out;
    out.reserve(r);
    auto emit = [&](auto&& self, int x) -> void {
        for (size_t b = 0; b < comps[x].blocks.size(); ++b) {
            for (int row : comps[x].blocks[b]) {
                if (owner[row] == x) out.push_back(row);
            }
            for (int child : children[x][b]) self(self, child);
        }
    };
    for (int x : top_level) emit(emit, x);
    {
        // rows in no column are unconstrained; append them
        std::vector<char> placed(r, 0);
        for (int row : out) placed[row] = 1;
        for (int row = 0; row < r; ++row) {
            if (!placed[row]) out.push_back(row);
        }
    }

    RowPermutation witness;
    witness.perm.reserve(r);
    for (int row : out) witness.perm.push_back(row + 1);
    if (!witness.is_permutation_of(r) || !check_linear_runs(m, witness)) {
        throw std::logic_error("c1p refinement produced an invalid witness");
    }
    return witness;
}

BinaryMatrix complement_transform(const BinaryMatrix& m) {
    BinaryMatrix out = m;
    for (int c = 0; c < m.cols; ++c) {
        if (m.bits[0][c] == 1) {
            for (int row = 0; row < m.rows; ++row) out.bits[row][c] ^= 1;
        }
    }
    return out;
}

std::optional<RowPermutation> circ_c1p_witness(const BinaryMatrix& m) {
    // a linear run of the complemented matrix is a circular run of the
    // original; completeness follows from rotating any circular witness so
    // that row 1 comes first
    return c1p_witness(complement_transform(m));
}

SwitchReport switch_counts(const BinaryMatrix& m, const RowPermutation& order) {
    if (!order.is_permutation_of(m.rows)) {
        throw std::invalid_argument("row order is not a permutation of [1..r]");
    }
    SwitchReport report;
    report.per_column.assign(m.cols, 0);
    for (int c = 0; c < m.cols; ++c) {
        int switches = 0;
        for (int i = 0; i + 1 < m.rows; ++i) {
            if (m.bits[order.perm[i] - 1][c] != m.bits[order.perm[i + 1] - 1][c]) ++switches;
        }
        report.per_column[c] = switches;
        report.maximum = std::max(report.maximum, switches);
    }
    return report;
}

bool check_linear_runs(const BinaryMatrix& m, const RowPermutation& order) {
    for (int c = 0; c < m.cols; ++c) {
        int transitions = 0;
        uint8_t prev = 0;
        for (int i = 0; i < m.rows; ++i) {
            const uint8_t cur = m.bits[order.perm[i] - 1][c];
            if (i > 0 && cur != prev) ++transitions;
            prev = cur;
        }
        // ones consecutive iff the 0/1 pattern changes at most twice and,
        // with two changes, starts (hence ends) at 0
        const uint8_t first = m.bits[order.perm[0] - 1][c];
        if (transitions > 2) return false;
        if (transitions == 2 && first == 1) return false;
    }
    return true;
}

bool check_circular_runs(const BinaryMatrix& m, const RowPermutation& order) {
    for (int c = 0; c < m.cols; ++c) {
        int switches = 0;
        for (int i = 0; i < m.rows; ++i) {
            const uint8_t cur = m.bits[order.perm[i] - 1][c];
            const uint8_t next = m.bits[order.perm[(i + 1) % m.rows] - 1][c];
            if (cur != next) ++switches;
        }
        if (switches > 2) return false;
    }
    return true;
}

}  // namespace twocross
