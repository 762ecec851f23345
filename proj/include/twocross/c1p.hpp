#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Consecutive-ones machinery. Convention throughout: recognition permutes
// ROWS so that each COLUMN's ones become consecutive.

namespace twocross {

struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<uint8_t>> bits;  // bits[r][c] in {0,1}

    static BinaryMatrix from_rows(const std::vector<std::vector<uint8_t>>& rows);
    uint8_t at(int row, int col) const { return bits[row][col]; }
};

// A permutation of row indices [1..r]; perm[i] is the original row placed
// at position i+1.
struct RowPermutation {
    std::vector<int> perm;

    static RowPermutation identity(int r);
    bool is_permutation_of(int r) const;
};

// Returns a row permutation making every column's ones one contiguous run,
// or nullopt if none exists. Column-driven partition refinement over overlap
// components; O(r*c^2) overall.
std::optional<RowPermutation> c1p_witness(const BinaryMatrix& m);

// Complements every column whose first-row entry is 1.
BinaryMatrix complement_transform(const BinaryMatrix& m);

// Circular variant: ones of each column must form one run with wrap-around
// allowed. Implemented as c1p_witness(complement_transform(m)).
std::optional<RowPermutation> circ_c1p_witness(const BinaryMatrix& m);

struct SwitchReport {
    std::vector<int> per_column;
    int maximum = 0;
};

// Number of adjacent disagreements per column under a row order.
SwitchReport switch_counts(const BinaryMatrix& m, const RowPermutation& order);

// Direct checkers, independent of the recognition path.
bool check_linear_runs(const BinaryMatrix& m, const RowPermutation& order);
bool check_circular_runs(const BinaryMatrix& m, const RowPermutation& order);

}  // namespace twocross
