#ifndef OPLX_LATTICE_HPP
#define OPLX_LATTICE_HPP

#include "oplx/chain.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace oplx {

// Doubled-integer coordinates: even entry = vertex-like (integer)
// coordinate, odd entry = half-integer coordinate along that axis.
// A q-cell has exactly q odd entries.
using Cell = std::vector<int>;
using CellHash = IntVecHash;

struct LatticeShape {
    std::vector<int> sizes;      // extent per axis, in unit cells
    std::vector<bool> periodic;  // per-axis boundary flag

    int p() const { return static_cast<int>(sizes.size()); }

    static LatticeShape cubic(std::vector<int> sizes, bool periodic_all = true);
    static LatticeShape mixed(std::vector<int> sizes, std::vector<bool> periodic);
};

int cell_dimension(const Cell& c);

// Wrap periodic coordinates into [0, 2L); open axes are left untouched.
Cell canonicalize(Cell c, const LatticeShape& shape);

// Doubled coordinate range check: [0, 2L) periodic, [0, 2L-2] open.
bool cell_in_shape(const Cell& c, const LatticeShape& shape);

// The 2p cells at distance one half-step, canonicalized; out-of-range
// cells are dropped under open boundaries.
std::vector<Cell> neighbors(const Cell& cell, const LatticeShape& shape);

// All cells of the given dimension whose set of odd axes satisfies the
// filter, ordered by (axis-set signature, coordinates) ascending —
// the same canonical order the tensor-product bases use.
std::vector<Cell> enumerate_cells(const LatticeShape& shape, int dim,
                                  const std::function<bool(const std::vector<int>&)>& axis_filter = {});

// Tensor-product labels of repetition complexes are exactly doubled cell
// coordinates, so the bijection is a validated identity.
Cell cell_of_label(const Label& label, const LatticeShape& shape);
Label label_of_cell(const Cell& cell, const LatticeShape& shape);

} // namespace oplx

#endif
