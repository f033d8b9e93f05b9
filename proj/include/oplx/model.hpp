#ifndef OPLX_MODEL_HPP
#define OPLX_MODEL_HPP

#include "oplx/hgp.hpp"
#include "oplx/lattice.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace oplx {

// CSS code built from hypercubic-lattice cell rules: qubits on all
// odd-dimensional cells, X-stabilizers on even cells extending along the
// last axis, Z-stabilizers on the remaining even cells, every stabilizer
// acting on its full nearest-neighbor set.
struct OrthoplexModel {
    LatticeShape shape;
    CssCode code;
    std::vector<Cell> qubit_cells, x_cells, z_cells;
    std::unordered_map<Cell, std::size_t, CellHash> qubit_index, x_index, z_index;

    std::size_t n() const { return code.n; }
};

OrthoplexModel build_model(const LatticeShape& shape);

struct MatrixCompareReport {
    bool pass = true;
    std::vector<std::string> mismatches;   // one line per mismatching row/label
};

// Compare two CSS codes entry-wise under the label bijection between
// their bases; order-independent, reports any row that disagrees.
MatrixCompareReport compare_codes(const CssCode& a, const CssCode& b);

// Rebuild the model through repetition complexes and the orthoplex
// partition, then require bitwise agreement under the cell/label map.
MatrixCompareReport cross_validate(const OrthoplexModel& model);

struct SelfDualityReport {
    bool applicable = false;       // fully periodic and a valid shift exists
    Cell shift;                    // doubled translation vector used
    bool stabilizer_sets_match = false;
    bool supports_match = false;
    bool pass = false;
};

// Candidate duality: translate by half a unit along the last two axes and
// swap the X and Z stabilizer families. Checked, not assumed.
SelfDualityReport self_duality_check(const OrthoplexModel& model);

} // namespace oplx

#endif
