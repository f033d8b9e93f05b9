#ifndef OPLX_DEFECT_HPP
#define OPLX_DEFECT_HPP

#include "oplx/dynamics.hpp"
#include "oplx/model.hpp"

#include <set>
#include <string>
#include <vector>

namespace oplx {

enum class GeneratorKind { PureA, PureB, Mixed };

struct DefectGenerator {
    GeneratorKind kind;
    BitVector x_part;           // X support over the base model's qubits
    BitVector z_part;
    std::vector<Cell> cells;    // stabilizer cells fused into this generator
};

// Dislocation in an open-boundary 3d model: all qubits on the half-plane
// x + y - z = plane_sum/2, z <= line_z/2 are removed and the truncated
// stabilizers around each removed qubit are fused pairwise into mixed
// generators. The half-plane ends on the dislocation line z = line_z/2.
struct DefectModel {
    OrthoplexModel base;
    int plane_sum = 0;               // doubled x + y - z on the half-plane
    int line_z = 0;                  // doubled z of the dislocation line
    std::set<Cell> removed_cells;
    std::vector<std::size_t> removed_qubits;    // indices into base qubits
    std::vector<DefectGenerator> generators;

    std::size_t remaining_qubits() const { return base.n() - removed_qubits.size(); }
    bool on_half_plane(const Cell& c) const {
        return c[0] + c[1] - c[2] == plane_sum && c[2] <= line_z;
    }
};

// Fixed layout: the dislocation line crosses the middle of the box.
DefectModel build_dislocation(const LatticeShape& shape);

struct CommutationReport {
    bool pass = true;
    std::size_t checked_pairs = 0;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

CommutationReport check_commutation(const DefectModel& dm);

struct ZeroModeReport {
    std::size_t removed_qubits = 0;
    std::size_t truncated_stabilizers = 0;   // distinct stabilizer cells losing support
    std::size_t generator_count = 0;
    std::size_t independent_generators = 0;
    std::size_t k_defect = 0;                // remaining qubits minus independent generators
    std::size_t k_base = 0;                  // same box without the dislocation
    std::size_t zero_modes = 0;              // k_defect - k_base
};

ZeroModeReport zero_mode_count(const DefectModel& dm);

// Violations of the defect generators by a Pauli operator on the base
// model's qubits (the operator must avoid removed qubits).
std::vector<std::size_t> defect_syndrome(const DefectModel& dm, const PauliOp& op);

struct BraidPathSpec {
    int sheet_x_minus_y = 0;    // doubled x - y of the transport sheet
    int u_min = 0, u_max = 0;   // doubled x + y corners of the rectangle
    int z_min = 0, z_max = 0;   // doubled z corners
    int winding = 1;            // full circuits around the rectangle
};

struct BraidVerdict {
    int cut_crossings = 0;
    bool pure_x_leaves_residual = false;
    bool mixed_transport_clean = false;
    std::string start_type;     // "e" or "m"
    std::string end_type;
    bool types_swapped = false;
    bool types_restored = false;
};

// Transport a diagonal dipole planon around the rectangle. Where the path
// crosses the removed half-plane the string continues as the dual type;
// the verdict reports the residual of a pure-X attempt, the cleanness of
// the type-switching transport, and the excitation type after closure.
BraidVerdict braid_planon(const DefectModel& dm, const BraidPathSpec& path);

} // namespace oplx

#endif
