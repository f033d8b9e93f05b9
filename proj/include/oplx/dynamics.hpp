#ifndef OPLX_DYNAMICS_HPP
#define OPLX_DYNAMICS_HPP

#include "oplx/model.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace oplx {

struct PauliOp {
    BitVector x_support;
    BitVector z_support;

    explicit PauliOp(std::size_t n = 0) : x_support(n), z_support(n) {}
    void xor_assign(const PauliOp& other) {
        x_support.xor_assign(other.x_support);
        z_support.xor_assign(other.z_support);
    }
};

PauliOp pauli_x(const OrthoplexModel& model, const Cell& qubit);
PauliOp pauli_z(const OrthoplexModel& model, const Cell& qubit);

struct Syndrome {
    std::vector<std::size_t> violated_x;   // row indices into hx (A terms)
    std::vector<std::size_t> violated_z;   // row indices into hz (B terms)
    std::vector<Cell> x_cells, z_cells;

    std::size_t size() const { return violated_x.size() + violated_z.size(); }
};

Syndrome syndrome(const OrthoplexModel& model, const PauliOp& op);

// Membranes live in one fixed-w hyperplane of a 4d model, inside a plane
// spanned by a two-axis diagonal and the remaining spatial axis.
//
// The staircase through the anchor vertex has diag_steps full diagonal
// units (alternating links of the two plane axes, 2*diag_steps+1 links);
// rectangle membranes repeat it at perp offsets 0..perp_extent. Triangle
// membranes shrink the staircase by one full step per perp layer, which
// exposes a space-diagonal boundary segment.
enum class DiagPlane { XplusY, XminusY, XplusZ, XminusZ, YplusZ, YminusZ };

struct MembraneSpec {
    DiagPlane plane = DiagPlane::XplusY;
    Cell anchor;          // vertex, doubled coordinates, length 4
    int diag_steps = 0;
    int perp_extent = 0;
    bool triangle = false;
};

// first axis, second axis, perpendicular axis, staircase sign of the
// first-axis coordinate per step (+1 for difference planes, -1 for sums)
struct PlaneFrame {
    int alpha, beta, perp, sign;
};
PlaneFrame plane_frame(DiagPlane plane);

std::vector<Cell> membrane_qubits(const OrthoplexModel& model, const MembraneSpec& spec);
PauliOp membrane_operator(const OrthoplexModel& model, const MembraneSpec& spec);

// Six X operators on the octahedron vertices around a Z-stabilizer cell
// of a fixed-w hyperplane; iterating the construction doubles the radius.
PauliOp octahedron_operator(const OrthoplexModel& model, const Cell& center, int order);

struct SegmentProfile {
    bool degenerate = false;           // single-qubit membrane, no segments
    int diagonal_segments = 0;
    int vertical_segments = 0;
    std::vector<std::size_t> diagonal_cells;      // per segment
    std::vector<std::size_t> vertical_pairs;      // per segment
    Cell rung;                         // displacement inside one vertical pair
    // exact density data: vertical pairs carry two cells per unit length,
    // diagonal segments one cell per half-diagonal step of length sqrt(2)/2,
    // so (vertical density / diagonal density)^2 = 2
    int vertical_cells_per_unit = 2;
    int diagonal_cells_per_step = 1;
    int ratio_squared_num = 2;
    int ratio_squared_den = 1;
};

SegmentProfile segment_profile(const OrthoplexModel& model, const Syndrome& syn);

struct ChaironReport {
    std::vector<Cell> residual;        // violated cells on the crease line
    bool residual_nonempty = false;
    Cell displacement_a, displacement_b;   // vertical-pair vectors of each membrane
    bool displacements_differ = false;
};

ChaironReport chairon_residual(const OrthoplexModel& model, const MembraneSpec& spec_a,
                               const MembraneSpec& spec_b);

struct SpaceDiagonalVerdict {
    Cell direction_a, direction_b;     // doubled step vectors of the segments
    bool directions_differ = false;
    bool no_finite_overlap = false;
};

SpaceDiagonalVerdict space_diagonal_check(const OrthoplexModel& model,
                                          const MembraneSpec& spec_a,
                                          const MembraneSpec& spec_b);

struct MoveResult {
    PauliOp delta;
    std::size_t syndrome_size_before = 0;
    std::size_t syndrome_size_after = 0;
    bool clean = false;                // size unchanged, excitation translated
};

// Single-qubit move of a violated stabilizer one half-step along an axis.
// direction: +(axis+1) or -(axis+1), e.g. +3 is the positive last axis of
// a 3d model. Clean only along the model's free axis (the last one).
MoveResult move_lineon(const OrthoplexModel& model, const Cell& excitation_cell, int direction);

// Transport of the canonical dipole (violated B terms at anchor and
// anchor + half a unit in x and y) one half-step along its diagonal:
// a single X on the link east of the anchor vertex.
PauliOp move_planon(const OrthoplexModel& model, const Cell& dipole_anchor);

struct FragmentResult {
    PauliOp op;
    Syndrome syn;
};

// Translate each loop excitation independently along the last axis.
// Offsets are unit shifts in [0, L_w); unlisted cells stay in place.
FragmentResult fragment_loop(const OrthoplexModel& model, const MembraneSpec& spec,
                             const std::map<Cell, int>& offsets);

struct TopologyReport {
    int components = 0;
    bool all_degree_two = false;
    std::size_t nodes = 0;
    std::size_t merged_pairs = 0;      // vertex/plaquette rungs fused per double line
    std::vector<int> degree_histogram; // index = degree
};

// Project violated cells along drop_axis and test the loop certificate:
// one component with every node of degree two. Vertical double lines
// count as single strands, so each vertex/plaquette rung pair fuses into
// one node before degrees are evaluated.
TopologyReport project_and_classify(const OrthoplexModel& model, const Syndrome& syn,
                                    int drop_axis);

struct AlignmentReport {
    std::size_t card_first = 0, card_second = 0, card_combined = 0;
    bool strictly_lower = false;
};

// Two congruent loops in parallel diagonal planes offset along the plane
// normal by the given half-diagonal counts; adjacent loops cancel part of
// their boundary, far loops do not interact.
AlignmentReport alignment_cancellation(const OrthoplexModel& model, const MembraneSpec& spec,
                                       std::pair<int, int> plane_offsets);

} // namespace oplx

#endif
