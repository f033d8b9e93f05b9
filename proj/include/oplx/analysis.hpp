#ifndef OPLX_ANALYSIS_HPP
#define OPLX_ANALYSIS_HPP

#include "oplx/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oplx {

struct LogicalSet {
    std::vector<BitVector> x_logicals;   // X-type representatives over qubits
    std::vector<BitVector> z_logicals;
    std::size_t k() const { return x_logicals.size(); }
};

// X-logicals: kernel of hz modulo the row space of hx; Z-logicals dual.
LogicalSet logical_basis(const CssCode& code);

// k-by-k GF(2) overlap matrix between X- and Z-logical representatives.
BitMatrix pairing_matrix(const LogicalSet& logicals);

struct GsdRecord {
    std::vector<int> sizes;
    std::size_t n = 0;
    std::size_t k = 0;                    // log2 of the ground state degeneracy
    std::optional<std::size_t> predicted; // 4*gcd(Lx, Ly) for periodic 3d shapes
    bool match = false;
};

GsdRecord gsd_record(const LatticeShape& shape);
std::vector<GsdRecord> gsd_scan(const std::vector<LatticeShape>& shapes);

// header: lx,ly,lz,n,k,predicted,match
std::string gsd_scan_csv(const std::vector<GsdRecord>& records);

enum class StringKind { VerticalZ, DiagonalPlus, DiagonalMinus };

struct StringVerdict {
    BitVector support;            // X support over qubits
    bool commutes = false;        // hz * support == 0
    bool outside_rowspace = false;
    bool logical() const { return commutes && outside_rowspace; }
    std::size_t length = 0;       // number of links in the loop
    int wraps_first_axis = 1;     // times the closed diagonal winds each axis
    int wraps_second_axis = 1;
};

// Straight or staircase non-contractible loop of X operators on links.
// VerticalZ runs along the last axis through the anchor; the diagonal
// kinds staircase through the first two axes inside one plane of the
// anchor, closing after lcm(Lx, Ly) full steps.
StringVerdict check_string_logical(const OrthoplexModel& model, StringKind kind,
                                   const Cell& anchor);

} // namespace oplx

#endif
