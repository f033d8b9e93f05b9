#ifndef OPLX_HGP_HPP
#define OPLX_HGP_HPP

#include "oplx/chain.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace oplx {

enum class Role { Qubit, XStab, ZStab, Unused };

// 0/1 per tensor factor; entry j is the degree of factor j.
using SummandSignature = std::vector<int>;

// Total assignment of every direct summand of a p-fold product of
// length-2 complexes to a role.
struct Partition {
    int p = 0;
    std::map<SummandSignature, Role> assignment;

    Role role_of(const SummandSignature& s) const;
};

// Qubits at weight q, X-stabilizers at weight q-1, Z-stabilizers at
// weight q+1, everything else unused.
Partition standard_hgp_partition(int p, int q);

// Qubits on odd-weight summands; even-weight summands split by the last
// factor: degree 1 there gives X-stabilizers, degree 0 gives Z-stabilizers.
Partition orthoplex_partition(int p);

struct CssCode {
    std::size_t n = 0;
    BitMatrix hx;              // rows: X-stabilizers, cols: qubits
    BitMatrix hz;              // rows: Z-stabilizers, cols: qubits
    LabeledBasis qubit_labels;
    LabeledBasis x_labels;
    LabeledBasis z_labels;

    bool css_valid() const;    // hx * hz^T == 0
};

// Assemble a CSS code from length-2 factor complexes and a partition.
// Basis order is summand-major: signatures ascending, labels ascending
// within each summand. A factor move that lands in an X or Z summand
// contributes a check-matrix entry; moves into qubit or unused summands
// are discarded. Throws InvalidPartition if the result fails hx hz^T = 0.
CssCode build_css(const std::vector<ChainComplex>& complexes, const Partition& partition);

// (n, k) with k = n - rank(hx) - rank(hz)
std::pair<std::size_t, std::size_t> code_params(const CssCode& code);

} // namespace oplx

#endif
