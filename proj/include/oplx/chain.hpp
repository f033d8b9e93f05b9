#ifndef OPLX_CHAIN_HPP
#define OPLX_CHAIN_HPP

#include "oplx/bitmat.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace oplx {

// Per-factor degrees of a basis element, e.g. (1,0,1) for a tensor
// element that sits in degree 1 of factors one and three.
using Signature = std::vector<int>;

// Per-factor basis labels. Repetition-code factors label vertices by
// even and links by odd doubled 1D coordinates, so an n-fold product
// label is exactly the doubled coordinate tuple of a lattice cell.
using Label = std::vector<int>;

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BasisElement {
    Signature sig;
    Label label;

    bool operator==(const BasisElement& o) const {
        return sig == o.sig && label == o.label;
    }
    bool operator<(const BasisElement& o) const {
        if (sig != o.sig) return sig < o.sig;
        return label < o.label;
    }
};

// Ordered basis of one chain group, with label lookup.
class LabeledBasis {
public:
    LabeledBasis() = default;
    explicit LabeledBasis(std::vector<BasisElement> elems);

    std::size_t dim() const { return elements.size(); }
    const BasisElement& at(std::size_t i) const { return elements[i]; }
    const std::vector<BasisElement>& all() const { return elements; }

    // index of a label, or dim() if absent
    std::size_t index_of(const Label& l) const;

private:
    std::vector<BasisElement> elements;
    std::unordered_map<Label, std::size_t, IntVecHash> lookup;
};

// Chain complex over GF(2) with labeled bases. group(q) is the degree-q
// basis for q = 0..max_degree(); boundary(q) maps degree q to q-1 and
// satisfies boundary(q-1) * boundary(q) = 0.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<LabeledBasis> groups, std::vector<BitMatrix> boundaries);

    int max_degree() const { return static_cast<int>(grp.size()) - 1; }
    int factors() const;

    const LabeledBasis& group(int q) const { return grp[static_cast<std::size_t>(q)]; }
    std::size_t dim(int q) const {
        return (q < 0 || q > max_degree()) ? 0 : grp[static_cast<std::size_t>(q)].dim();
    }
    // valid for 1 <= q <= max_degree()
    const BitMatrix& boundary(int q) const { return bnd[static_cast<std::size_t>(q) - 1]; }

private:
    std::vector<LabeledBasis> grp;   // index = degree
    std::vector<BitMatrix> bnd;      // bnd[q-1] : degree q -> q-1
};

// 1D repetition code as a length-2 complex: vertices at even doubled
// coordinates carry bits, links at odd doubled coordinates carry checks,
// and each link maps to the sum of its two endpoint vertices.
ChainComplex repetition_complex(int length, bool periodic);

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);
ChainComplex tensor_product_all(const std::vector<ChainComplex>& factors);

struct ComplexReport {
    bool shapes_ok = true;
    // (degree q, boundary(q-1)*boundary(q) == 0) for q = 2..max_degree
    std::vector<std::pair<int, bool>> chain_condition;
    bool pass = true;
};

ComplexReport validate_complex(const ChainComplex& c);

} // namespace oplx

#endif
