#ifndef OPLX_BITMAT_HPP
#define OPLX_BITMAT_HPP

#include "oplx/bitvec.hpp"

#include <cstddef>
#include <vector>

namespace oplx {

// Dense bit-packed matrix over GF(2), row-major.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : nrows(rows), ncols(cols), data(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

    std::size_t rows() const { return nrows; }
    std::size_t cols() const { return ncols; }

    bool get(std::size_t r, std::size_t c) const { return data[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { data[r].flip(c); }

    const BitVector& row(std::size_t r) const { return data[r]; }
    BitVector& row(std::size_t r) { return data[r]; }

    bool is_zero() const;
    bool operator==(const BitMatrix& other) const {
        return nrows == other.nrows && ncols == other.ncols && data == other.data;
    }
    bool operator!=(const BitMatrix& other) const { return !(*this == other); }

private:
    std::size_t nrows = 0, ncols = 0;
    std::vector<BitVector> data;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);

// Reduced row echelon form; column-major pivoting, leftmost pivot first.
BitMatrix row_reduce(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of { v : m v = 0 }. Vectors are linearly independent and the
// count equals cols - rank(m). Deterministic: free columns ascending.
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

// Vectors extending a basis of span(small) to a basis of span(big).
// Representatives are reduced against the echelon basis of span(small)
// and against previously chosen representatives, so output is canonical.
// Throws ContainmentViolation if span(small) is not inside span(big).
std::vector<BitVector> quotient_basis(const std::vector<BitVector>& big,
                                      const std::vector<BitVector>& small);

// Incremental GF(2) row basis kept in reduced echelon form.
class GaussBasis {
public:
    GaussBasis() = default;
    explicit GaussBasis(const BitMatrix& m);
    explicit GaussBasis(const std::vector<BitVector>& rows);

    // Reduce v against the basis, insert the remainder if nonzero.
    // Returns true if the rank grew.
    bool insert(const BitVector& v);

    // Fully reduce v against the basis.
    BitVector reduce(BitVector v) const;

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    std::size_t rank() const { return rows.size(); }

private:
    std::vector<BitVector> rows;       // sorted by pivot column
    std::vector<std::size_t> pivots;
};

} // namespace oplx

#endif
