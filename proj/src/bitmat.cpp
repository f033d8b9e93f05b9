#include "oplx/bitmat.hpp"

#include "oplx/errors.hpp"

#include <algorithm>

namespace oplx {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeMismatch("from_rows: row length mismatch");
        m.row(r) = rows[r];
    }
    return m;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data)
        if (!r.is_zero()) return false;
    return true;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k : a.row(i).ones()) out.row(i).xor_assign(b.row(k));
    }
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c : m.row(r).ones()) out.set(c, r, true);
    return out;
}

BitMatrix row_reduce(const BitMatrix& m) {
    BitMatrix a = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = a.rows();
        for (std::size_t r = pivot_row; r < a.rows(); ++r) {
            if (a.get(r, col)) { sel = r; break; }
        }
        if (sel == a.rows()) continue;
        std::swap(a.row(pivot_row), a.row(sel));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != pivot_row && a.get(r, col)) a.row(r).xor_assign(a.row(pivot_row));
        }
        ++pivot_row;
    }
    return a;
}

std::size_t rank(const BitMatrix& m) {
    GaussBasis g;
    for (std::size_t r = 0; r < m.rows(); ++r) g.insert(m.row(r));
    return g.rank();
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
    BitMatrix r = row_reduce(m);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t row = 0; row < r.rows(); ++row) {
        std::size_t p = r.row(row).first_set();
        if (p == r.cols()) break;
        pivot_col.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t row = 0; row < pivot_col.size(); ++row)
            if (r.get(row, f)) v.set(pivot_col[row], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

GaussBasis::GaussBasis(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
}

GaussBasis::GaussBasis(const std::vector<BitVector>& vs) {
    for (const auto& v : vs) insert(v);
}

bool GaussBasis::insert(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.is_zero()) return false;
    std::size_t p = r.first_set();
    // keep existing rows reduced against the new one
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].get(p)) rows[i].xor_assign(r);
    auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
    std::size_t idx = it - pivots.begin();
    pivots.insert(it, p);
    rows.insert(rows.begin() + idx, std::move(r));
    return true;
}

BitVector GaussBasis::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (v.get(pivots[i])) v.xor_assign(rows[i]);
    return v;
}

std::vector<BitVector> quotient_basis(const std::vector<BitVector>& big,
                                      const std::vector<BitVector>& small) {
    GaussBasis span_big(big);
    for (const auto& s : small)
        if (!span_big.contains(s))
            throw ContainmentViolation("quotient_basis: small vector outside span(big)");
    GaussBasis acc(small);
    std::vector<BitVector> out;
    for (const auto& v : big) {
        BitVector r = acc.reduce(v);
        if (!r.is_zero()) {
            out.push_back(r);
            acc.insert(r);
        }
    }
    return out;
}

} // namespace oplx
