#include "oplx/lattice.hpp"

#include "oplx/errors.hpp"

#include <algorithm>

namespace oplx {

LatticeShape LatticeShape::cubic(std::vector<int> sizes, bool periodic_all) {
    LatticeShape s;
    s.periodic.assign(sizes.size(), periodic_all);
    s.sizes = std::move(sizes);
    for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        int minimum = s.periodic[i] ? 2 : 1;
        if (s.sizes[i] < minimum) throw InvalidSize("LatticeShape: extent too small");
    }
    return s;
}

LatticeShape LatticeShape::mixed(std::vector<int> sizes, std::vector<bool> periodic) {
    if (sizes.size() != periodic.size())
        throw ShapeMismatch("LatticeShape: sizes and flags differ in length");
    LatticeShape s;
    s.sizes = std::move(sizes);
    s.periodic = std::move(periodic);
    for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        int minimum = s.periodic[i] ? 2 : 1;
        if (s.sizes[i] < minimum) throw InvalidSize("LatticeShape: extent too small");
    }
    return s;
}

int cell_dimension(const Cell& c) {
    int d = 0;
    for (int x : c) d += x & 1;
    return d;
}

Cell canonicalize(Cell c, const LatticeShape& shape) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!shape.periodic[i]) continue;
        int m = 2 * shape.sizes[i];
        c[i] %= m;
        if (c[i] < 0) c[i] += m;
    }
    return c;
}

bool cell_in_shape(const Cell& c, const LatticeShape& shape) {
    if (static_cast<int>(c.size()) != shape.p()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int hi = shape.periodic[i] ? 2 * shape.sizes[i] - 1 : 2 * shape.sizes[i] - 2;
        if (c[i] < 0 || c[i] > hi) return false;
    }
    return true;
}

std::vector<Cell> neighbors(const Cell& cell, const LatticeShape& shape) {
    std::vector<Cell> out;
    out.reserve(2 * cell.size());
    for (std::size_t mu = 0; mu < cell.size(); ++mu) {
        for (int d : {+1, -1}) {
            Cell c = cell;
            c[mu] += d;
            c = canonicalize(std::move(c), shape);
            if (cell_in_shape(c, shape)) out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

// subsets of {0..p-1} of the given size, as sorted index lists, in the
// order induced by ascending signature bit-tuples
std::vector<std::vector<int>> axis_subsets(int p, int dim) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        std::vector<int> axes;
        for (int j = 0; j < p; ++j)
            if (mask & (1u << j)) axes.push_back(j);
        if (static_cast<int>(axes.size()) == dim) out.push_back(std::move(axes));
    }
    std::sort(out.begin(), out.end(), [p](const auto& a, const auto& b) {
        std::vector<int> sa(static_cast<std::size_t>(p), 0), sb(static_cast<std::size_t>(p), 0);
        for (int x : a) sa[static_cast<std::size_t>(x)] = 1;
        for (int x : b) sb[static_cast<std::size_t>(x)] = 1;
        return sa < sb;
    });
    return out;
}

} // namespace

std::vector<Cell> enumerate_cells(const LatticeShape& shape, int dim,
                                  const std::function<bool(const std::vector<int>&)>& axis_filter) {
    std::vector<Cell> out;
    if (dim < 0 || dim > shape.p()) return out;
    for (const auto& axes : axis_subsets(shape.p(), dim)) {
        if (axis_filter && !axis_filter(axes)) continue;
        std::vector<bool> odd(static_cast<std::size_t>(shape.p()), false);
        for (int a : axes) odd[static_cast<std::size_t>(a)] = true;

        std::vector<std::vector<int>> ranges;
        for (int j = 0; j < shape.p(); ++j) {
            std::vector<int> r;
            int l = shape.sizes[static_cast<std::size_t>(j)];
            if (odd[static_cast<std::size_t>(j)]) {
                int count = shape.periodic[static_cast<std::size_t>(j)] ? l : l - 1;
                for (int k = 0; k < count; ++k) r.push_back(2 * k + 1);
            } else {
                for (int k = 0; k < l; ++k) r.push_back(2 * k);
            }
            ranges.push_back(std::move(r));
        }
        // odometer over per-axis coordinate lists, axis 0 slowest
        std::vector<std::size_t> idx(ranges.size(), 0);
        bool any_empty = std::any_of(ranges.begin(), ranges.end(),
                                     [](const auto& r) { return r.empty(); });
        if (any_empty) continue;
        while (true) {
            Cell c(ranges.size());
            for (std::size_t j = 0; j < ranges.size(); ++j) c[j] = ranges[j][idx[j]];
            out.push_back(std::move(c));
            std::size_t j = ranges.size();
            while (j > 0) {
                --j;
                if (++idx[j] < ranges[j].size()) break;
                idx[j] = 0;
                if (j == 0) goto done;
            }
        }
    done:;
    }
    return out;
}

Cell cell_of_label(const Label& label, const LatticeShape& shape) {
    if (static_cast<int>(label.size()) != shape.p())
        throw ShapeMismatch("cell_of_label: label length does not match lattice dimension");
    if (!cell_in_shape(label, shape))
        throw ShapeMismatch("cell_of_label: label coordinates outside the lattice");
    return label;
}

Label label_of_cell(const Cell& cell, const LatticeShape& shape) {
    if (static_cast<int>(cell.size()) != shape.p())
        throw ShapeMismatch("label_of_cell: cell length does not match lattice dimension");
    if (!cell_in_shape(cell, shape))
        throw ShapeMismatch("label_of_cell: cell coordinates outside the lattice");
    return cell;
}

} // namespace oplx
