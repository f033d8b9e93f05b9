#include "oplx/model.hpp"

#include "oplx/errors.hpp"

#include <algorithm>
#include <sstream>

namespace oplx {

namespace {

std::string cell_to_string(const Cell& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

std::vector<BasisElement> cells_to_elements(const std::vector<Cell>& cells) {
    std::vector<BasisElement> out;
    out.reserve(cells.size());
    for (const auto& c : cells) {
        BasisElement e;
        e.label = c;
        e.sig.reserve(c.size());
        for (int x : c) e.sig.push_back(x & 1);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

OrthoplexModel build_model(const LatticeShape& shape) {
    if (shape.p() < 2) throw InvalidDimension("build_model: need p >= 2");

    OrthoplexModel m;
    m.shape = shape;
    for (int d = 1; d <= shape.p(); d += 2) {
        auto cells = enumerate_cells(shape, d);
        m.qubit_cells.insert(m.qubit_cells.end(), cells.begin(), cells.end());
    }
    int last = shape.p() - 1;
    for (int d = 0; d <= shape.p(); d += 2) {
        auto with_last = enumerate_cells(shape, d, [last](const std::vector<int>& axes) {
            return std::find(axes.begin(), axes.end(), last) != axes.end();
        });
        m.x_cells.insert(m.x_cells.end(), with_last.begin(), with_last.end());
        auto without_last = enumerate_cells(shape, d, [last](const std::vector<int>& axes) {
            return std::find(axes.begin(), axes.end(), last) == axes.end();
        });
        m.z_cells.insert(m.z_cells.end(), without_last.begin(), without_last.end());
    }

    // enumerate_cells emits per-dimension blocks; restore global
    // signature-major order so hgp-built bases line up index for index
    auto sort_cells = [](std::vector<Cell>& cells) {
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
            Signature sa, sb;
            for (int x : a) sa.push_back(x & 1);
            for (int x : b) sb.push_back(x & 1);
            if (sa != sb) return sa < sb;
            return a < b;
        });
    };
    sort_cells(m.qubit_cells);
    sort_cells(m.x_cells);
    sort_cells(m.z_cells);

    for (std::size_t i = 0; i < m.qubit_cells.size(); ++i) m.qubit_index.emplace(m.qubit_cells[i], i);
    for (std::size_t i = 0; i < m.x_cells.size(); ++i) m.x_index.emplace(m.x_cells[i], i);
    for (std::size_t i = 0; i < m.z_cells.size(); ++i) m.z_index.emplace(m.z_cells[i], i);

    m.code.n = m.qubit_cells.size();
    m.code.hx = BitMatrix(m.x_cells.size(), m.code.n);
    m.code.hz = BitMatrix(m.z_cells.size(), m.code.n);
    for (std::size_t r = 0; r < m.x_cells.size(); ++r)
        for (const auto& q : neighbors(m.x_cells[r], shape))
            m.code.hx.flip(r, m.qubit_index.at(q));
    for (std::size_t r = 0; r < m.z_cells.size(); ++r)
        for (const auto& q : neighbors(m.z_cells[r], shape))
            m.code.hz.flip(r, m.qubit_index.at(q));

    m.code.qubit_labels = LabeledBasis(cells_to_elements(m.qubit_cells));
    m.code.x_labels = LabeledBasis(cells_to_elements(m.x_cells));
    m.code.z_labels = LabeledBasis(cells_to_elements(m.z_cells));

    if (!m.code.css_valid()) throw InvalidPartition("build_model: CSS product check failed");
    return m;
}

namespace {

void compare_side(const BitMatrix& ma, const LabeledBasis& rows_a, const LabeledBasis& cols_a,
                  const BitMatrix& mb, const LabeledBasis& rows_b, const LabeledBasis& cols_b,
                  const char* side, MatrixCompareReport& rep) {
    if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) {
        rep.pass = false;
        rep.mismatches.push_back(std::string(side) + ": shape mismatch");
        return;
    }
    std::vector<std::size_t> col_map(ma.cols());
    for (std::size_t c = 0; c < ma.cols(); ++c) {
        std::size_t t = cols_b.index_of(cols_a.at(c).label);
        if (t == cols_b.dim()) {
            rep.pass = false;
            rep.mismatches.push_back(std::string(side) + ": unmatched qubit label " +
                                     cell_to_string(cols_a.at(c).label));
            return;
        }
        col_map[c] = t;
    }
    for (std::size_t r = 0; r < ma.rows(); ++r) {
        std::size_t t = rows_b.index_of(rows_a.at(r).label);
        if (t == rows_b.dim()) {
            rep.pass = false;
            rep.mismatches.push_back(std::string(side) + ": unmatched stabilizer label " +
                                     cell_to_string(rows_a.at(r).label));
            continue;
        }
        bool row_ok = true;
        for (std::size_t c = 0; c < ma.cols(); ++c)
            if (ma.get(r, c) != mb.get(t, col_map[c])) { row_ok = false; break; }
        if (!row_ok) {
            rep.pass = false;
            rep.mismatches.push_back(std::string(side) + ": row differs at stabilizer " +
                                     cell_to_string(rows_a.at(r).label));
        }
    }
}

} // namespace

MatrixCompareReport compare_codes(const CssCode& a, const CssCode& b) {
    MatrixCompareReport rep;
    compare_side(a.hx, a.x_labels, a.qubit_labels, b.hx, b.x_labels, b.qubit_labels, "hx", rep);
    compare_side(a.hz, a.z_labels, a.qubit_labels, b.hz, b.z_labels, b.qubit_labels, "hz", rep);
    return rep;
}

MatrixCompareReport cross_validate(const OrthoplexModel& model) {
    for (bool per : model.shape.periodic)
        if (!per) throw InvalidPartition("cross_validate: needs a fully periodic shape");
    std::vector<ChainComplex> factors;
    for (int l : model.shape.sizes) factors.push_back(repetition_complex(l, true));
    CssCode via_partition = build_css(factors, orthoplex_partition(model.shape.p()));
    return compare_codes(model.code, via_partition);
}

SelfDualityReport self_duality_check(const OrthoplexModel& model) {
    SelfDualityReport rep;
    int p = model.shape.p();
    for (bool per : model.shape.periodic)
        if (!per) return rep;
    // half-unit translation along the last two axes flips exactly those
    // coordinate parities, which swaps the X and Z cell families
    rep.shift = Cell(static_cast<std::size_t>(p), 0);
    rep.shift[static_cast<std::size_t>(p) - 2] = 1;
    rep.shift[static_cast<std::size_t>(p) - 1] = 1;
    rep.applicable = true;

    auto shifted = [&](const Cell& c) {
        Cell s = c;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rep.shift[i];
        return canonicalize(std::move(s), model.shape);
    };

    rep.stabilizer_sets_match = true;
    for (const auto& c : model.x_cells)
        if (!model.z_index.count(shifted(c))) rep.stabilizer_sets_match = false;
    for (const auto& c : model.z_cells)
        if (!model.x_index.count(shifted(c))) rep.stabilizer_sets_match = false;

    rep.supports_match = rep.stabilizer_sets_match;
    if (rep.stabilizer_sets_match) {
        for (std::size_t r = 0; r < model.x_cells.size() && rep.supports_match; ++r) {
            std::size_t zr = model.z_index.at(shifted(model.x_cells[r]));
            for (std::size_t c = 0; c < model.n(); ++c) {
                std::size_t qc = model.qubit_index.at(shifted(model.qubit_cells[c]));
                if (model.code.hx.get(r, c) != model.code.hz.get(zr, qc)) {
                    rep.supports_match = false;
                    break;
                }
            }
        }
    }
    rep.pass = rep.stabilizer_sets_match && rep.supports_match;
    return rep;
}

} // namespace oplx
