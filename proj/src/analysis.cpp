#include "oplx/analysis.hpp"

#include "oplx/errors.hpp"

#include <numeric>
#include <sstream>

namespace oplx {

LogicalSet logical_basis(const CssCode& code) {
    LogicalSet out;
    std::vector<BitVector> hx_rows, hz_rows;
    for (std::size_t r = 0; r < code.hx.rows(); ++r) hx_rows.push_back(code.hx.row(r));
    for (std::size_t r = 0; r < code.hz.rows(); ++r) hz_rows.push_back(code.hz.row(r));
    out.x_logicals = quotient_basis(nullspace_basis(code.hz), hx_rows);
    out.z_logicals = quotient_basis(nullspace_basis(code.hx), hz_rows);
    return out;
}

BitMatrix pairing_matrix(const LogicalSet& logicals) {
    std::size_t k = logicals.k();
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < logicals.z_logicals.size(); ++j)
            m.set(i, j, logicals.x_logicals[i].dot(logicals.z_logicals[j]));
    return m;
}

GsdRecord gsd_record(const LatticeShape& shape) {
    GsdRecord rec;
    rec.sizes = shape.sizes;
    auto model = build_model(shape);
    auto [n, k] = code_params(model.code);
    rec.n = n;
    rec.k = k;
    bool all_periodic = true;
    for (bool p : shape.periodic) all_periodic &= p;
    if (shape.p() == 3 && all_periodic) {
        rec.predicted = static_cast<std::size_t>(4 * std::gcd(shape.sizes[0], shape.sizes[1]));
        rec.match = (rec.k == *rec.predicted);
    }
    return rec;
}

std::vector<GsdRecord> gsd_scan(const std::vector<LatticeShape>& shapes) {
    std::vector<GsdRecord> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) out.push_back(gsd_record(s));
    return out;
}

std::string gsd_scan_csv(const std::vector<GsdRecord>& records) {
    std::ostringstream os;
    os << "lx,ly,lz,n,k,predicted,match\n";
    for (const auto& r : records) {
        for (int i = 0; i < 3; ++i) {
            if (i < static_cast<int>(r.sizes.size())) os << r.sizes[static_cast<std::size_t>(i)];
            os << ",";
        }
        os << r.n << "," << r.k << ",";
        if (r.predicted) os << *r.predicted;
        os << "," << (r.match ? "true" : "false") << "\n";
    }
    return os.str();
}

namespace {

void add_qubit(const OrthoplexModel& model, BitVector& support, Cell c) {
    c = canonicalize(std::move(c), model.shape);
    auto it = model.qubit_index.find(c);
    if (it == model.qubit_index.end()) throw InvalidCell("string support hits a non-qubit cell");
    support.flip(it->second);
}

} // namespace

StringVerdict check_string_logical(const OrthoplexModel& model, StringKind kind,
                                   const Cell& anchor) {
    if (model.shape.p() != 3) throw InvalidDimension("check_string_logical: 3d model expected");
    if (static_cast<int>(anchor.size()) != 3) throw InvalidCell("anchor must be a 3d cell");

    const auto& shape = model.shape;
    StringVerdict v;
    v.support = BitVector(model.n());

    if (kind == StringKind::VerticalZ) {
        if (!shape.periodic[2]) throw NonClosingPath("vertical string needs a periodic last axis");
        int lx = anchor[0] & ~1, ly = anchor[1] & ~1;   // vertex line through the anchor
        for (int k = 0; k < shape.sizes[2]; ++k)
            add_qubit(model, v.support, {lx, ly, 2 * k + 1});
        v.length = static_cast<std::size_t>(shape.sizes[2]);
    } else {
        if (!shape.periodic[0] || !shape.periodic[1])
            throw NonClosingPath("diagonal string needs periodic first axes");
        int lx = shape.sizes[0], ly = shape.sizes[1];
        int steps = std::lcm(lx, ly);
        v.wraps_first_axis = steps / lx;
        v.wraps_second_axis = steps / ly;
        int sx = (kind == StringKind::DiagonalPlus) ? -1 : +1;
        int x0 = anchor[0] & ~1, y0 = anchor[1] & ~1, z0 = anchor[2] & ~1;
        for (int k = 0; k < steps; ++k) {
            // one x-oriented link then one y-oriented link per diagonal step
            add_qubit(model, v.support, {x0 + sx * 2 * k + sx, y0 + 2 * k, z0});
            add_qubit(model, v.support, {x0 + sx * 2 * k + 2 * sx, y0 + 2 * k + 1, z0});
        }
        v.length = static_cast<std::size_t>(2 * steps);
    }

    v.commutes = true;
    for (std::size_t r = 0; r < model.code.hz.rows(); ++r)
        if (model.code.hz.row(r).dot(v.support)) { v.commutes = false; break; }

    GaussBasis rowspace(model.code.hx);
    std::size_t base_rank = rowspace.rank();
    GaussBasis extended = rowspace;
    extended.insert(v.support);
    v.outside_rowspace = extended.rank() > base_rank;
    return v;
}

} // namespace oplx
