#include "oplx/defect.hpp"

#include "oplx/errors.hpp"

#include <algorithm>
#include <map>

namespace oplx {

namespace {

Cell shifted(Cell c, int axis, int d) {
    c[static_cast<std::size_t>(axis)] += d;
    return c;
}

} // namespace

DefectModel build_dislocation(const LatticeShape& shape) {
    if (shape.p() != 3) throw InvalidDimension("build_dislocation: 3d model expected");
    for (bool per : shape.periodic)
        if (per) throw InvalidPartition("build_dislocation: open boundaries expected");
    for (int l : shape.sizes)
        if (l < 5) throw ShapeTooSmall("build_dislocation: box too small for an interior defect");

    DefectModel dm;
    dm.base = build_model(shape);
    dm.line_z = 2 * (shape.sizes[2] / 2) - 1;
    dm.plane_sum = (shape.sizes[0] - 1) + (shape.sizes[1] - 1) - dm.line_z;
    if (!(dm.plane_sum & 1)) dm.plane_sum -= 1;   // qubits carry odd coordinate sums

    for (std::size_t i = 0; i < dm.base.qubit_cells.size(); ++i) {
        const Cell& c = dm.base.qubit_cells[i];
        if (dm.on_half_plane(c)) {
            dm.removed_cells.insert(c);
            dm.removed_qubits.push_back(i);
        }
    }
    if (dm.removed_cells.empty()) throw ShapeTooSmall("build_dislocation: empty half-plane");

    auto truncated_row = [&](const BitMatrix& h, std::size_t r) {
        BitVector v = h.row(r);
        for (std::size_t q : dm.removed_qubits) v.set(q, false);
        return v;
    };

    std::set<Cell> trunc_a, trunc_b;
    for (const auto& c : dm.removed_cells)
        for (const auto& nb : neighbors(c, shape)) {
            if (dm.base.x_index.count(nb)) trunc_a.insert(nb);
            if (dm.base.z_index.count(nb)) trunc_b.insert(nb);
        }

    // Truncated stabilizers live on the two sheets beside the half-plane
    // (x+y-z one off the plane sum). In sheet coordinates t = x-y, h = z
    // the A-type cells sit at odd (t, h) and the B-type cells at even
    // (t, h); each A anticommutes with its four diagonal B's once supports
    // are truncated. Fusing every A with one diagonal B restores pairwise
    // commutation exactly when the chosen lean alternates from one A
    // column to the next and from one A row to the next.
    std::vector<std::pair<Cell, Cell>> pairs;
    std::set<Cell> claimed_b;
    for (const Cell& a : trunc_a) {
        int t = a[0] - a[1];
        int h = a[2];
        int lean_t = (((t % 4) + 4) % 4 == 1) ? +1 : -1;
        int lean_h = (((h % 4) + 4) % 4 == 1) ? +1 : -1;
        // sheet displacement (lean_t, lean_h) as a lattice translation
        Cell b = a;
        if (lean_t == +1 && lean_h == -1) { b[1] -= 1; b[2] -= 1; }
        else if (lean_t == -1 && lean_h == +1) { b[1] += 1; b[2] += 1; }
        else if (lean_t == +1 && lean_h == +1) { b[0] += 1; b[2] += 1; }
        else { b[0] -= 1; b[2] -= 1; }
        if (dm.base.z_index.count(b) && trunc_b.count(b)) {
            pairs.emplace_back(a, b);
            claimed_b.insert(b);
        }
        // an A whose partner fell outside the truncated sheet stays lone
        // and is kept only if the commutation sweep below accepts it
    }
    std::set<Cell> claimed_a;
    for (const auto& [a, b] : pairs) claimed_a.insert(a);

    for (const auto& [a, b] : pairs) {
        DefectGenerator g{GeneratorKind::Mixed,
                          truncated_row(dm.base.code.hx, dm.base.x_index.at(a)),
                          truncated_row(dm.base.code.hz, dm.base.z_index.at(b)),
                          {a, b}};
        dm.generators.push_back(std::move(g));
    }
    for (std::size_t r = 0; r < dm.base.x_cells.size(); ++r) {
        const Cell& a = dm.base.x_cells[r];
        if (claimed_a.count(a)) continue;
        DefectGenerator g{GeneratorKind::PureA, truncated_row(dm.base.code.hx, r),
                          BitVector(dm.base.n()), {a}};
        if (!trunc_a.count(a)) {
            dm.generators.push_back(std::move(g));
            continue;
        }
        bool safe = true;
        for (const auto& other : dm.generators)
            if (g.x_part.dot(other.z_part) ^ g.z_part.dot(other.x_part)) { safe = false; break; }
        if (safe) dm.generators.push_back(std::move(g));
    }
    for (std::size_t r = 0; r < dm.base.z_cells.size(); ++r) {
        const Cell& b = dm.base.z_cells[r];
        if (claimed_b.count(b)) continue;
        DefectGenerator g{GeneratorKind::PureB, BitVector(dm.base.n()),
                          truncated_row(dm.base.code.hz, r), {b}};
        if (!trunc_b.count(b)) {
            dm.generators.push_back(std::move(g));
            continue;
        }
        bool safe = true;
        for (const auto& other : dm.generators)
            if (g.x_part.dot(other.z_part) ^ g.z_part.dot(other.x_part)) { safe = false; break; }
        if (safe) dm.generators.push_back(std::move(g));
    }
    return dm;
}

CommutationReport check_commutation(const DefectModel& dm) {
    CommutationReport rep;
    const auto& gens = dm.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            ++rep.checked_pairs;
            bool anti = gens[i].x_part.dot(gens[j].z_part) ^ gens[i].z_part.dot(gens[j].x_part);
            if (anti) {
                rep.pass = false;
                rep.violations.emplace_back(i, j);
            }
        }
    }
    return rep;
}

ZeroModeReport zero_mode_count(const DefectModel& dm) {
    ZeroModeReport rep;
    rep.removed_qubits = dm.removed_qubits.size();
    rep.generator_count = dm.generators.size();

    std::set<Cell> touched;
    for (const auto& c : dm.removed_cells)
        for (const auto& nb : neighbors(c, dm.base.shape)) touched.insert(nb);
    rep.truncated_stabilizers = touched.size();

    std::size_t n = dm.base.n();
    GaussBasis g;
    for (const auto& gen : dm.generators) {
        BitVector row(2 * n);
        for (std::size_t i : gen.x_part.ones()) row.set(i, true);
        for (std::size_t i : gen.z_part.ones()) row.set(n + i, true);
        g.insert(row);
    }
    rep.independent_generators = g.rank();
    rep.k_defect = dm.remaining_qubits() - rep.independent_generators;

    auto [nb, kb] = code_params(dm.base.code);
    rep.k_base = kb;
    rep.zero_modes = rep.k_defect - rep.k_base;
    return rep;
}

std::vector<std::size_t> defect_syndrome(const DefectModel& dm, const PauliOp& op) {
    for (std::size_t q : dm.removed_qubits)
        if (op.x_support.get(q) || op.z_support.get(q))
            throw InvalidCell("operator touches a removed qubit");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dm.generators.size(); ++i) {
        bool anti = dm.generators[i].x_part.dot(op.z_support) ^
                    dm.generators[i].z_part.dot(op.x_support);
        if (anti) out.push_back(i);
    }
    return out;
}

namespace {

// dual lattice displacement: the half translation along y and z that maps
// the B family onto the A family
const Cell DUAL_SHIFT{0, 1, 1};

struct TransportState {
    PauliOp op;
    bool type_m = false;
    int crossings = 0;
    std::vector<Cell> crossing_cells;
};

// apply one single-qubit transport factor; a factor whose qubit was
// removed marks a half-plane crossing and flips the transported type
void apply_factor(const DefectModel& dm, TransportState& st, const Cell& base_qubit) {
    Cell q = base_qubit;
    if (st.type_m)
        for (std::size_t i = 0; i < 3; ++i) q[i] += DUAL_SHIFT[i];
    if (dm.removed_cells.count(q)) {
        st.crossings += 1;
        st.type_m = !st.type_m;
        st.crossing_cells.push_back(q);
        return;
    }
    // the dual of a removed factor can itself be removed; crossing already
    // recorded by the base factor, so only apply live qubits
    auto it = dm.base.qubit_index.find(q);
    if (it == dm.base.qubit_index.end()) throw InvalidCell("transport left the lattice");
    if (st.type_m)
        st.op.z_support.flip(it->second);
    else
        st.op.x_support.flip(it->second);
}

// The two string halves meeting at a cut leave a local cluster of violated
// fused stabilizers. The clean continuation is whatever local operator
// cancels them, so solve for it: unknown X/Z flips on the live qubits near
// the crossings, one parity equation per generator supported there.
bool patch_junction(const DefectModel& dm, TransportState& st,
                    const std::set<std::size_t>& wanted) {
    std::vector<std::size_t> current = defect_syndrome(dm, st.op);
    std::set<std::size_t> diff;
    for (std::size_t g : current)
        if (!wanted.count(g)) diff.insert(g);
    for (std::size_t g : wanted)
        if (std::find(current.begin(), current.end(), g) == current.end()) diff.insert(g);
    if (diff.empty()) return true;

    for (int radius = 4; radius <= 6; radius += 2) {
        std::set<std::size_t> patch;
        for (const auto& center : st.crossing_cells) {
            for (std::size_t q = 0; q < dm.base.n(); ++q) {
                const Cell& c = dm.base.qubit_cells[q];
                int linf = 0;
                for (std::size_t i = 0; i < 3; ++i)
                    linf = std::max(linf, std::abs(c[i] - center[i]));
                if (linf <= radius && !dm.removed_cells.count(c)) patch.insert(q);
            }
        }
        std::vector<std::size_t> qubits(patch.begin(), patch.end());
        std::size_t vars = 2 * qubits.size();

        std::vector<std::size_t> rows;
        for (std::size_t g = 0; g < dm.generators.size(); ++g) {
            bool touches = false;
            for (std::size_t i = 0; i < qubits.size() && !touches; ++i)
                touches = dm.generators[g].x_part.get(qubits[i]) ||
                          dm.generators[g].z_part.get(qubits[i]);
            if (touches) rows.push_back(g);
        }
        bool coverage = true;
        for (std::size_t g : diff)
            if (std::find(rows.begin(), rows.end(), g) == rows.end()) coverage = false;
        if (!coverage) continue;

        // eliminate the augmented system [coefficients | needed flip]
        BitMatrix m(rows.size(), vars + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::size_t g = rows[r];
            for (std::size_t i = 0; i < qubits.size(); ++i) {
                if (dm.generators[g].z_part.get(qubits[i])) m.set(r, i, true);
                if (dm.generators[g].x_part.get(qubits[i])) m.set(r, qubits.size() + i, true);
            }
            m.set(r, vars, diff.count(g) > 0);
        }
        BitMatrix r = row_reduce(m);
        std::vector<int> solution(vars, 0);
        bool bad = false;
        for (std::size_t row = 0; row < r.rows(); ++row) {
            std::size_t pivot = r.row(row).first_set();
            if (pivot > vars) break;      // zero row
            if (pivot == vars) { bad = true; break; }
            // free variables default to zero, so each pivot takes the rhs
            solution[pivot] = r.get(row, vars);
        }
        if (bad) continue;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if (solution[i]) st.op.x_support.flip(qubits[i]);
            if (solution[qubits.size() + i]) st.op.z_support.flip(qubits[i]);
        }
        std::vector<std::size_t> after = defect_syndrome(dm, st.op);
        std::set<std::size_t> got(after.begin(), after.end());
        if (got == wanted) return true;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if (solution[i]) st.op.x_support.flip(qubits[i]);
            if (solution[qubits.size() + i]) st.op.z_support.flip(qubits[i]);
        }
    }
    return false;
}

} // namespace

BraidVerdict braid_planon(const DefectModel& dm, const BraidPathSpec& path) {
    if ((path.u_min & 3) != (path.sheet_x_minus_y & 3) ||
        (path.u_max & 3) != (path.sheet_x_minus_y & 3))
        throw PathDoesNotEncircle("rectangle corners must sit on dipole anchor vertices");
    if (path.u_min >= path.u_max || path.z_min >= path.z_max || path.winding < 0)
        throw PathDoesNotEncircle("degenerate braid rectangle");
    if ((path.z_min & 1) || (path.z_max & 1))
        throw PathDoesNotEncircle("rectangle corners must sit on integer heights");

    auto vertex_at = [&](int u, int z) {
        return Cell{(u + path.sheet_x_minus_y) / 2, (u - path.sheet_x_minus_y) / 2, z};
    };

    auto run = [&](bool allow_switch) {
        TransportState st;
        st.op = PauliOp(dm.base.n());
        int u = path.u_min, z = path.z_min;
        auto do_factor = [&](const Cell& q) {
            if (allow_switch) {
                apply_factor(dm, st, q);
            } else {
                auto it = dm.base.qubit_index.find(q);
                if (it == dm.base.qubit_index.end()) throw InvalidCell("transport left the lattice");
                if (dm.removed_cells.count(q)) st.crossings += 1;
                else st.op.x_support.flip(it->second);
            }
        };
        for (int circuit = 0; circuit < path.winding; ++circuit) {
            while (u < path.u_max) {
                Cell v = vertex_at(u, z);
                do_factor(shifted(v, 0, +1));
                do_factor({v[0] + 2, v[1] + 1, v[2]});
                u += 4;
            }
            while (z < path.z_max) {
                Cell v = vertex_at(u, z);
                do_factor(shifted(v, 2, +1));
                do_factor({v[0] + 1, v[1] - 1, v[2] + 1});
                z += 2;
            }
            while (u > path.u_min) {
                u -= 4;
                Cell v = vertex_at(u, z);
                do_factor(shifted(v, 0, +1));
                do_factor({v[0] + 2, v[1] + 1, v[2]});
            }
            while (z > path.z_min) {
                z -= 2;
                Cell v = vertex_at(u, z);
                do_factor(shifted(v, 2, +1));
                do_factor({v[0] + 1, v[1] - 1, v[2] + 1});
            }
        }
        return st;
    };

    BraidVerdict verdict;
    TransportState mixed = run(true);
    verdict.cut_crossings = mixed.crossings;
    verdict.start_type = "e";
    verdict.end_type = mixed.type_m ? "m" : "e";
    verdict.types_swapped = mixed.type_m;
    verdict.types_restored = mixed.crossings > 0 && !mixed.type_m;

    // expected closure residue: the transported dipole of each live type
    // at the base corner, nothing anywhere else
    Cell v0 = vertex_at(path.u_min, path.z_min);
    std::set<Cell> expect_cells;
    auto add_pair = [&](Cell v, bool dual) {
        if (dual)
            for (std::size_t i = 0; i < 3; ++i) v[i] += DUAL_SHIFT[i];
        expect_cells.insert(v);
        expect_cells.insert({v[0] + 1, v[1] - 1, v[2]});
    };
    if (mixed.type_m) {
        add_pair(v0, false);
        add_pair(v0, true);
    }
    std::set<std::size_t> wanted;
    for (std::size_t gi = 0; gi < dm.generators.size(); ++gi) {
        const auto& g = dm.generators[gi];
        if (g.kind == GeneratorKind::Mixed || g.cells.size() != 1) continue;
        if (expect_cells.count(g.cells.front())) wanted.insert(gi);
    }
    if (wanted.size() == expect_cells.size())
        verdict.mixed_transport_clean = patch_junction(dm, mixed, wanted);

    TransportState pure = run(false);
    verdict.pure_x_leaves_residual = !defect_syndrome(dm, pure.op).empty();
    return verdict;
}

} // namespace oplx
