#include "oplx/dynamics.hpp"

#include "oplx/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oplx {

namespace {

std::size_t qubit_index_checked(const OrthoplexModel& model, Cell c) {
    c = canonicalize(std::move(c), model.shape);
    auto it = model.qubit_index.find(c);
    if (it == model.qubit_index.end()) throw InvalidCell("cell is not a qubit of the model");
    return it->second;
}

} // namespace

PauliOp pauli_x(const OrthoplexModel& model, const Cell& qubit) {
    PauliOp op(model.n());
    op.x_support.flip(qubit_index_checked(model, qubit));
    return op;
}

PauliOp pauli_z(const OrthoplexModel& model, const Cell& qubit) {
    PauliOp op(model.n());
    op.z_support.flip(qubit_index_checked(model, qubit));
    return op;
}

Syndrome syndrome(const OrthoplexModel& model, const PauliOp& op) {
    if (op.x_support.size() != model.n() || op.z_support.size() != model.n())
        throw LengthMismatch("syndrome: operator length does not match the model");
    Syndrome s;
    for (std::size_t r = 0; r < model.code.hx.rows(); ++r) {
        if (model.code.hx.row(r).dot(op.z_support)) {
            s.violated_x.push_back(r);
            s.x_cells.push_back(model.x_cells[r]);
        }
    }
    for (std::size_t r = 0; r < model.code.hz.rows(); ++r) {
        if (model.code.hz.row(r).dot(op.x_support)) {
            s.violated_z.push_back(r);
            s.z_cells.push_back(model.z_cells[r]);
        }
    }
    return s;
}

PlaneFrame plane_frame(DiagPlane plane) {
    switch (plane) {
        case DiagPlane::XplusY: return {0, 1, 2, -1};
        case DiagPlane::XminusY: return {0, 1, 2, +1};
        case DiagPlane::XplusZ: return {0, 2, 1, -1};
        case DiagPlane::XminusZ: return {0, 2, 1, +1};
        case DiagPlane::YplusZ: return {1, 2, 0, -1};
        case DiagPlane::YminusZ: return {1, 2, 0, +1};
    }
    throw InvalidCell("unknown plane");
}

std::vector<Cell> membrane_qubits(const OrthoplexModel& model, const MembraneSpec& spec) {
    if (model.shape.p() != 4) throw SpecOutOfRange("membranes are defined on 4d models");
    if (static_cast<int>(spec.anchor.size()) != 4)
        throw SpecOutOfRange("membrane anchor must be a 4d cell");
    for (int c : spec.anchor)
        if (c & 1) throw SpecOutOfRange("membrane anchor must be a vertex");
    if (spec.diag_steps < 0 || spec.perp_extent < 0)
        throw SpecOutOfRange("membrane extents must be nonnegative");

    PlaneFrame f = plane_frame(spec.plane);
    auto alpha = static_cast<std::size_t>(f.alpha);
    auto beta = static_cast<std::size_t>(f.beta);
    auto perp = static_cast<std::size_t>(f.perp);

    // the staircase link at half-step t alternates the two plane axes:
    // even t gives an alpha-oriented link, odd t a beta-oriented one
    auto staircase_link = [&](int t, int layer) {
        Cell c = spec.anchor;
        c[alpha] += f.sign * t + 1;
        c[beta] += t;
        c[perp] += 2 * layer;
        return canonicalize(std::move(c), model.shape);
    };

    int total = 2 * spec.diag_steps;
    std::vector<Cell> out;
    if (spec.triangle) {
        // drop one link per layer from the anchor side; the exposed
        // boundary then advances half a diagonal step per unit height
        for (int j = 0; j <= total; ++j)
            for (int t = j; t <= total; ++t) out.push_back(staircase_link(t, j));
    } else {
        for (int j = 0; j <= spec.perp_extent; ++j)
            for (int t = 0; t <= total; ++t) out.push_back(staircase_link(t, j));
    }
    for (const auto& c : out)
        if (!model.qubit_index.count(c)) throw SpecOutOfRange("membrane leaves the qubit set");
    return out;
}

PauliOp membrane_operator(const OrthoplexModel& model, const MembraneSpec& spec) {
    PauliOp op(model.n());
    for (const auto& c : membrane_qubits(model, spec)) op.x_support.flip(model.qubit_index.at(c));
    return op;
}

PauliOp octahedron_operator(const OrthoplexModel& model, const Cell& center, int order) {
    if (model.shape.p() != 4) throw SpecOutOfRange("octahedron composites live in 4d models");
    Cell c = canonicalize(center, model.shape);
    if (!model.z_index.count(c)) throw InvalidCell("octahedron center must be a Z-stabilizer cell");
    if (order < 1) throw SpecOutOfRange("octahedron order must be positive");

    PauliOp op(model.n());
    if (order == 1) {
        for (std::size_t axis = 0; axis < 3; ++axis) {
            for (int d : {+1, -1}) {
                Cell q = c;
                q[axis] += d;
                op.x_support.flip(qubit_index_checked(model, q));
            }
        }
        return op;
    }
    int shift = 2 << (order - 2);   // one lattice unit doubled at order 2
    for (std::size_t axis = 0; axis < 3; ++axis) {
        for (int d : {+1, -1}) {
            Cell sub = c;
            sub[axis] += d * shift;
            op.xor_assign(octahedron_operator(model, sub, order - 1));
        }
    }
    return op;
}

namespace {

std::vector<int> parity3(const Cell& c) {
    return {c[0] & 1, c[1] & 1, c[2] & 1};
}

bool is_vertex3(const Cell& c) { return !(c[0] & 1) && !(c[1] & 1) && !(c[2] & 1); }

// doubled displacement on a torus, folded into (-L, L]
int torus_delta(int a, int b, int size2) {
    int d = (b - a) % size2;
    if (d <= -size2 / 2) d += size2;
    if (d > size2 / 2) d -= size2;
    return d;
}

Cell cell_delta(const Cell& a, const Cell& b, const LatticeShape& shape) {
    Cell d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (shape.periodic[i])
            d[i] = torus_delta(a[i], b[i], 2 * shape.sizes[i]);
        else
            d[i] = b[i] - a[i];
    }
    return d;
}

} // namespace

SegmentProfile segment_profile(const OrthoplexModel& model, const Syndrome& syn) {
    if (model.shape.p() != 4) throw UnrecognizedPattern("segment profiles live in 4d models");
    if (!syn.violated_x.empty())
        throw UnrecognizedPattern("expected a pure B-term syndrome");
    if (syn.z_cells.empty()) throw UnrecognizedPattern("empty syndrome");

    SegmentProfile prof;
    int w = syn.z_cells.front()[3];
    for (const auto& c : syn.z_cells)
        if (c[3] != w) throw UnrecognizedPattern("syndrome spans several hyperplanes");

    // the degenerate single-qubit membrane: six cells around one qubit
    if (syn.z_cells.size() == 6) {
        std::vector<Cell> vertices;
        for (const auto& c : syn.z_cells)
            if (is_vertex3(c)) vertices.push_back(c);
        if (vertices.size() == 2) {
            Cell mid = vertices[0];
            Cell d = cell_delta(vertices[0], vertices[1], model.shape);
            bool unit_apart = false;
            for (std::size_t i = 0; i < 3; ++i)
                if (std::abs(d[i]) == 2) unit_apart = true;
            mid = vertices[0];
            for (std::size_t i = 0; i < mid.size(); ++i) mid[i] += d[i] / 2;
            mid = canonicalize(std::move(mid), model.shape);
            if (unit_apart && model.qubit_index.count(mid)) {
                std::set<Cell> expect;
                for (const auto& nb : neighbors(mid, model.shape))
                    if (model.z_index.count(nb)) expect.insert(nb);
                std::set<Cell> got(syn.z_cells.begin(), syn.z_cells.end());
                if (expect == got) {
                    prof.degenerate = true;
                    return prof;
                }
            }
        }
    }

    std::vector<Cell> vertices;
    std::map<std::vector<int>, std::vector<Cell>> plaq_by_parity;
    for (const auto& c : syn.z_cells) {
        if (is_vertex3(c)) vertices.push_back(c);
        else plaq_by_parity[parity3(c)].push_back(c);
    }
    if (vertices.empty()) throw UnrecognizedPattern("no vertex cells to anchor vertical pairs");

    // rung candidates: two in-plane axes displaced by one half step each,
    // canonical sign convention puts the second nonzero component negative
    std::vector<Cell> candidates;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int sa : {+1, -1}) {
                Cell d(4, 0);
                d[static_cast<std::size_t>(a)] = sa;
                d[static_cast<std::size_t>(b)] = -1;
                candidates.push_back(d);
            }

    std::set<Cell> cellset(syn.z_cells.begin(), syn.z_cells.end());
    Cell rung;
    std::vector<std::pair<Cell, Cell>> pairs;   // (vertex, plaquette)
    for (const auto& d : candidates) {
        std::vector<std::pair<Cell, Cell>> trial;
        bool ok = true;
        for (const auto& v : vertices) {
            int found = 0;
            Cell partner;
            for (int sign : {+1, -1}) {
                Cell p = v;
                for (std::size_t i = 0; i < 4; ++i) p[i] += sign * d[i];
                p = canonicalize(std::move(p), model.shape);
                if (cellset.count(p) && !is_vertex3(p)) {
                    ++found;
                    partner = p;
                }
            }
            if (found != 1) { ok = false; break; }
            trial.emplace_back(v, partner);
        }
        if (ok) {
            // partners must all be distinct plaquettes of one type
            std::set<Cell> used;
            std::vector<int> par;
            for (const auto& [v, p] : trial) {
                if (!used.insert(p).second) { ok = false; break; }
                if (par.empty()) par = parity3(p);
                else if (par != parity3(p)) { ok = false; break; }
            }
        }
        if (ok) {
            rung = d;
            pairs = std::move(trial);
            break;
        }
    }
    if (pairs.empty()) throw UnrecognizedPattern("no consistent vertical pairing");
    prof.rung = rung;

    // vertical lines run along the axis the rung leaves untouched
    int perp = -1;
    for (int i = 0; i < 3; ++i)
        if (rung[static_cast<std::size_t>(i)] == 0) perp = i;
    auto perp_idx = static_cast<std::size_t>(perp);

    std::set<Cell> paired;
    for (const auto& [v, p] : pairs) {
        paired.insert(v);
        paired.insert(p);
    }
    std::vector<Cell> diagonal_cells;
    for (const auto& c : syn.z_cells)
        if (!paired.count(c)) diagonal_cells.push_back(c);
    for (const auto& c : diagonal_cells) {
        if (is_vertex3(c)) throw UnrecognizedPattern("unpaired vertex cell");
        if (parity3(c)[perp_idx] != 1)
            throw UnrecognizedPattern("diagonal cell does not extend along the free axis");
    }

    // vertical segments: group pairs by everything except the free axis,
    // then count maximal runs of consecutive unit steps
    std::map<std::vector<int>, std::vector<int>> rails;
    for (const auto& [v, p] : pairs) {
        std::vector<int> key;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != perp_idx) key.push_back(v[i]);
        rails[key].push_back(v[perp_idx]);
    }
    for (auto& [key, zs] : rails) {
        std::sort(zs.begin(), zs.end());
        std::size_t run = 1;
        for (std::size_t i = 1; i <= zs.size(); ++i) {
            if (i < zs.size() && zs[i] == zs[i - 1] + 2) {
                ++run;
                continue;
            }
            prof.vertical_segments += 1;
            prof.vertical_pairs.push_back(run);
            run = 1;
        }
    }

    // diagonal segments: constant free-axis coordinate, consecutive cells
    // one half step apart in both in-plane axes
    std::map<int, std::vector<Cell>> by_level;
    for (const auto& c : diagonal_cells) by_level[c[perp_idx]].push_back(c);
    std::size_t accounted = 0;
    for (auto& [level, cells] : by_level) {
        std::sort(cells.begin(), cells.end());
        std::vector<bool> used(cells.size(), false);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (used[i]) continue;
            // grow a chain from cells[i]
            std::vector<Cell> chain{cells[i]};
            used[i] = true;
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t j = 0; j < cells.size(); ++j) {
                    if (used[j]) continue;
                    Cell d1 = cell_delta(chain.back(), cells[j], model.shape);
                    Cell d2 = cell_delta(cells[j], chain.front(), model.shape);
                    auto half_step = [&](const Cell& d) {
                        int nz = 0;
                        bool ok = true;
                        for (std::size_t t = 0; t < 4; ++t) {
                            if (t == perp_idx || t == 3) {
                                if (d[t] != 0) ok = false;
                            } else if (d[t] != 0) {
                                ++nz;
                                if (std::abs(d[t]) != 1) ok = false;
                            }
                        }
                        return ok && nz == 2;
                    };
                    if (half_step(d1)) {
                        chain.push_back(cells[j]);
                        used[j] = true;
                        grew = true;
                    } else if (half_step(d2)) {
                        chain.insert(chain.begin(), cells[j]);
                        used[j] = true;
                        grew = true;
                    }
                }
            }
            prof.diagonal_segments += 1;
            prof.diagonal_cells.push_back(chain.size());
            accounted += chain.size();
        }
    }
    if (accounted != diagonal_cells.size())
        throw UnrecognizedPattern("diagonal cells did not decompose into chains");
    return prof;
}

ChaironReport chairon_residual(const OrthoplexModel& model, const MembraneSpec& spec_a,
                               const MembraneSpec& spec_b) {
    PlaneFrame fa = plane_frame(spec_a.plane);
    PlaneFrame fb = plane_frame(spec_b.plane);
    if (fa.alpha != fb.alpha || fa.beta != fb.beta || fa.sign == fb.sign)
        throw SpecsDoNotShareEdge("chairon needs the two conjugate diagonal planes");

    PauliOp op_a = membrane_operator(model, spec_a);
    PauliOp op_b = membrane_operator(model, spec_b);
    Syndrome syn_a = syndrome(model, op_a);
    Syndrome syn_b = syndrome(model, op_b);

    SegmentProfile prof_a = segment_profile(model, syn_a);
    SegmentProfile prof_b = segment_profile(model, syn_b);
    ChaironReport rep;
    rep.displacement_a = prof_a.rung;
    rep.displacement_b = prof_b.rung;
    rep.displacements_differ = prof_a.rung != prof_b.rung;

    // shared vertical edge: a vertex rail present in both syndromes
    std::set<Cell> cells_a(syn_a.z_cells.begin(), syn_a.z_cells.end());
    std::vector<Cell> shared_rail;
    for (const auto& c : syn_b.z_cells)
        if (is_vertex3(c) && cells_a.count(c)) shared_rail.push_back(c);
    if (shared_rail.empty())
        throw SpecsDoNotShareEdge("membranes do not share a vertical edge line");

    PauliOp combined = op_a;
    combined.xor_assign(op_b);
    Syndrome syn = syndrome(model, combined);

    // residual = surviving cells within one half step of the shared rail
    for (const auto& c : syn.z_cells) {
        for (const auto& r : shared_rail) {
            Cell d = cell_delta(r, c, model.shape);
            int linf = 0;
            for (std::size_t i = 0; i < 3; ++i) linf = std::max(linf, std::abs(d[i]));
            if (linf <= 1 && d[3] == 0) {
                rep.residual.push_back(c);
                break;
            }
        }
    }
    rep.residual_nonempty = !rep.residual.empty();
    return rep;
}

SpaceDiagonalVerdict space_diagonal_check(const OrthoplexModel& model,
                                          const MembraneSpec& spec_a,
                                          const MembraneSpec& spec_b) {
    if (!spec_a.triangle || !spec_b.triangle)
        throw SpecOutOfRange("space-diagonal check needs triangle membranes");

    // the exposed boundary leaves exactly one violated term between
    // consecutive layers; those odd-height cells trace the space diagonal
    auto extract_direction = [&](const MembraneSpec& spec) {
        Syndrome syn = syndrome(model, membrane_operator(model, spec));
        PlaneFrame f = plane_frame(spec.plane);
        auto perp = static_cast<std::size_t>(f.perp);
        std::map<int, std::vector<Cell>> by_level;
        int w = spec.anchor[3];
        for (const auto& c : syn.z_cells) {
            if (c[3] != w) continue;
            Cell d = cell_delta(spec.anchor, c, model.shape);
            if (d[perp] > 0 && (d[perp] & 1)) by_level[d[perp]].push_back(c);
        }
        if (by_level.size() < 2)
            throw UnrecognizedPattern("triangle too small to carry a space diagonal");
        auto it = by_level.begin();
        if (it->second.size() != 1 || std::next(it)->second.size() != 1)
            throw UnrecognizedPattern("space diagonal is not a single chain");
        Cell first = it->second.front();
        Cell second = std::next(it)->second.front();
        return cell_delta(first, second, model.shape);
    };

    SpaceDiagonalVerdict v;
    v.direction_a = extract_direction(spec_a);
    v.direction_b = extract_direction(spec_b);
    v.directions_differ = v.direction_a != v.direction_b;
    // parallel segments of different direction share at most one point
    v.no_finite_overlap = v.directions_differ;
    return v;
}

MoveResult move_lineon(const OrthoplexModel& model, const Cell& excitation_cell, int direction) {
    Cell c = canonicalize(excitation_cell, model.shape);
    bool is_z = model.z_index.count(c) > 0;
    bool is_x = model.x_index.count(c) > 0;
    if (!is_z && !is_x) throw InvalidCell("excitation cell is not a stabilizer cell");
    int axis = std::abs(direction) - 1;
    if (direction == 0 || axis >= model.shape.p()) throw InvalidCell("bad direction");

    Cell q = c;
    q[static_cast<std::size_t>(axis)] += direction > 0 ? 1 : -1;
    q = canonicalize(std::move(q), model.shape);
    auto it = model.qubit_index.find(q);
    if (it == model.qubit_index.end()) throw InvalidCell("no qubit in that direction");

    MoveResult res;
    res.delta = is_z ? pauli_x(model, q) : pauli_z(model, q);
    res.syndrome_size_before = 1;

    // flips of the single-qubit operator within the violated family
    std::set<Cell> after{c};
    const BitMatrix& h = is_z ? model.code.hz : model.code.hx;
    const auto& cells = is_z ? model.z_cells : model.x_cells;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        if (!h.get(r, it->second)) continue;
        if (after.count(cells[r])) after.erase(cells[r]);
        else after.insert(cells[r]);
    }
    res.syndrome_size_after = after.size();

    Cell translated = c;
    translated[static_cast<std::size_t>(axis)] += direction > 0 ? 2 : -2;
    translated = canonicalize(std::move(translated), model.shape);
    res.clean = after.size() == 1 && after.count(translated) > 0;
    return res;
}

PauliOp move_planon(const OrthoplexModel& model, const Cell& dipole_anchor) {
    if (model.shape.p() != 3) throw InvalidCell("planon moves are defined on the 3d model");
    Cell v = canonicalize(dipole_anchor, model.shape);
    if (cell_dimension(v) != 0) throw InvalidCell("dipole anchor must be a vertex");
    Cell q = v;
    q[0] += 1;
    return pauli_x(model, q);
}

FragmentResult fragment_loop(const OrthoplexModel& model, const MembraneSpec& spec,
                             const std::map<Cell, int>& offsets) {
    if (model.shape.p() != 4) throw SpecOutOfRange("fragmentation lives in 4d models");
    int lw = model.shape.sizes[3];

    FragmentResult out;
    out.op = membrane_operator(model, spec);
    Syndrome base = syndrome(model, out.op);
    std::set<Cell> loop_cells(base.z_cells.begin(), base.z_cells.end());

    for (const auto& [cell, shift] : offsets) {
        Cell c = canonicalize(cell, model.shape);
        if (!loop_cells.count(c)) throw InvalidCell("offset cell is not part of the loop syndrome");
        if (shift < 0 || shift >= lw) throw OffsetOutOfRange("w offset outside [0, L_w)");
        for (int j = 0; j < shift; ++j) {
            Cell q = c;
            q[3] += 2 * j + 1;
            out.op.x_support.flip(qubit_index_checked(model, q));
        }
    }
    out.syn = syndrome(model, out.op);
    return out;
}

namespace {

// Displacement patterns that make two projected excitation cells
// consecutive along a loop strand. Diagonal segments and rung partners
// advance by half steps in two axes, rails and straight segments by a
// full step in one axis. Space-diagonal neighbors always share a rung
// partner at one of these displacements, so no longer pattern is needed.
constexpr int HALF_STEP_PAIR[3] = {0, 1, 1};
constexpr int FULL_STEP[3] = {0, 0, 2};

bool pattern_adjacent(const Cell& d) {
    int abs_sorted[3] = {std::abs(d[0]), std::abs(d[1]), std::abs(d[2])};
    std::sort(abs_sorted, abs_sorted + 3);
    return std::equal(abs_sorted, abs_sorted + 3, HALF_STEP_PAIR) ||
           std::equal(abs_sorted, abs_sorted + 3, FULL_STEP);
}

} // namespace

TopologyReport project_and_classify(const OrthoplexModel& model, const Syndrome& syn,
                                    int drop_axis) {
    if (drop_axis < 0 || drop_axis >= model.shape.p())
        throw InvalidCell("projection axis outside the model");

    LatticeShape proj_shape;
    for (int i = 0; i < model.shape.p(); ++i) {
        if (i == drop_axis) continue;
        proj_shape.sizes.push_back(model.shape.sizes[static_cast<std::size_t>(i)]);
        proj_shape.periodic.push_back(model.shape.periodic[static_cast<std::size_t>(i)]);
    }

    std::set<Cell> points;
    auto project = [&](const Cell& c) {
        Cell p;
        for (int i = 0; i < model.shape.p(); ++i)
            if (i != drop_axis) p.push_back(c[static_cast<std::size_t>(i)]);
        return p;
    };
    for (const auto& c : syn.z_cells) points.insert(project(c));
    for (const auto& c : syn.x_cells) points.insert(project(c));

    std::vector<Cell> nodes(points.begin(), points.end());
    std::size_t m = nodes.size();
    if (m == 0) {
        TopologyReport empty;
        empty.all_degree_two = true;
        return empty;
    }

    auto delta = [&](const Cell& a, const Cell& b) {
        Cell d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (proj_shape.periodic[i])
                d[i] = torus_delta(a[i], b[i], 2 * proj_shape.sizes[i]);
            else
                d[i] = b[i] - a[i];
        }
        return d;
    };

    // union-find over raw adjacency, then rung merging inside components
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pattern_adjacent(delta(nodes[i], nodes[j]))) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                parent[find(i)] = find(j);
            }

    // fuse each vertex with its rung partner so a double line is one strand
    auto vertex_like = [&](const Cell& c) {
        for (int x : c)
            if (x & 1) return false;
        return true;
    };
    std::vector<std::size_t> fused(m);
    for (std::size_t i = 0; i < m; ++i) fused[i] = i;

    std::map<std::size_t, std::vector<std::size_t>> comp_vertices;
    for (std::size_t i = 0; i < m; ++i)
        if (vertex_like(nodes[i])) comp_vertices[find(i)].push_back(i);

    std::size_t merged = 0;
    for (const auto& [root, verts] : comp_vertices) {
        // candidate rungs: a common half-step displacement carrying every
        // vertex to a unique non-vertex partner in the same component; the
        // pair orientation may flip between the two rails of a loop
        std::vector<Cell> candidates;
        for (std::size_t a = 0; a < nodes[0].size(); ++a)
            for (std::size_t b = a + 1; b < nodes[0].size(); ++b)
                for (int sa : {+1, -1}) {
                    Cell d(nodes[0].size(), 0);
                    d[a] = sa;
                    d[b] = -1;
                    candidates.push_back(d);
                }
        for (const auto& d : candidates) {
            std::vector<std::pair<std::size_t, std::size_t>> trial;
            bool ok = true;
            std::set<std::size_t> used;
            for (std::size_t vi : verts) {
                int found = 0;
                std::size_t partner = 0;
                for (int sign : {+1, -1}) {
                    Cell target = nodes[vi];
                    for (std::size_t t = 0; t < target.size(); ++t) target[t] += sign * d[t];
                    target = canonicalize(std::move(target), proj_shape);
                    if (!points.count(target)) continue;
                    std::size_t pi = static_cast<std::size_t>(
                        std::lower_bound(nodes.begin(), nodes.end(), target) - nodes.begin());
                    if (vertex_like(nodes[pi]) || find(pi) != root) continue;
                    ++found;
                    partner = pi;
                }
                if (found != 1 || !used.insert(partner).second) { ok = false; break; }
                trial.emplace_back(vi, partner);
            }
            if (ok && !trial.empty()) {
                for (auto [vi, pi] : trial) fused[pi] = vi;
                merged += trial.size();
                break;
            }
        }
    }

    // rebuild adjacency over fused nodes
    std::map<std::size_t, std::set<std::size_t>> gadj;
    std::set<std::size_t> gnodes;
    for (std::size_t i = 0; i < m; ++i) gnodes.insert(fused[i]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : adj[i]) {
            if (fused[i] == fused[j]) continue;
            gadj[fused[i]].insert(fused[j]);
            gadj[fused[j]].insert(fused[i]);
        }

    TopologyReport rep;
    rep.nodes = gnodes.size();
    rep.merged_pairs = merged;

    std::map<std::size_t, std::size_t> comp_of;
    int comps = 0;
    for (std::size_t g : gnodes) {
        std::size_t root = find(g);
        if (!comp_of.count(root)) comp_of[root] = comps++;
    }
    rep.components = comps;

    rep.all_degree_two = true;
    for (std::size_t g : gnodes) {
        std::size_t deg = gadj.count(g) ? gadj[g].size() : 0;
        if (rep.degree_histogram.size() <= deg)
            rep.degree_histogram.resize(deg + 1, 0);
        rep.degree_histogram[deg] += 1;
        if (deg != 2) rep.all_degree_two = false;
    }
    return rep;
}

AlignmentReport alignment_cancellation(const OrthoplexModel& model, const MembraneSpec& spec,
                                       std::pair<int, int> plane_offsets) {
    PlaneFrame f = plane_frame(spec.plane);
    auto build_at = [&](int offset) {
        PauliOp op(model.n());
        for (Cell c : membrane_qubits(model, spec)) {
            c[static_cast<std::size_t>(f.alpha)] += offset;
            c[static_cast<std::size_t>(f.beta)] += f.sign < 0 ? offset : -offset;
            c = canonicalize(std::move(c), model.shape);
            op.x_support.flip(qubit_index_checked(model, c));
        }
        return op;
    };
    PauliOp op1 = build_at(plane_offsets.first);
    PauliOp op2 = build_at(plane_offsets.second);

    AlignmentReport rep;
    rep.card_first = syndrome(model, op1).size();
    rep.card_second = syndrome(model, op2).size();
    PauliOp both = op1;
    both.xor_assign(op2);
    rep.card_combined = syndrome(model, both).size();
    rep.strictly_lower = rep.card_combined < rep.card_first + rep.card_second;
    return rep;
}

} // namespace oplx
