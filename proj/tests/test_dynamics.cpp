#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplx/analysis.hpp"
#include "oplx/dynamics.hpp"
#include "oplx/errors.hpp"

#include <random>
#include <set>

using namespace oplx;

namespace {

std::set<Cell> cell_set(const std::vector<Cell>& cells) {
    return std::set<Cell>(cells.begin(), cells.end());
}

PauliOp random_op(const OrthoplexModel& model, std::mt19937& rng) {
    PauliOp op(model.n());
    std::bernoulli_distribution bit(0.1);
    for (std::size_t i = 0; i < model.n(); ++i) {
        if (bit(rng)) op.x_support.flip(i);
        if (bit(rng)) op.z_support.flip(i);
    }
    return op;
}

} // namespace

TEST_CASE("identity operator has an empty syndrome") {
    auto model = build_model(LatticeShape::cubic({2, 2, 2}));
    CHECK(syndrome(model, PauliOp(model.n())).size() == 0);
}

TEST_CASE("single X on an x-link flips six B terms in a 4d hyperplane") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 2}));
    Syndrome s = syndrome(model, pauli_x(model, {1, 0, 0, 0}));
    CHECK(s.violated_x.empty());
    std::set<Cell> want{{0, 0, 0, 0}, {2, 0, 0, 0}, {1, 1, 0, 0},
                        {1, 7, 0, 0}, {1, 0, 1, 0}, {1, 0, 7, 0}};
    CHECK(cell_set(s.z_cells) == want);
}

TEST_CASE("single X on a 3d z-link flips the two endpoint vertices") {
    auto model = build_model(LatticeShape::cubic({3, 3, 3}));
    Syndrome s = syndrome(model, pauli_x(model, {0, 0, 1}));
    std::set<Cell> want{{0, 0, 0}, {0, 0, 2}};
    CHECK(cell_set(s.z_cells) == want);
    CHECK(s.violated_x.empty());
}

TEST_CASE("syndrome is linear") {
    auto model = build_model(LatticeShape::cubic({2, 2, 2, 2}));
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        PauliOp a = random_op(model, rng), b = random_op(model, rng);
        PauliOp ab = a;
        ab.xor_assign(b);
        auto sa = syndrome(model, a), sb = syndrome(model, b), sab = syndrome(model, ab);
        std::set<std::size_t> za(sa.violated_z.begin(), sa.violated_z.end());
        std::set<std::size_t> zb(sb.violated_z.begin(), sb.violated_z.end());
        std::set<std::size_t> want;
        for (auto r : za)
            if (!zb.count(r)) want.insert(r);
        for (auto r : zb)
            if (!za.count(r)) want.insert(r);
        CHECK(std::set<std::size_t>(sab.violated_z.begin(), sab.violated_z.end()) == want);
    }
}

TEST_CASE("logical operators have empty syndromes") {
    auto model = build_model(LatticeShape::cubic({2, 2, 2}));
    LogicalSet logs = logical_basis(model.code);
    for (const auto& l : logs.x_logicals) {
        PauliOp op(model.n());
        op.x_support = l;
        CHECK(syndrome(model, op).size() == 0);
    }
    for (const auto& l : logs.z_logicals) {
        PauliOp op(model.n());
        op.z_support = l;
        CHECK(syndrome(model, op).size() == 0);
    }
}

TEST_CASE("degenerate membranes of different planes are indistinguishable") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 2}));
    MembraneSpec a, b;
    a.plane = DiagPlane::XplusY;
    b.plane = DiagPlane::XplusZ;
    a.anchor = b.anchor = {0, 0, 0, 0};
    PauliOp pa = membrane_operator(model, a);
    PauliOp pb = membrane_operator(model, b);
    CHECK(pa.x_support == pb.x_support);
    CHECK(cell_set(syndrome(model, pa).z_cells) == cell_set(syndrome(model, pb).z_cells));

    // one-step extensions grow along different axes and become distinct
    a.diag_steps = b.diag_steps = 1;
    CHECK(membrane_operator(model, a).x_support != membrane_operator(model, b).x_support);
}

TEST_CASE("degenerate membrane syndrome equals the single-qubit pattern") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusZ;
    spec.anchor = {2, 2, 2, 0};
    Syndrome s = syndrome(model, membrane_operator(model, spec));
    Syndrome direct = syndrome(model, pauli_x(model, {3, 2, 2, 0}));
    CHECK(cell_set(s.z_cells) == cell_set(direct.z_cells));
    CHECK(s.z_cells.size() == 6);
    CHECK(segment_profile(model, s).degenerate);
}

TEST_CASE("octahedron composite flips six B terms on a larger octahedron") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 2}));
    Cell center{2, 2, 2, 0};
    Syndrome s = syndrome(model, octahedron_operator(model, center, 1));
    std::set<Cell> want;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int d : {+2, -2}) {
            Cell c = center;
            c[axis] += d;
            want.insert(canonicalize(std::move(c), model.shape));
        }
    CHECK(cell_set(s.z_cells) == want);
}

TEST_CASE("iterated octahedron composites double the radius") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    Cell center{4, 4, 4, 0};
    Syndrome s = syndrome(model, octahedron_operator(model, center, 2));
    std::set<Cell> want;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int d : {+4, -4}) {
            Cell c = center;
            c[axis] += d;
            want.insert(canonicalize(std::move(c), model.shape));
        }
    CHECK(cell_set(s.z_cells) == want);

    // the six leftover excitations are isolated and slide freely along w
    for (const auto& c : s.z_cells) {
        auto r = move_lineon(model, c, +4);
        CHECK(r.clean);
    }
}

TEST_CASE("rectangle membrane profile at (2,3)") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {4, 4, 2, 0};
    spec.diag_steps = 2;
    spec.perp_extent = 3;
    Syndrome s = syndrome(model, membrane_operator(model, spec));
    SegmentProfile prof = segment_profile(model, s);
    CHECK_FALSE(prof.degenerate);
    CHECK(prof.diagonal_segments == 2);
    CHECK(prof.vertical_segments == 2);
    for (auto c : prof.diagonal_cells) CHECK(c == 5);
    for (auto p : prof.vertical_pairs) CHECK(p == 4);
    CHECK(prof.rung == Cell{-1, -1, 0, 0});
    CHECK(prof.vertical_cells_per_unit == 2);
    CHECK(prof.diagonal_cells_per_step == 1);
    CHECK(prof.ratio_squared_num == 2);
    CHECK(prof.ratio_squared_den == 1);
}

TEST_CASE("rectangle membrane in the x+z plane has the same structure") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusZ;
    spec.anchor = {4, 2, 4, 0};
    spec.diag_steps = 2;
    spec.perp_extent = 3;
    SegmentProfile prof = segment_profile(model, syndrome(model, membrane_operator(model, spec)));
    CHECK(prof.diagonal_segments == 2);
    CHECK(prof.vertical_segments == 2);
    CHECK(prof.rung == Cell{-1, 0, -1, 0});
    for (auto c : prof.diagonal_cells) CHECK(c == 5);
    for (auto p : prof.vertical_pairs) CHECK(p == 4);
}

TEST_CASE("loop of four segments for the (2,2) rectangle") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {4, 4, 2, 0};
    spec.diag_steps = 2;
    spec.perp_extent = 2;
    SegmentProfile prof = segment_profile(model, syndrome(model, membrane_operator(model, spec)));
    CHECK(prof.diagonal_segments + prof.vertical_segments == 4);
}

TEST_CASE("chairon residual at the crease") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    MembraneSpec a;
    a.plane = DiagPlane::XplusY;
    a.anchor = {4, 4, 2, 0};
    a.diag_steps = 1;
    a.perp_extent = 1;
    MembraneSpec b = a;
    b.plane = DiagPlane::XminusY;
    b.anchor = {6, 4, 2, 0};

    ChaironReport rep = chairon_residual(model, a, b);
    CHECK(rep.residual_nonempty);
    CHECK(rep.displacement_a == Cell{-1, -1, 0, 0});
    CHECK(rep.displacement_b == Cell{1, -1, 0, 0});
    CHECK(rep.displacements_differ);

    // a far-away partner shares no edge
    MembraneSpec far = b;
    far.anchor = {0, 0, 8, 0};
    CHECK_THROWS_AS(chairon_residual(model, a, far), SpecsDoNotShareEdge);
    CHECK_THROWS_AS(chairon_residual(model, a, a), SpecsDoNotShareEdge);
}

TEST_CASE("space diagonal directions by plane orientation") {
    auto model = build_model(LatticeShape::cubic({8, 8, 8, 2}));
    MembraneSpec ta;
    ta.plane = DiagPlane::XplusY;
    ta.anchor = {10, 2, 2, 0};
    ta.diag_steps = 2;
    ta.triangle = true;
    MembraneSpec tb = ta, tc = ta;
    tb.plane = DiagPlane::XplusZ;
    tb.anchor = {10, 2, 2, 0};
    tc.plane = DiagPlane::YplusZ;
    tc.anchor = {2, 10, 2, 0};

    auto v = space_diagonal_check(model, ta, tb);
    CHECK(v.direction_a == Cell{-1, 1, 2, 0});
    CHECK(v.direction_b == Cell{-1, 2, 1, 0});
    CHECK(v.directions_differ);
    CHECK(v.no_finite_overlap);

    auto v2 = space_diagonal_check(model, ta, tc);
    CHECK(v2.direction_b == Cell{2, -1, 1, 0});
    CHECK(v2.no_finite_overlap);

    auto same = space_diagonal_check(model, ta, ta);
    CHECK_FALSE(same.directions_differ);
    CHECK_FALSE(same.no_finite_overlap);
}

TEST_CASE("lineon mobility dichotomy in 3d") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4}));
    Cell vertex{2, 2, 2};
    auto up = move_lineon(model, vertex, +3);
    CHECK(up.clean);
    CHECK(up.syndrome_size_after == 1);
    auto sideways = move_lineon(model, vertex, +1);
    CHECK_FALSE(sideways.clean);
    CHECK(sideways.syndrome_size_after == 3);

    Cell plaq{1, 1, 2};
    CHECK(move_lineon(model, plaq, -3).clean);
    CHECK(move_lineon(model, plaq, +2).syndrome_size_after == 3);
}

TEST_CASE("4d lineons are free along w only") {
    auto model = build_model(LatticeShape::cubic({2, 2, 2, 3}));
    for (const auto& c : {Cell{0, 0, 0, 0}, Cell{1, 1, 0, 0}}) {
        CHECK(move_lineon(model, c, +4).clean);
        CHECK(move_lineon(model, c, -4).clean);
        for (int dir : {+1, +2, +3}) CHECK_FALSE(move_lineon(model, c, dir).clean);
    }
}

TEST_CASE("planon mover translates the dipole along the diagonal") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4}));
    Cell v{2, 2, 2};
    Syndrome flips = syndrome(model, move_planon(model, v));
    std::set<Cell> want{{2, 2, 2}, {4, 2, 2}, {3, 3, 2}, {3, 1, 2}};
    CHECK(cell_set(flips.z_cells) == want);
    // dipole {v, v+(1,1,0)} maps to {v+(2,0,0), v+(3,-1,0)}: sizes stay two
    std::set<Cell> dipole{{2, 2, 2}, {3, 3, 2}};
    std::set<Cell> after;
    for (const auto& c : want) {
        if (dipole.count(c)) dipole.erase(c);
        else after.insert(c);
    }
    CHECK(after == std::set<Cell>{{4, 2, 2}, {3, 1, 2}});
}

TEST_CASE("planon orbit closes after two lcm steps") {
    auto model = build_model(LatticeShape::cubic({2, 3, 2}));
    PauliOp acc(model.n());
    Cell cur{0, 0, 0};
    int steps = 0;
    while (steps < 100) {
        acc.xor_assign(move_planon(model, cur));
        Cell v2 = canonicalize({cur[0] + 2, cur[1], cur[2]}, model.shape);
        acc.xor_assign(pauli_x(model, canonicalize({v2[0], v2[1] - 1, v2[2]}, model.shape)));
        steps += 2;
        cur = canonicalize({cur[0] + 2, cur[1] - 2, cur[2]}, model.shape);
        if (syndrome(model, acc).size() == 0) break;
        CHECK(syndrome(model, acc).size() == 4);   // created pair plus moving pair
    }
    CHECK(steps == 2 * 6);
}

TEST_CASE("wrong-step planon move grows the syndrome") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4}));
    // dipole at {v, v+(1,1,0)}; an X two half-steps away along y touches
    // neither constituent and adds four fresh excitations
    PauliOp wrong = pauli_x(model, {3, 4, 2});
    Syndrome flips = syndrome(model, wrong);
    std::set<Cell> dipole{{2, 2, 2}, {3, 3, 2}};
    std::set<Cell> result = dipole;
    for (const auto& c : flips.z_cells) {
        if (result.count(c)) result.erase(c);
        else result.insert(c);
    }
    CHECK(result.size() == 4);
}

TEST_CASE("fragmentation preserves cardinality and projection") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 4}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {4, 2, 2, 0};
    spec.diag_steps = 2;
    spec.perp_extent = 1;
    Syndrome base = syndrome(model, membrane_operator(model, spec));

    SUBCASE("zero offsets reproduce the loop") {
        auto fr = fragment_loop(model, spec, {});
        CHECK(cell_set(fr.syn.z_cells) == cell_set(base.z_cells));
    }
    SUBCASE("single offset displaces exactly one cell") {
        std::map<Cell, int> offsets{{base.z_cells.front(), 1}};
        auto fr = fragment_loop(model, spec, offsets);
        CHECK(fr.syn.size() == base.size());
        std::set<Cell> got = cell_set(fr.syn.z_cells);
        std::set<Cell> want = cell_set(base.z_cells);
        Cell moved = base.z_cells.front();
        want.erase(moved);
        moved[3] += 2;
        want.insert(canonicalize(std::move(moved), model.shape));
        CHECK(got == want);
    }
    SUBCASE("random offsets keep the projected loop") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> off(0, 3);
        for (int t = 0; t < 25; ++t) {
            std::map<Cell, int> offsets;
            for (const auto& c : base.z_cells) offsets[c] = off(rng);
            auto fr = fragment_loop(model, spec, offsets);
            CHECK(fr.syn.size() == base.size());
            std::set<Cell> projected, original;
            for (auto c : fr.syn.z_cells) projected.insert({c[0], c[1], c[2]});
            for (auto c : base.z_cells) original.insert({c[0], c[1], c[2]});
            CHECK(projected == original);
            auto rep = project_and_classify(model, fr.syn, 3);
            CHECK(rep.components == 1);
            CHECK(rep.all_degree_two);
        }
    }
    SUBCASE("offset bounds") {
        CHECK_THROWS_AS(fragment_loop(model, spec, {{base.z_cells.front(), 4}}),
                        OffsetOutOfRange);
        CHECK_THROWS_AS(fragment_loop(model, spec, {{Cell{0, 0, 0, 0}, 1}}), InvalidCell);
    }
}

TEST_CASE("fragmentation works for other plane orientations") {
    auto model = build_model(LatticeShape::cubic({4, 4, 4, 4}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusZ;
    spec.anchor = {4, 2, 2, 0};
    spec.diag_steps = 2;
    spec.perp_extent = 1;
    Syndrome base = syndrome(model, membrane_operator(model, spec));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> off(0, 3);
    for (int t = 0; t < 10; ++t) {
        std::map<Cell, int> offsets;
        for (const auto& c : base.z_cells) offsets[c] = off(rng);
        auto fr = fragment_loop(model, spec, offsets);
        CHECK(fr.syn.size() == base.size());
        auto rep = project_and_classify(model, fr.syn, 3);
        CHECK(rep.components == 1);
        CHECK(rep.all_degree_two);
    }
}

TEST_CASE("projection topology of composite syndromes") {
    auto model = build_model(LatticeShape::cubic({6, 6, 4, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {4, 2, 2, 0};
    spec.diag_steps = 1;
    spec.perp_extent = 1;
    PauliOp one = membrane_operator(model, spec);
    Syndrome s1 = syndrome(model, one);
    auto rep1 = project_and_classify(model, s1, 3);
    CHECK(rep1.components == 1);
    CHECK(rep1.all_degree_two);

    // a second congruent loop far away doubles the component count
    MembraneSpec far = spec;
    far.anchor = {10, 8, 2, 0};
    PauliOp two = one;
    two.xor_assign(membrane_operator(model, far));
    auto rep2 = project_and_classify(model, syndrome(model, two), 3);
    CHECK(rep2.components == 2);
    CHECK(rep2.all_degree_two);

    // one isolated excitation is a degree-zero node
    Syndrome lone;
    lone.violated_z.push_back(0);
    lone.z_cells.push_back(model.z_cells[0]);
    auto rep3 = project_and_classify(model, lone, 3);
    CHECK(rep3.components == 1);
    CHECK(rep3.nodes == 1);
    CHECK_FALSE(rep3.all_degree_two);
}

TEST_CASE("aligned loops in adjacent planes cancel boundary terms") {
    auto model = build_model(LatticeShape::cubic({6, 6, 6, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {6, 2, 2, 0};
    spec.diag_steps = 1;
    spec.perp_extent = 1;
    auto near = alignment_cancellation(model, spec, {0, 1});
    CHECK(near.card_first == near.card_second);
    CHECK(near.strictly_lower);
    auto far = alignment_cancellation(model, spec, {0, 3});
    CHECK(far.card_combined == far.card_first + far.card_second);
    CHECK_FALSE(far.strictly_lower);
}

TEST_CASE("iterated stacking keeps cancelling boundary terms") {
    auto model = build_model(LatticeShape::cubic({8, 8, 6, 2}));
    MembraneSpec spec;
    spec.plane = DiagPlane::XplusY;
    spec.anchor = {6, 2, 2, 0};
    spec.diag_steps = 1;
    spec.perp_extent = 1;
    PlaneFrame f = plane_frame(spec.plane);
    std::size_t single = syndrome(model, membrane_operator(model, spec)).size();

    PauliOp acc(model.n());
    std::size_t prev = 0;
    for (int m = 0; m < 4; ++m) {
        for (Cell c : membrane_qubits(model, spec)) {
            c[static_cast<std::size_t>(f.alpha)] += m;
            c[static_cast<std::size_t>(f.beta)] += m;
            c = canonicalize(std::move(c), model.shape);
            acc.x_support.flip(model.qubit_index.at(c));
        }
        std::size_t card = syndrome(model, acc).size();
        if (m > 0) {
            CHECK(card < static_cast<std::size_t>(m + 1) * single);
            CHECK(card - prev < single);   // each added loop costs less than its own boundary
        }
        prev = card;
    }
}

TEST_CASE("membrane guards") {
    auto model3 = build_model(LatticeShape::cubic({3, 3, 3}));
    MembraneSpec spec;
    spec.anchor = {0, 0, 0};
    CHECK_THROWS_AS(membrane_operator(model3, spec), SpecOutOfRange);

    auto model4 = build_model(LatticeShape::cubic({2, 2, 2, 2}));
    MembraneSpec odd;
    odd.anchor = {1, 0, 0, 0};
    CHECK_THROWS_AS(membrane_operator(model4, odd), SpecOutOfRange);
}
