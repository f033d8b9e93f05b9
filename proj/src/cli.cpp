#include "oplx/cli.hpp"

#include "oplx/analysis.hpp"
#include "oplx/defect.hpp"
#include "oplx/dynamics.hpp"
#include "oplx/errors.hpp"
#include "oplx/manifest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace oplx::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int axis_of(const std::string& name) {
    if (name == "x" || name == "0") return 0;
    if (name == "y" || name == "1") return 1;
    if (name == "z" || name == "2") return 2;
    if (name == "w" || name == "3") return 3;
    throw Error("unknown axis: " + name);
}

LatticeShape shape_of(const std::vector<int>& sizes, const std::string& open_axes) {
    std::vector<bool> periodic(sizes.size(), true);
    if (open_axes == "all") {
        periodic.assign(sizes.size(), false);
    } else if (!open_axes.empty()) {
        std::stringstream ss(open_axes);
        std::string item;
        while (std::getline(ss, item, ',')) {
            int a = axis_of(item);
            if (a >= static_cast<int>(sizes.size())) throw Error("open axis outside shape");
            periodic[static_cast<std::size_t>(a)] = false;
        }
    }
    return LatticeShape::mixed(sizes, periodic);
}

CodeManifest build_kind(const std::string& kind, const std::vector<int>& sizes,
                        const std::string& open_axes) {
    LatticeShape shape = shape_of(sizes, open_axes);
    if (kind == "orthoplex3d" || kind == "orthoplex4d" || kind == "orthoplex-pd") {
        if (kind == "orthoplex3d" && shape.p() != 3) throw Error("orthoplex3d needs three sizes");
        if (kind == "orthoplex4d" && shape.p() != 4) throw Error("orthoplex4d needs four sizes");
        return manifest_from_model(kind, build_model(shape));
    }
    if (kind == "toric-hgp") {
        std::vector<ChainComplex> factors;
        for (int i = 0; i < shape.p(); ++i)
            factors.push_back(repetition_complex(shape.sizes[static_cast<std::size_t>(i)],
                                                 shape.periodic[static_cast<std::size_t>(i)]));
        CssCode code = build_css(factors, standard_hgp_partition(shape.p(), 1));
        std::vector<bool> periodic(shape.periodic.begin(), shape.periodic.end());
        return manifest_from_code(kind, shape.sizes, periodic, code);
    }
    throw Error("unknown model kind: " + kind);
}

// rebuild the lattice model named by a manifest and require bitwise
// agreement before running anything on top of it
OrthoplexModel model_of_manifest(const CodeManifest& m) {
    if (m.model_kind != "orthoplex3d" && m.model_kind != "orthoplex4d" &&
        m.model_kind != "orthoplex-pd")
        throw InvalidPartition("this command needs an orthoplex manifest");
    std::vector<bool> periodic(m.periodic.begin(), m.periodic.end());
    OrthoplexModel model = build_model(LatticeShape::mixed(m.sizes, periodic));
    auto rep = compare_codes(model.code, m.code);
    if (!rep.pass) throw InvalidPartition("manifest does not match its own shape rule");
    return model;
}

json cells_to_json(const std::vector<Cell>& cells) {
    json out = json::array();
    for (const auto& c : cells) out.push_back(c);
    return out;
}

MembraneSpec membrane_from_json(const json& j) {
    MembraneSpec spec;
    std::string plane = j.at("plane").get<std::string>();
    if (plane == "x+y") spec.plane = DiagPlane::XplusY;
    else if (plane == "x-y") spec.plane = DiagPlane::XminusY;
    else if (plane == "x+z") spec.plane = DiagPlane::XplusZ;
    else if (plane == "x-z") spec.plane = DiagPlane::XminusZ;
    else if (plane == "y+z") spec.plane = DiagPlane::YplusZ;
    else if (plane == "y-z") spec.plane = DiagPlane::YminusZ;
    else throw Error("unknown membrane plane: " + plane);
    spec.anchor = j.at("anchor").get<Cell>();
    spec.diag_steps = j.value("diag_steps", 0);
    spec.perp_extent = j.value("perp_extent", 0);
    spec.triangle = j.value("triangle", false);
    return spec;
}

int cmd_build(const std::string& model, const std::string& size, const std::string& open_axes,
              const std::string& out) {
    CodeManifest m = build_kind(model, parse_sizes(size), open_axes);
    save_manifest(m, out);
    std::cout << "wrote " << out << " (n=" << m.code.n << ")\n";
    return 0;
}

int cmd_check(const std::string& path) {
    CodeManifest m = load_manifest(path);
    bool css = m.code.css_valid();
    std::cout << "css_product_zero: " << (css ? "pass" : "fail") << "\n";

    bool chain_ok = true;
    if (m.sizes.size() >= 2) {
        std::vector<ChainComplex> factors;
        for (std::size_t i = 0; i < m.sizes.size(); ++i)
            factors.push_back(repetition_complex(m.sizes[i], m.periodic[i]));
        auto rep = validate_complex(tensor_product_all(factors));
        chain_ok = rep.pass;
        std::cout << "chain_condition: " << (chain_ok ? "pass" : "fail") << "\n";
    }

    bool rebuild_ok = true;
    if (m.model_kind != "custom") {
        try {
            if (m.model_kind == "toric-hgp") {
                std::vector<ChainComplex> factors;
                for (std::size_t i = 0; i < m.sizes.size(); ++i)
                    factors.push_back(repetition_complex(m.sizes[i], m.periodic[i]));
                CssCode fresh =
                    build_css(factors, standard_hgp_partition(static_cast<int>(m.sizes.size()), 1));
                rebuild_ok = fresh.hx == m.code.hx && fresh.hz == m.code.hz;
            } else {
                model_of_manifest(m);
            }
        } catch (const Error&) {
            rebuild_ok = false;
        }
        std::cout << "matches_shape_rule: " << (rebuild_ok ? "pass" : "fail") << "\n";
    }
    return (css && chain_ok && rebuild_ok) ? 0 : 3;
}

int cmd_params(const std::string& path) {
    CodeManifest m = load_manifest(path);
    auto [n, k] = code_params(m.code);
    std::cout << n << " " << k << "\n";
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_gsd_scan(const std::string& lx, const std::string& ly, const std::string& lz,
                 const std::string& out) {
    auto [x0, x1] = parse_range(lx);
    auto [y0, y1] = parse_range(ly);
    auto [z0, z1] = parse_range(lz);
    std::vector<LatticeShape> shapes;
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y)
            for (int z = z0; z <= z1; ++z) shapes.push_back(LatticeShape::cubic({x, y, z}));
    std::string csv = gsd_scan_csv(gsd_scan(shapes));
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << csv;
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_logicals(const std::string& path, const std::string& out) {
    CodeManifest m = load_manifest(path);
    LogicalSet logs = logical_basis(m.code);
    bool commute_ok = true;
    for (const auto& v : logs.x_logicals)
        for (std::size_t r = 0; r < m.code.hz.rows(); ++r)
            if (m.code.hz.row(r).dot(v)) commute_ok = false;
    for (const auto& v : logs.z_logicals)
        for (std::size_t r = 0; r < m.code.hx.rows(); ++r)
            if (m.code.hx.row(r).dot(v)) commute_ok = false;
    std::size_t pairing_rank = rank(pairing_matrix(logs));

    json j;
    j["k"] = logs.k();
    auto supports = [](const std::vector<BitVector>& vs) {
        json arr = json::array();
        for (const auto& v : vs) {
            json one = json::array();
            for (std::size_t i : v.ones()) one.push_back(i);
            arr.push_back(std::move(one));
        }
        return arr;
    };
    j["x_logicals"] = supports(logs.x_logicals);
    j["z_logicals"] = supports(logs.z_logicals);
    j["certificates"] = {{"commute_with_stabilizers", commute_ok},
                         {"pairing_rank", pairing_rank},
                         {"pairing_full_rank", pairing_rank == logs.k()}};
    std::string text = j.dump(1);
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        f << text << "\n";
        std::cout << "wrote " << out << "\n";
    }
    return commute_ok ? 0 : 3;
}

int cmd_excite(const std::string& manifest_path, const std::string& script_path,
               const std::string& project, const std::string& out, unsigned seed) {
    CodeManifest m = load_manifest(manifest_path);
    OrthoplexModel model = model_of_manifest(m);

    std::ifstream in(script_path);
    if (!in) throw Error("cannot read " + script_path);
    json script = json::parse(in);

    std::mt19937 rng(seed);
    PauliOp acc(model.n());
    json trace = json::array();
    int step_index = 0;
    for (const auto& step : script.at("steps")) {
        if (step.contains("pauli")) {
            const auto& p = step.at("pauli");
            Cell cell = p.at("cell").get<Cell>();
            std::string axis = p.value("axis", "X");
            acc.xor_assign(axis == "Z" ? pauli_z(model, cell) : pauli_x(model, cell));
        } else if (step.contains("membrane")) {
            acc.xor_assign(membrane_operator(model, membrane_from_json(step.at("membrane"))));
        } else if (step.contains("fragment")) {
            const auto& f = step.at("fragment");
            MembraneSpec spec = membrane_from_json(f.at("membrane"));
            std::map<Cell, int> offsets;
            if (f.contains("offsets") && f.at("offsets").is_array()) {
                for (const auto& pair : f.at("offsets"))
                    offsets[pair.at(0).get<Cell>()] = pair.at(1).get<int>();
            } else {
                Syndrome base = syndrome(model, membrane_operator(model, spec));
                std::uniform_int_distribution<int> off(0, model.shape.sizes.back() - 1);
                for (const auto& c : base.z_cells) offsets[c] = off(rng);
            }
            acc.xor_assign(fragment_loop(model, spec, offsets).op);
        } else if (step.contains("move_lineon")) {
            const auto& mv = step.at("move_lineon");
            auto res = move_lineon(model, mv.at("cell").get<Cell>(), mv.at("direction").get<int>());
            acc.xor_assign(res.delta);
        } else if (step.contains("move_planon")) {
            acc.xor_assign(move_planon(model, step.at("move_planon").at("anchor").get<Cell>()));
        } else {
            throw Error("unknown script step");
        }

        Syndrome syn = syndrome(model, acc);
        json entry;
        entry["step"] = step_index;
        entry["violated_x"] = cells_to_json(syn.x_cells);
        entry["violated_z"] = cells_to_json(syn.z_cells);
        std::cout << "step " << step_index << ": violated_x=" << syn.x_cells.size()
                  << " violated_z=" << syn.z_cells.size();
        if (!project.empty()) {
            auto rep = project_and_classify(model, syn, axis_of(project));
            entry["projection"] = {{"components", rep.components},
                                   {"all_degree_two", rep.all_degree_two},
                                   {"nodes", rep.nodes},
                                   {"merged_pairs", rep.merged_pairs}};
            std::cout << " components: " << rep.components << ", all_degree_two: "
                      << (rep.all_degree_two ? "true" : "false");
        }
        std::cout << "\n";
        trace.push_back(std::move(entry));
        ++step_index;
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << json{{"trace", trace}}.dump(1) << "\n";
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_defect(const std::string& size, const std::string& out) {
    std::vector<int> sizes = parse_sizes(size);
    DefectModel dm = build_dislocation(LatticeShape::cubic(sizes, false));
    auto commutation = check_commutation(dm);
    auto zm = zero_mode_count(dm);

    // braid rectangles placed relative to the puncture of the transport
    // sheet x - y = 0; the ray of removed qubits ends there
    int u0 = dm.plane_sum + dm.line_z;
    auto round4 = [](int v) { return v & ~3; };
    BraidPathSpec once{0, round4(u0 - 6), round4(u0 + 4), 2, dm.line_z + 3, 1};
    BraidPathSpec twice = once;
    twice.winding = 2;
    // a loop entirely above the dislocation line never meets removed qubits
    BraidPathSpec none{0, round4(u0 - 6), round4(u0 - 6) + 8, dm.line_z + 1, dm.line_z + 5, 1};

    json j;
    j["removed_qubits"] = json::array();
    for (const auto& c : dm.removed_cells) j["removed_qubits"].push_back(c);
    j["generator_count"] = dm.generators.size();
    j["zero_modes"] = zm.zero_modes;
    j["k_defect"] = zm.k_defect;
    j["k_base"] = zm.k_base;
    j["commutation_pass"] = commutation.pass;
    auto verdict_json = [](const BraidVerdict& v) {
        return json{{"crossings", v.cut_crossings},
                    {"pure_x_leaves_residual", v.pure_x_leaves_residual},
                    {"mixed_transport_clean", v.mixed_transport_clean},
                    {"start_type", v.start_type},
                    {"end_type", v.end_type},
                    {"types_swapped", v.types_swapped},
                    {"types_restored", v.types_restored}};
    };
    j["braid"] = {{"winding1", verdict_json(braid_planon(dm, once))},
                  {"winding2", verdict_json(braid_planon(dm, twice))},
                  {"winding0", verdict_json(braid_planon(dm, none))}};

    std::cout << "generators=" << dm.generators.size() << " commute="
              << (commutation.pass ? "true" : "false") << " zero_modes=" << zm.zero_modes << "\n";
    std::cout << "winding1 swapped=" << j["braid"]["winding1"]["types_swapped"]
              << " winding2 restored=" << j["braid"]["winding2"]["types_restored"]
              << " winding0 swapped=" << j["braid"]["winding0"]["types_swapped"] << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << j.dump(1) << "\n";
        std::cout << "wrote " << out << "\n";
    }
    return commutation.pass ? 0 : 3;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"orthoplex-code construction and verification"};
    app.require_subcommand(1);

    std::string model = "orthoplex3d", size, open_axes, out, manifest, script, project;
    std::string lx = "2..4", ly = "2..4", lz = "2";
    unsigned seed = 0;

    auto* build = app.add_subcommand("build", "construct a code and write its manifest");
    build->add_option("--model", model, "orthoplex3d|orthoplex4d|orthoplex-pd|toric-hgp")
        ->check(CLI::IsMember({"orthoplex3d", "orthoplex4d", "orthoplex-pd", "toric-hgp"}));
    build->add_option("--size", size, "comma-separated extents")->required();
    build->add_option("--open", open_axes, "open axes (names, or 'all')");
    build->add_option("--out", out, "manifest path")->required();

    auto* check = app.add_subcommand("check", "validate a manifest");
    check->add_option("manifest", manifest)->required();

    auto* params = app.add_subcommand("params", "print n and k");
    params->add_option("manifest", manifest)->required();

    auto* scan = app.add_subcommand("gsd-scan", "scan the degeneracy over a 3d grid");
    scan->add_option("--lx", lx);
    scan->add_option("--ly", ly);
    scan->add_option("--lz", lz);
    scan->add_option("--out", out, "csv path (stdout when absent)");

    auto* logicals = app.add_subcommand("logicals", "extract logical representatives");
    logicals->add_option("manifest", manifest)->required();
    logicals->add_option("--out", out);

    auto* excite = app.add_subcommand("excite", "run an operator script");
    excite->add_option("manifest", manifest)->required();
    excite->add_option("--script", script)->required();
    excite->add_option("--project", project, "projection axis for topology reports");
    excite->add_option("--out", out, "trace path");
    excite->add_option("--seed", seed, "seed for random fragment offsets");

    auto* defect = app.add_subcommand("defect", "build the dislocation and braid planons");
    defect->add_option("--size", size)->required();
    defect->add_option("--out", out, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(model, size, open_axes, out);
        if (check->parsed()) return cmd_check(manifest);
        if (params->parsed()) return cmd_params(manifest);
        if (scan->parsed()) return cmd_gsd_scan(lx, ly, lz, out);
        if (logicals->parsed()) return cmd_logicals(manifest, out);
        if (excite->parsed()) return cmd_excite(manifest, script, project, out, seed);
        if (defect->parsed()) return cmd_defect(size, out);
    } catch (const InvalidPartition& e) {
        std::cerr << "{\"error\":\"validity\",\"detail\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const ShapeTooSmall& e) {
        std::cerr << "{\"error\":\"validity\",\"detail\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const InvalidDimension& e) {
        std::cerr << "{\"error\":\"validity\",\"detail\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const InvalidSize& e) {
        std::cerr << "{\"error\":\"validity\",\"detail\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "{\"error\":\"runtime\",\"detail\":\"" << e.what() << "\"}\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"runtime\",\"detail\":\"" << e.what() << "\"}\n";
        return 4;
    }
    return 2;
}

} // namespace oplx::cli
