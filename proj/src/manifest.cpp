#include "oplx/manifest.hpp"

#include "oplx/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace oplx {

namespace {

using nlohmann::json;

json matrix_to_json(const BitMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json cols = json::array();
        for (std::size_t c : m.row(r).ones()) cols.push_back(c);
        rows.push_back(std::move(cols));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

BitMatrix matrix_from_json(const json& j) {
    BitMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& data = j.at("data");
    if (data.size() != m.rows()) throw ShapeMismatch("manifest: row count mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& c : data[r]) m.set(r, c.get<std::size_t>(), true);
    return m;
}

json labels_to_json(const LabeledBasis& basis) {
    json out = json::array();
    for (const auto& e : basis.all()) out.push_back(e.label);
    return out;
}

LabeledBasis labels_from_json(const json& j) {
    std::vector<BasisElement> elems;
    for (const auto& l : j) {
        BasisElement e;
        e.label = l.get<std::vector<int>>();
        for (int x : e.label) e.sig.push_back(x & 1);
        elems.push_back(std::move(e));
    }
    return LabeledBasis(std::move(elems));
}

} // namespace

CodeManifest manifest_from_model(const std::string& kind, const OrthoplexModel& model) {
    CodeManifest m;
    m.model_kind = kind;
    m.sizes = model.shape.sizes;
    m.periodic.assign(model.shape.periodic.begin(), model.shape.periodic.end());
    m.code = model.code;
    return m;
}

CodeManifest manifest_from_code(const std::string& kind, const std::vector<int>& sizes,
                                const std::vector<bool>& periodic, const CssCode& code) {
    CodeManifest m;
    m.model_kind = kind;
    m.sizes = sizes;
    m.periodic = periodic;
    m.code = code;
    return m;
}

std::string manifest_to_json(const CodeManifest& m) {
    json j{{"format", m.format},
           {"model", m.model_kind},
           {"sizes", m.sizes},
           {"periodic", m.periodic},
           {"n", m.code.n},
           {"hx", matrix_to_json(m.code.hx)},
           {"hz", matrix_to_json(m.code.hz)},
           {"qubit_cells", labels_to_json(m.code.qubit_labels)},
           {"x_cells", labels_to_json(m.code.x_labels)},
           {"z_cells", labels_to_json(m.code.z_labels)},
           {"meta", json{{"tool", m.tool}}}};
    return j.dump(1);
}

CodeManifest manifest_from_json(const std::string& text) {
    json j = json::parse(text);
    CodeManifest m;
    m.format = j.at("format").get<int>();
    m.model_kind = j.at("model").get<std::string>();
    m.sizes = j.at("sizes").get<std::vector<int>>();
    m.periodic = j.at("periodic").get<std::vector<bool>>();
    m.code.n = j.at("n").get<std::size_t>();
    m.code.hx = matrix_from_json(j.at("hx"));
    m.code.hz = matrix_from_json(j.at("hz"));
    m.code.qubit_labels = labels_from_json(j.at("qubit_cells"));
    m.code.x_labels = labels_from_json(j.at("x_cells"));
    m.code.z_labels = labels_from_json(j.at("z_cells"));
    if (j.contains("meta") && j.at("meta").contains("tool"))
        m.tool = j.at("meta").at("tool").get<std::string>();
    if (m.code.hx.cols() != m.code.n || m.code.hz.cols() != m.code.n)
        throw ShapeMismatch("manifest: qubit count does not match matrices");
    return m;
}

void save_manifest(const CodeManifest& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << manifest_to_json(m) << "\n";
}

CodeManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return manifest_from_json(text);
}

bool manifest_equal(const CodeManifest& a, const CodeManifest& b) {
    if (a.format != b.format || a.model_kind != b.model_kind || a.sizes != b.sizes ||
        a.periodic != b.periodic || a.code.n != b.code.n)
        return false;
    if (a.code.hx != b.code.hx || a.code.hz != b.code.hz) return false;
    auto same_labels = [](const LabeledBasis& x, const LabeledBasis& y) {
        if (x.dim() != y.dim()) return false;
        for (std::size_t i = 0; i < x.dim(); ++i)
            if (x.at(i).label != y.at(i).label) return false;
        return true;
    };
    return same_labels(a.code.qubit_labels, b.code.qubit_labels) &&
           same_labels(a.code.x_labels, b.code.x_labels) &&
           same_labels(a.code.z_labels, b.code.z_labels);
}

} // namespace oplx
