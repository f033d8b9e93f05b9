#include "oplx/hgp.hpp"

#include "oplx/errors.hpp"

#include <algorithm>

namespace oplx {

namespace {

std::vector<SummandSignature> all_signatures(int p) {
    std::vector<SummandSignature> out;
    out.reserve(std::size_t(1) << p);
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        SummandSignature s(static_cast<std::size_t>(p), 0);
        for (int j = 0; j < p; ++j)
            if (mask & (1u << j)) s[static_cast<std::size_t>(j)] = 1;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int weight(const SummandSignature& s) {
    int w = 0;
    for (int b : s) w += b;
    return w;
}

} // namespace

Role Partition::role_of(const SummandSignature& s) const {
    auto it = assignment.find(s);
    if (it == assignment.end()) throw InvalidPartition("partition does not cover signature");
    return it->second;
}

Partition standard_hgp_partition(int p, int q) {
    if (q < 1 || q > p - 1) throw DegreeOutOfRange("standard_hgp_partition: need 1 <= q <= p-1");
    Partition part;
    part.p = p;
    for (auto& s : all_signatures(p)) {
        int w = weight(s);
        Role r = Role::Unused;
        if (w == q) r = Role::Qubit;
        else if (w == q - 1) r = Role::XStab;
        else if (w == q + 1) r = Role::ZStab;
        part.assignment.emplace(std::move(s), r);
    }
    return part;
}

Partition orthoplex_partition(int p) {
    if (p < 2) throw InvalidDimension("orthoplex_partition: need p >= 2");
    Partition part;
    part.p = p;
    for (auto& s : all_signatures(p)) {
        Role r;
        if (weight(s) % 2 == 1) r = Role::Qubit;
        else if (s.back() == 1) r = Role::XStab;
        else r = Role::ZStab;
        part.assignment.emplace(std::move(s), r);
    }
    return part;
}

bool CssCode::css_valid() const {
    return mat_mul(hx, transpose(hz)).is_zero();
}

namespace {

// basis of one role: summands in signature order, labels lexicographic
std::vector<BasisElement> role_basis(const std::vector<ChainComplex>& cs,
                                     const Partition& part, Role role) {
    std::vector<BasisElement> out;
    for (const auto& [sig, r] : part.assignment) {
        if (r != role) continue;
        std::vector<BasisElement> block{BasisElement{{}, {}}};
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const auto& factor_basis = cs[j].group(sig[j]);
            std::vector<BasisElement> next;
            next.reserve(block.size() * factor_basis.dim());
            for (const auto& prefix : block) {
                for (const auto& f : factor_basis.all()) {
                    BasisElement e = prefix;
                    e.sig.push_back(sig[j]);
                    e.label.push_back(f.label[0]);
                    next.push_back(std::move(e));
                }
            }
            block = std::move(next);
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

} // namespace

CssCode build_css(const std::vector<ChainComplex>& complexes, const Partition& partition) {
    if (static_cast<int>(complexes.size()) != partition.p)
        throw InvalidPartition("build_css: signature length must match factor count");
    for (const auto& c : complexes)
        if (c.max_degree() != 1)
            throw InvalidPartition("build_css: factors must be length-2 complexes");

    CssCode code;
    code.qubit_labels = LabeledBasis(role_basis(complexes, partition, Role::Qubit));
    code.x_labels = LabeledBasis(role_basis(complexes, partition, Role::XStab));
    code.z_labels = LabeledBasis(role_basis(complexes, partition, Role::ZStab));
    code.n = code.qubit_labels.dim();
    code.hx = BitMatrix(code.x_labels.dim(), code.n);
    code.hz = BitMatrix(code.z_labels.dim(), code.n);

    auto route = [&](Role role, const Label& tl, std::size_t col) {
        if (role == Role::XStab) {
            std::size_t r = code.x_labels.index_of(tl);
            if (r == code.x_labels.dim()) throw InvalidPartition("build_css: missing X target");
            code.hx.flip(r, col);
        } else if (role == Role::ZStab) {
            std::size_t r = code.z_labels.index_of(tl);
            if (r == code.z_labels.dim()) throw InvalidPartition("build_css: missing Z target");
            code.hz.flip(r, col);
        }
        // qubit and unused targets are discarded
    };

    // One factor move per entry: lower a degree-1 factor through delta, or
    // raise a degree-0 factor through delta^T, then route by the target role.
    for (std::size_t col = 0; col < code.n; ++col) {
        const BasisElement& e = code.qubit_labels.at(col);
        for (std::size_t j = 0; j < complexes.size(); ++j) {
            const BitMatrix& d = complexes[j].boundary(1);
            SummandSignature tsig = e.sig;
            if (e.sig[j] == 1) {
                tsig[j] = 0;
                std::size_t cj = complexes[j].group(1).index_of({e.label[j]});
                Role role = partition.role_of(tsig);
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    if (!d.get(r, cj)) continue;
                    Label tl = e.label;
                    tl[j] = complexes[j].group(0).at(r).label[0];
                    route(role, tl, col);
                }
            } else {
                tsig[j] = 1;
                std::size_t rj = complexes[j].group(0).index_of({e.label[j]});
                Role role = partition.role_of(tsig);
                for (std::size_t c = 0; c < d.cols(); ++c) {
                    if (!d.get(rj, c)) continue;
                    Label tl = e.label;
                    tl[j] = complexes[j].group(1).at(c).label[0];
                    route(role, tl, col);
                }
            }
        }
    }

    if (!code.css_valid()) throw InvalidPartition("build_css: partition fails the CSS product check");
    return code;
}

std::pair<std::size_t, std::size_t> code_params(const CssCode& code) {
    std::size_t k = code.n - rank(code.hx) - rank(code.hz);
    return {code.n, k};
}

} // namespace oplx
