#include "oplx/chain.hpp"

#include "oplx/errors.hpp"

#include <algorithm>

namespace oplx {

LabeledBasis::LabeledBasis(std::vector<BasisElement> elems) : elements(std::move(elems)) {
    lookup.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!lookup.emplace(elements[i].label, i).second)
            throw Error("LabeledBasis: duplicate label within one basis");
    }
}

std::size_t LabeledBasis::index_of(const Label& l) const {
    auto it = lookup.find(l);
    return it == lookup.end() ? elements.size() : it->second;
}

ChainComplex::ChainComplex(std::vector<LabeledBasis> groups, std::vector<BitMatrix> boundaries)
    : grp(std::move(groups)), bnd(std::move(boundaries)) {
    if (bnd.size() + 1 != grp.size())
        throw ShapeMismatch("ChainComplex: need one boundary per adjacent degree pair");
    for (int q = 1; q <= max_degree(); ++q) {
        if (boundary(q).cols() != dim(q) || boundary(q).rows() != dim(q - 1))
            throw ShapeMismatch("ChainComplex: boundary shape does not match groups");
    }
}

int ChainComplex::factors() const {
    for (const auto& g : grp)
        if (g.dim() > 0) return static_cast<int>(g.at(0).sig.size());
    return 0;
}

ChainComplex repetition_complex(int length, bool periodic) {
    if (periodic && length < 2) throw InvalidSize("repetition_complex: periodic chain needs length >= 2");
    if (!periodic && length < 1) throw InvalidSize("repetition_complex: open chain needs length >= 1");

    std::vector<BasisElement> verts, links;
    for (int j = 0; j < length; ++j) verts.push_back({{0}, {2 * j}});
    int nlinks = periodic ? length : length - 1;
    for (int j = 0; j < nlinks; ++j) links.push_back({{1}, {2 * j + 1}});

    BitMatrix d(verts.size(), links.size());
    for (int j = 0; j < nlinks; ++j) {
        d.flip(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
        d.flip(static_cast<std::size_t>((j + 1) % length), static_cast<std::size_t>(j));
    }
    std::vector<LabeledBasis> groups;
    groups.emplace_back(std::move(verts));
    groups.emplace_back(std::move(links));
    return ChainComplex(std::move(groups), {std::move(d)});
}

namespace {

BasisElement combine(const BasisElement& x, const BasisElement& y) {
    BasisElement e;
    e.sig.reserve(x.sig.size() + y.sig.size());
    e.sig.insert(e.sig.end(), x.sig.begin(), x.sig.end());
    e.sig.insert(e.sig.end(), y.sig.begin(), y.sig.end());
    e.label.reserve(x.label.size() + y.label.size());
    e.label.insert(e.label.end(), x.label.begin(), x.label.end());
    e.label.insert(e.label.end(), y.label.begin(), y.label.end());
    return e;
}

} // namespace

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
    int top = a.max_degree() + b.max_degree();

    // Degree q of the product collects all (i, q-i) splits; the basis is
    // sorted by (signature, label) so matrices are deterministic.
    std::vector<std::vector<BasisElement>> elems(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= a.max_degree(); ++i) {
        for (int j = 0; j <= b.max_degree(); ++j) {
            auto& dst = elems[static_cast<std::size_t>(i + j)];
            for (const auto& x : a.group(i).all())
                for (const auto& y : b.group(j).all()) dst.push_back(combine(x, y));
        }
    }
    std::vector<LabeledBasis> groups;
    groups.reserve(elems.size());
    for (auto& v : elems) {
        std::sort(v.begin(), v.end());
        groups.emplace_back(std::move(v));
    }

    int fa = a.factors();
    std::vector<BitMatrix> bnds;
    for (int q = 1; q <= top; ++q) {
        const auto& src = groups[static_cast<std::size_t>(q)];
        const auto& dst = groups[static_cast<std::size_t>(q - 1)];
        BitMatrix d(dst.dim(), src.dim());
        for (std::size_t col = 0; col < src.dim(); ++col) {
            const BasisElement& e = src.at(col);
            // boundary acts factor-wise, GF(2) coefficients, no signs
            int deg_a = 0;
            for (int f = 0; f < fa; ++f) deg_a += e.sig[static_cast<std::size_t>(f)];
            int deg_b = q - deg_a;
            BasisElement apart{Signature(e.sig.begin(), e.sig.begin() + fa),
                               Label(e.label.begin(), e.label.begin() + fa)};
            BasisElement bpart{Signature(e.sig.begin() + fa, e.sig.end()),
                               Label(e.label.begin() + fa, e.label.end())};

            auto target_index = [&](const Label& l) {
                std::size_t i = dst.index_of(l);
                if (i == dst.dim()) throw Error("tensor_product: boundary target missing");
                return i;
            };
            if (deg_a >= 1) {
                std::size_t ia = a.group(deg_a).index_of(apart.label);
                const BitMatrix& da = a.boundary(deg_a);
                for (std::size_t r = 0; r < da.rows(); ++r) {
                    if (!da.get(r, ia)) continue;
                    BasisElement t = combine(a.group(deg_a - 1).at(r), bpart);
                    d.flip(target_index(t.label), col);
                }
            }
            if (deg_b >= 1) {
                std::size_t ib = b.group(deg_b).index_of(bpart.label);
                const BitMatrix& db = b.boundary(deg_b);
                for (std::size_t r = 0; r < db.rows(); ++r) {
                    if (!db.get(r, ib)) continue;
                    BasisElement t = combine(apart, b.group(deg_b - 1).at(r));
                    d.flip(target_index(t.label), col);
                }
            }
        }
        bnds.push_back(std::move(d));
    }
    return ChainComplex(std::move(groups), std::move(bnds));
}

ChainComplex tensor_product_all(const std::vector<ChainComplex>& factors) {
    if (factors.empty()) throw InvalidSize("tensor_product_all: need at least one factor");
    ChainComplex acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_product(acc, factors[i]);
    return acc;
}

ComplexReport validate_complex(const ChainComplex& c) {
    ComplexReport rep;
    for (int q = 1; q <= c.max_degree(); ++q) {
        if (c.boundary(q).cols() != c.dim(q) || c.boundary(q).rows() != c.dim(q - 1)) {
            rep.shapes_ok = false;
            rep.pass = false;
        }
    }
    for (int q = 2; q <= c.max_degree(); ++q) {
        bool ok = rep.shapes_ok && mat_mul(c.boundary(q - 1), c.boundary(q)).is_zero();
        rep.chain_condition.emplace_back(q, ok);
        if (!ok) rep.pass = false;
    }
    return rep;
}

} // namespace oplx
