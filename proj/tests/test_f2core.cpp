#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplx/bitmat.hpp"
#include "oplx/errors.hpp"

#include <random>
#include <vector>

using namespace oplx;

namespace {

BitMatrix from_strings(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] == '1') m.set(r, c, true);
    return m;
}

BitVector vec_from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v.set(i, true);
    return v;
}

// independent oracle: plain triple loop
BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            int acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc ^= (a.get(i, k) && b.get(k, j)) ? 1 : 0;
            out.set(i, j, acc);
        }
    return out;
}

// independent oracle: enumerate all vectors of a small kernel
std::vector<BitVector> exhaustive_kernel(const BitMatrix& m) {
    std::vector<BitVector> members;
    for (unsigned mask = 0; mask < (1u << m.cols()); ++mask) {
        BitVector v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i)
            if (mask & (1u << i)) v.set(i, true);
        bool in_kernel = true;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.row(r).dot(v)) { in_kernel = false; break; }
        if (in_kernel && !v.is_zero()) members.push_back(v);
    }
    return members;
}

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("rank on fixed cases") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);
    CHECK(rank(from_strings({"110", "011", "101"})) == 2);
}

TEST_CASE("nullspace on fixed cases") {
    CHECK(nullspace_basis(BitMatrix::identity(3)).empty());

    auto b1 = nullspace_basis(from_strings({"11"}));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == vec_from_string("11"));

    BitMatrix m = from_strings({"110", "011"});
    auto b2 = nullspace_basis(m);
    // expected value recomputed from the exhaustive oracle
    auto members = exhaustive_kernel(m);
    REQUIRE(members.size() == 1);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == members[0]);
    CHECK(b2[0] == vec_from_string("111"));
}

TEST_CASE("nullspace matches exhaustive kernel on random small matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(rng, 1 + trial % 5, 2 + trial % 7);
        auto basis = nullspace_basis(m);
        CHECK(basis.size() == m.cols() - rank(m));
        GaussBasis g(basis);
        CHECK(g.rank() == basis.size());
        for (const auto& v : basis)
            for (std::size_t r = 0; r < m.rows(); ++r) CHECK_FALSE(m.row(r).dot(v));
        // every exhaustive kernel member must be in the span
        for (const auto& v : exhaustive_kernel(m)) CHECK(g.contains(v));
    }
}

TEST_CASE("quotient basis fixed cases") {
    std::vector<BitVector> big{vec_from_string("10"), vec_from_string("01")};
    std::vector<BitVector> small{vec_from_string("11")};
    auto q = quotient_basis(big, small);
    REQUIRE(q.size() == 1);
    GaussBasis all(small);
    all.insert(q[0]);
    CHECK(all.rank() == 2);

    CHECK(quotient_basis(big, big).empty());

    std::vector<BitVector> outside{vec_from_string("111")};
    std::vector<BitVector> big3{vec_from_string("110"), vec_from_string("011")};
    CHECK_THROWS_AS(quotient_basis(big3, outside), ContainmentViolation);
}

TEST_CASE("quotient basis joins with small to span big") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t cols = 4 + trial % 8;
        BitMatrix a = random_matrix(rng, 6, cols);
        std::vector<BitVector> big;
        for (std::size_t r = 0; r < a.rows(); ++r) big.push_back(a.row(r));
        // small = random combinations of big rows, so containment holds
        std::vector<BitVector> small;
        std::uniform_int_distribution<unsigned> mask(0, (1u << a.rows()) - 1);
        for (int i = 0; i < 3; ++i) {
            BitVector v(cols);
            unsigned m = mask(rng);
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (m & (1u << r)) v.xor_assign(big[r]);
            small.push_back(v);
        }
        auto q = quotient_basis(big, small);
        GaussBasis gb(big);
        GaussBasis gs(small);
        CHECK(q.size() == gb.rank() - gs.rank());
        GaussBasis joined(small);
        for (const auto& v : q) CHECK(joined.insert(v));
        CHECK(joined.rank() == gb.rank());
        for (const auto& v : big) CHECK(joined.contains(v));
    }
}

TEST_CASE("matrix product fixed cases") {
    std::mt19937 rng(3);
    BitMatrix m = random_matrix(rng, 5, 5);
    CHECK(mat_mul(BitMatrix::identity(5), m) == m);

    BitMatrix a = from_strings({"11"});
    BitMatrix b(2, 1);
    b.set(0, 0, true);
    b.set(1, 0, true);
    BitMatrix c = mat_mul(a, b);
    CHECK(c.rows() == 1);
    CHECK(c.cols() == 1);
    CHECK_FALSE(c.get(0, 0));

    CHECK_THROWS_AS(mat_mul(BitMatrix(2, 3), BitMatrix(2, 3)), ShapeMismatch);
}

TEST_CASE("matrix product matches naive oracle on random matrices") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = dim(rng), m = dim(rng), k = dim(rng);
        BitMatrix a = random_matrix(rng, n, m);
        BitMatrix b = random_matrix(rng, m, k);
        CHECK(mat_mul(a, b) == naive_mul(a, b));
    }
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix m = random_matrix(rng, 3 + trial % 20, 3 + (trial * 7) % 20);
        std::size_t rk = rank(m);
        CHECK(rk == rank(row_reduce(m)));
        CHECK(rk <= std::min(m.rows(), m.cols()));
        CHECK(m.cols() == rk + nullspace_basis(m).size());
        CHECK(rk == rank(transpose(m)));
    }
}

TEST_CASE("xor of a vector with itself is zero") {
    BitVector v = vec_from_string("101101");
    v.xor_assign(v);
    CHECK(v.is_zero());
}
