#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grl/matrix.hpp"

#include <random>

using namespace grl;

namespace {

Matrix mat(const FieldDesc& f, std::size_t rows, std::size_t cols,
           const std::vector<std::int64_t>& vals) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Scalar::from_int(f, vals[i * cols + j]);
    return m;
}

// all vectors in the rowspace of m over GF(p), by brute-force combination
std::vector<std::vector<Scalar>> enumerate_span(const Matrix& m) {
    const std::int64_t p = m.field().p;
    std::vector<std::vector<Scalar>> out;
    std::vector<std::int64_t> digits(m.rows(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) total *= std::uint64_t(p);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        std::uint64_t rem = n;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Scalar c = Scalar::from_int(m.field(), std::int64_t(rem % p));
            rem /= p;
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] += c * m.at(i, j);
        }
        out.push_back(v);
    }
    return out;
}

Matrix random_matrix(const FieldDesc& f, std::mt19937_64& rng, std::size_t rows,
                     std::size_t cols) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::int64_t v = f.is_finite() ? std::int64_t(rng() % f.p)
                                           : std::int64_t(rng() % 9) - 4;
            m.at(i, j) = Scalar::from_int(f, v);
        }
    return m;
}

}  // namespace

TEST_CASE("rational scalars stay in lowest terms") {
    auto f = FieldDesc::rational();
    Scalar a = Scalar::parse(f, "2/4");
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).to_string() == "1");
    CHECK((a - a).is_zero());
    CHECK((a * Scalar::from_int(f, 6)).to_string() == "3");
    CHECK(Scalar::parse(f, "-3/-6") == a);
    CHECK(a.inverse().to_string() == "2");
}

TEST_CASE("gfp arithmetic and serialization") {
    Scalar a = Scalar::gfp(5, 7);
    Scalar b = Scalar::gfp(4, 7);
    CHECK((a * b).residue() == 6);
    CHECK((a + b).residue() == 2);
    CHECK(a.inverse().residue() == 3);  // 5*3 = 15 = 1 mod 7
    CHECK(a.to_string() == "5 mod 7");
    CHECK(Scalar::parse(FieldDesc::gfp(7), "5 mod 7") == a);
    CHECK(Scalar::parse(FieldDesc::gfp(7), "12") == a);
    CHECK_THROWS_AS(FieldDesc::gfp(6), std::invalid_argument);
}

TEST_CASE("mixing fields is rejected") {
    Scalar q = Scalar::from_int(FieldDesc::rational(), 1);
    Scalar g = Scalar::gfp(1, 2);
    CHECK_THROWS_AS((void)(q + g), FieldMismatch);
    CHECK(q != g);
}

TEST_CASE("rref on the stated examples") {
    auto q = FieldDesc::rational();
    auto f2 = FieldDesc::gfp(2);

    auto id = rref(Matrix::identity(2, q));
    CHECK(id.reduced == Matrix::identity(2, q));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    auto z = rref(Matrix(3, 3, q));
    CHECK(z.reduced == Matrix(3, 3, q));
    CHECK(z.pivots.empty());
    CHECK(z.rank == 0);

    auto ones = rref(mat(f2, 2, 2, {1, 1, 1, 1}));
    CHECK(ones.reduced == mat(f2, 2, 2, {1, 1, 0, 0}));
    CHECK(ones.rank == 1);
}

TEST_CASE("nullspace on the stated examples") {
    auto q = FieldDesc::rational();
    auto f2 = FieldDesc::gfp(2);

    CHECK(nullspace(Matrix::identity(3, q)).rows() == 0);
    CHECK(nullspace(Matrix(2, 3, q)).rows() == 3);

    Matrix m = mat(f2, 1, 2, {1, 1});
    Matrix ns = nullspace(m);
    REQUIRE(ns.rows() == 1);
    // oracle: the only nonzero kernel vector among all four GF(2)^2 vectors
    int kernel_count = 0;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            Scalar val = m.at(0, 0) * Scalar::gfp(x0, 2) +
                         m.at(0, 1) * Scalar::gfp(x1, 2);
            if (val.is_zero() && (x0 || x1)) {
                ++kernel_count;
                CHECK(ns.at(0, 0) == Scalar::gfp(x0, 2));
                CHECK(ns.at(0, 1) == Scalar::gfp(x1, 2));
            }
        }
    CHECK(kernel_count == 1);
}

TEST_CASE("rowspace_intersect on the stated examples") {
    auto q = FieldDesc::rational();
    auto f2 = FieldDesc::gfp(2);

    Matrix id = Matrix::identity(3, q);
    CHECK(rowspace_intersect(id, id) == id);

    Matrix e1 = mat(q, 1, 2, {1, 0});
    Matrix e2 = mat(q, 1, 2, {0, 1});
    CHECK(rowspace_intersect(e1, e2).rows() == 0);

    // span{e1+e2, e2} vs span{e1} over GF(2), enumerated oracle
    Matrix a = mat(f2, 2, 2, {1, 1, 0, 1});
    Matrix b = mat(f2, 1, 2, {1, 0});
    Matrix meet = rowspace_intersect(a, b);
    auto span_a = enumerate_span(a);
    auto span_b = enumerate_span(b);
    std::vector<std::vector<Scalar>> both;
    for (const auto& v : span_a)
        for (const auto& w : span_b)
            if (v == w) both.push_back(v);
    // oracle: common vectors are exactly 0 and e1
    CHECK(both.size() == 2);
    CHECK(meet == b);

    CHECK_THROWS_AS(rowspace_intersect(e1, mat(q, 1, 3, {1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(rowspace_intersect(e1, mat(f2, 1, 2, {1, 0})),
                    FieldMismatch);
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937_64 rng(42);
    for (FieldDesc f : {FieldDesc::rational(), FieldDesc::gfp(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(f, rng, r, c);
            RrefResult rr = rref(m);
            CHECK(rref(rr.reduced).reduced == rr.reduced);  // idempotent
            CHECK(rr.rank + nullspace(m).rows() == c);      // rank-nullity
            // kernel rows really annihilate m
            Matrix ns = nullspace(m);
            if (ns.rows() > 0) CHECK((m * ns.transpose()).is_zero());
        }
    }
}

TEST_CASE("rowspace_intersect is commutative up to rref") {
    std::mt19937_64 rng(7);
    auto f = FieldDesc::gfp(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t c = 2 + rng() % 4;
        Matrix a = random_matrix(f, rng, 1 + rng() % 4, c);
        Matrix b = random_matrix(f, rng, 1 + rng() % 4, c);
        CHECK(rowspace_intersect(a, b) == rowspace_intersect(b, a));
    }
}
