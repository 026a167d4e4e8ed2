#include <doctest.h>

#include <Eigen/Dense>

#include <random>

#include "tlj/annular.hpp"
#include "tlj/jw.hpp"

using namespace tlj;

namespace {

// Hole-free disc pairing oracle: glue the matchings, count every loop.
Scalar disc_pairing_oracle(const TLDiagram& a, const TLDiagram& b) {
    const int N = 2 * a.size();
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    int loops = 0;
    for (int p = 0; p < N; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        ++loops;
        int cur = p;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            int q = a.partner(cur);
            seen[static_cast<std::size_t>(q)] = true;
            cur = b.partner(q);
        } while (cur != p);
    }
    return delta_scalar().pow(loops);
}

int union_loop_count(const TLDiagram& a, const TLDiagram& b) {
    const int N = 2 * a.size();
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    int loops = 0;
    for (int p = 0; p < N; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        ++loops;
        int cur = p;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            int q = a.partner(cur); // both endpoints lie on the same loop
            seen[static_cast<std::size_t>(q)] = true;
            cur = b.partner(q);
        } while (cur != p);
    }
    return loops;
}

using Matrix = std::vector<std::vector<TPoly>>;

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix r(a[0].size(), std::vector<TPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    Matrix r(a.size(), std::vector<TPoly>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

} // namespace

TEST_SUITE("annular") {

TEST_CASE("faces of a matching") {
    // matching {(0,1),(2,3)} on 4 points: faces {0,2}, {1}, {3}
    TLDiagram m(2, {1, 0, 3, 2});
    FaceStructure fs = matching_faces(m);
    REQUIRE(fs.face_gaps.size() == 3);
    CHECK(fs.face_gaps[0] == std::vector<int>{0, 2});
    CHECK(fs.face_gaps[1] == std::vector<int>{1});
    CHECK(fs.face_gaps[2] == std::vector<int>{3});
    // nested matching {(0,3),(1,2)}: faces {0}, {1,3}, {2}
    TLDiagram nested(2, {3, 2, 1, 0});
    FaceStructure fs2 = matching_faces(nested);
    CHECK(fs2.face_gaps[0] == std::vector<int>{0});
    CHECK(fs2.face_gaps[1] == std::vector<int>{1, 3});
    CHECK(fs2.face_gaps[2] == std::vector<int>{2});
    // every matching of 2n points has n+1 faces
    for (int n = 0; n <= 5; ++n)
        for (const TLDiagram& d : enumerate_basis(n))
            CHECK(matching_faces(d).face_gaps.size() == static_cast<std::size_t>(n) + 1);
}

TEST_CASE("annular basis dimension is binom(2n, n)") {
    const std::size_t binom[] = {1, 2, 6, 20, 70};
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_annular_basis(n).size() == binom[n]);
}

TEST_CASE("gram entries at weight 1") {
    const auto& basis = enumerate_annular_basis(1);
    REQUIRE(basis.size() == 2);
    const Scalar& d = delta_scalar();
    CHECK(gram_entry(basis[0], basis[0]) == TPoly(d));
    CHECK(gram_entry(basis[1], basis[1]) == TPoly(d));
    CHECK(gram_entry(basis[0], basis[1]) == TPoly::t());
    CHECK(gram_entry(basis[1], basis[0]) == TPoly::t());
    auto g = gram_matrix(1);
    CHECK(g[0][0] == TPoly(d));
    CHECK(g[0][1] == TPoly::t());
}

TEST_CASE("gram entries are monomials with bounded loop data") {
    for (int n = 1; n <= 3; ++n) {
        const auto& basis = enumerate_annular_basis(n);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                TPoly e = gram_entry(a, b);
                CHECK(e.degree() <= n);
                int loops = union_loop_count(a.matching(), b.matching());
                CHECK(loops >= 1);
                CHECK(loops <= n);
                // delta and t powers add up to the full loop count
                CHECK(e.subst_t(delta_scalar()) == delta_scalar().pow(loops));
            }
        }
    }
}

TEST_CASE("gram matrix is symmetric and degenerates to the disc pairing at t = delta") {
    for (int n = 0; n <= 3; ++n) {
        const auto& basis = enumerate_annular_basis(n);
        auto g = gram_matrix(n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                CHECK(g[i][j] == g[j][i]);
                CHECK(g[i][j].subst_t(delta_scalar()) ==
                      disc_pairing_oracle(basis[i].matching(), basis[j].matching()));
            }
        }
    }
}

TEST_CASE("gram matrix is positive semidefinite on (0, delta]") {
    for (double delta : {2.0, 2.5, 3.0}) {
        for (int k = 1; k <= 8; ++k) {
            NumericParams p = NumericParams::make(delta, delta * k / 8.0);
            for (int n = 0; n <= 3; ++n) {
                auto g = gram_matrix(n);
                const auto dim = static_cast<Eigen::Index>(g.size());
                Eigen::MatrixXd a(dim, dim);
                for (Eigen::Index i = 0; i < dim; ++i)
                    for (Eigen::Index j = 0; j < dim; ++j)
                        a(i, j) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(p);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
                CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
            }
        }
    }
}

TEST_CASE("gram matrix has full rank at generic t") {
    NumericParams p = NumericParams::make(2.5, 2.5 / 3.14159265358979);
    for (int n = 0; n <= 3; ++n) {
        auto g = gram_matrix(n);
        const auto dim = static_cast<Eigen::Index>(g.size());
        Eigen::MatrixXd a(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j)
                a(i, j) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(p);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        CHECK(lu.rank() == dim);
    }
}

TEST_CASE("annular trace values") {
    CHECK(annular_trace(TLElement::identity(2)) == TPoly::t() * TPoly::t());
    CHECK(annular_trace(TLElement::generator(2, 1)) == TPoly(delta_scalar()));
    CHECK(annular_trace(jones_wenzl(2)) == qint_t(3)); // t^2 - 1
    CHECK_THROWS_AS(annular_trace(TLElement::identity(3)), domain_error);
}

TEST_CASE("annular trace at t = delta is the markov trace") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 100; ++k) {
        int m = 2 * (1 + static_cast<int>(rng() % 3)); // 2, 4, 6
        TLElement x = random_element(m, 3, rng);
        CHECK(annular_trace(x).subst_t(delta_scalar()) == markov_trace(x));
    }
}

TEST_CASE("closure windings stay in {-1, 0, 1}") {
    for (int m = 1; m <= 6; ++m) {
        for (const TLDiagram& d : enumerate_basis(m)) {
            for (int w : annular_closure_windings(d)) {
                CHECK(w >= -1);
                CHECK(w <= 1);
            }
        }
    }
}

TEST_CASE("cup from the vacuum and caps at weight 1") {
    AnnularVector xi(AnnularDiagram::vacuum());
    AnnularVector up = cup(0, xi);
    REQUIRE(up.terms().size() == 1);
    const auto& [d, c] = *up.terms().begin();
    CHECK(d.matching() == TLDiagram(1, {1, 0}));
    CHECK(d.hole_face() == 0);
    CHECK(c == TPoly(1));

    const auto& basis1 = enumerate_annular_basis(1);
    // face 0 diagram: hole outside the arc, cap closes a hole-free loop
    AnnularVector a0 = cap(0, AnnularVector(basis1[0]));
    CHECK(a0.coeff(AnnularDiagram::vacuum()) == TPoly(delta_scalar()));
    AnnularVector a1 = cap(0, AnnularVector(basis1[1]));
    CHECK(a1.coeff(AnnularDiagram::vacuum()) == TPoly::t());
    // adjointness against the vacuum: <cap v, xi> = <v, cup xi>
    for (int idx = 0; idx <= 1; ++idx) {
        for (int i = 0; i < 2; ++i) {
            TPoly lhs = annular_inner(cap(i, AnnularVector(basis1[idx])),
                                      AnnularVector(AnnularDiagram::vacuum()));
            TPoly rhs = annular_inner(AnnularVector(basis1[idx]),
                                      cup(i, AnnularVector(AnnularDiagram::vacuum())));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rotation: periods and exactness") {
    const auto& basis1 = enumerate_annular_basis(1);
    for (const auto& d : basis1) {
        AnnularVector v(d);
        CHECK(rotate(rotate(v)) == v);
        CHECK(rotate_inv(rotate(v)) == v);
    }
    CHECK(rotation_period(1) == 2);
    for (int n = 1; n <= 3; ++n) {
        int period = rotation_period(n);
        CHECK(period >= 1);
        CHECK((2 * n) % period == 0);
    }
}

TEST_CASE("action matrices") {
    auto m = action_matrix(Tangle::cap(0), 1);
    REQUIRE(m.size() == 1);
    REQUIRE(m[0].size() == 2);
    CHECK(m[0][0] == TPoly(delta_scalar()));
    CHECK(m[0][1] == TPoly::t());
    auto id2 = action_matrix(Tangle::identity(), 2);
    for (std::size_t i = 0; i < id2.size(); ++i)
        for (std::size_t j = 0; j < id2.size(); ++j)
            CHECK(id2[i][j] == (i == j ? TPoly(1) : TPoly()));
}

TEST_CASE("adjoint law as an exact matrix identity") {
    for (int n = 0; n <= 3; ++n) {
        Matrix g_n = gram_matrix(n);
        std::vector<Tangle> tangles;
        if (n >= 1)
            for (int i = 0; i < 2 * n; ++i) tangles.push_back(Tangle::cap(i));
        for (int i = 0; i < 2 * n + 2; ++i) tangles.push_back(Tangle::cup(i));
        tangles.push_back(Tangle::rotate());
        tangles.push_back(Tangle::rotate_inv());
        for (const Tangle& a : tangles) {
            Matrix m_a = action_matrix(a, n);
            Matrix g_m = gram_matrix(tangle_target(a, n));
            Matrix m_dag = action_matrix(dagger(a), tangle_target(a, n));
            Matrix lhs = mat_mul(transpose(m_a), g_m);
            Matrix rhs = mat_mul(g_n, m_dag);
            REQUIRE(lhs.size() == rhs.size());
            for (std::size_t i = 0; i < lhs.size(); ++i)
                for (std::size_t j = 0; j < lhs[i].size(); ++j) CHECK(lhs[i][j] == rhs[i][j]);
        }
        // rotation preserves the form
        Matrix rot = action_matrix(Tangle::rotate(), n);
        Matrix conj = mat_mul(transpose(rot), mat_mul(g_n, rot));
        for (std::size_t i = 0; i < conj.size(); ++i)
            for (std::size_t j = 0; j < conj[i].size(); ++j) CHECK(conj[i][j] == g_n[i][j]);
    }
}

TEST_CASE("degenerate and invalid inputs") {
    CHECK(gram_entry(AnnularDiagram::vacuum(), AnnularDiagram::vacuum()) == TPoly(1));
    CHECK_THROWS_AS(cap(0, AnnularVector(AnnularDiagram::vacuum())), domain_error);
    const auto& basis1 = enumerate_annular_basis(1);
    CHECK_THROWS_AS(cap(2, AnnularVector(basis1[0])), domain_error);
    CHECK_THROWS_AS(cup(5, AnnularVector(basis1[0])), domain_error);
    CHECK_THROWS_AS(AnnularDiagram(TLDiagram(1, {1, 0}), 2), domain_error);
    CHECK_THROWS_AS(gram_matrix(5), resource_limit_error);
}

} // TEST_SUITE
