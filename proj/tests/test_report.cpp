#include <doctest.h>

#include <cmath>
#include <random>

#include "tlj/report.hpp"

using namespace tlj;

TEST_SUITE("report") {

TEST_CASE("cpai coefficient values") {
    NumericParams any = NumericParams::make(2.5, 1.7);
    CHECK(cpai_numeric(0, any) == 1.0);
    // t = delta makes c identically 1
    for (double delta : {2.0, 2.5, 3.0}) {
        NumericParams p = NumericParams::make(delta, delta);
        for (int n = 0; n <= 6; ++n)
            CHECK(cpai_numeric(n, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // delta = 3, t = 2, n = 1: (t^2-1)/(delta^2-1) = 3/8
    NumericParams p = NumericParams::make(3.0, 2.0);
    CHECK(cpai_numeric(1, p) == doctest::Approx(0.375).epsilon(1e-14));
    CpaiExact e = cpai_exact(1);
    CHECK(e.numerator == qint_t(3));
    CHECK(e.denominator == qint(3));
}

TEST_CASE("coefficient cross check is exact at the symbolic level") {
    for (double delta : {2.0, 2.5, 3.0}) {
        for (int k = 1; k <= 4; ++k) {
            NumericParams p = NumericParams::make(delta, delta * k / 5.0);
            for (int n = 0; n <= 2; ++n) {
                CPAIRow row = coefficient_cross_check(n, p);
                REQUIRE(row.c_diagram.has_value());
                CHECK(row.abs_gap <= 1e-12);
            }
        }
    }
    NumericParams p = NumericParams::make(2.5, 2.0);
    CPAIRow zero = coefficient_cross_check(0, p);
    CHECK(zero.c_formula == 1.0);
    CHECK(*zero.c_diagram == 1.0);
}

TEST_CASE("decay of c_t(n) in n") {
    NumericParams p = NumericParams::make(2.5, 2.4);
    DecayReport rep = decay_report(p, 60);
    CHECK(rep.rows[0].c_formula == 1.0);
    CHECK(rep.final_c < 1e-2);
    CHECK(rep.pass);
    CHECK(rep.monotone); // strictly decreasing over this range
    CHECK_THROWS_AS(decay_report(NumericParams::make(2.5, 2.5), 10), domain_error);
}

TEST_CASE("convergence of c_t(n) as t approaches delta") {
    ConvergenceReport rep = convergence_report(10, 2.5, {1e-3, 1e-4, 1e-5});
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) CHECK(row.per_n[0] == 0.0); // n = 0 exactly 1
    CHECK(rep.rows[1].eps == 1e-4);
    CHECK(rep.rows[1].max_abs_gap < 1e-2);
    // column decreases toward 0 with eps
    CHECK(rep.rows[1].max_abs_gap <= rep.rows[0].max_abs_gap);
    CHECK(rep.rows[2].max_abs_gap <= rep.rows[1].max_abs_gap);
}

TEST_CASE("orthogonality of the jones-wenzl families") {
    std::mt19937_64 rng(61);
    CHECK(orthogonality_check(0, 1, 20, rng));
    CHECK(orthogonality_check(1, 2, 20, rng));
    CHECK(orthogonality_check(2, 1, 10, rng));
    CHECK_THROWS_AS(orthogonality_check(1, 1, 5, rng), domain_error);
}

TEST_CASE("gram spectra") {
    NumericParams p = NumericParams::make(2.5, 1.5);
    SpectrumRow row = gram_spectrum(1, p);
    CHECK(row.min_eig == doctest::Approx(2.5 - 1.5).epsilon(1e-12));
    CHECK(row.max_eig == doctest::Approx(2.5 + 1.5).epsilon(1e-12));
    auto rows = psd_sweep(2, {2.0, 2.5}, 5);
    for (const auto& r : rows) CHECK(r.min_eig >= -1e-9);
}

TEST_CASE("csv schemas") {
    NumericParams p = NumericParams::make(2.5, 2.0);
    std::vector<CPAIRow> rows{coefficient_cross_check(1, p)};
    std::string csv = cpai_csv(rows, 2.5, 2.0);
    CHECK(csv.rfind("n,delta,t,c_formula,c_diagram,abs_gap\n", 0) == 0);
    std::string spectra = spectra_csv({gram_spectrum(1, p)});
    CHECK(spectra.rfind("n,t,delta,min_eig,max_eig\n", 0) == 0);
    auto j = cpai_json(rows, 2.5, 2.0);
    CHECK(j.at("schema") == 1);
}

} // TEST_SUITE
