#include <doctest.h>

#include "oracles.hpp"
#include "tlj/config.hpp"
#include "tlj/jw.hpp"

using namespace tlj;

TEST_SUITE("jw") {

TEST_CASE("base cases of the recursion") {
    CHECK(jones_wenzl(0) == TLElement::identity(0));
    CHECK(jones_wenzl(1) == TLElement::identity(1));
    TLElement expected =
        TLElement::identity(2) - TLElement::generator(2, 1) * delta_scalar().inverse();
    CHECK(jones_wenzl(2) == expected);
}

TEST_CASE("recursion output equals the linear-system oracle") {
    for (int m = 2; m <= 5; ++m) CHECK(jones_wenzl(m) == tlj_oracles::jw_linear_oracle(m));
}

TEST_CASE("defining properties hold exactly") {
    for (int m = 1; m <= 6; ++m) {
        JWVerdict v = verify_jw(jones_wenzl(m));
        CHECK(v.idempotent);
        CHECK(v.kills_left);
        CHECK(v.kills_right);
        CHECK(v.self_adjoint);
    }
}

TEST_CASE("verify_jw rejects non-projections") {
    JWVerdict e = verify_jw(TLElement::generator(3, 1));
    CHECK_FALSE(e.idempotent); // e^2 = delta e
    JWVerdict id = verify_jw(TLElement::identity(3));
    CHECK(id.idempotent);
    CHECK_FALSE(id.kills_left);
}

TEST_CASE("markov trace of p_m is the quantum integer") {
    for (int m = 1; m <= 6; ++m) CHECK(markov_trace(jones_wenzl(m)) == qint(m + 1));
}

TEST_CASE("trace table surfaces the identity per n") {
    auto table = jw_trace_table(2);
    REQUIRE(table.size() == 3);
    CHECK(table[0] == std::pair<int, Scalar>{0, Scalar(1)});
    const Scalar& d = delta_scalar();
    CHECK(table[1].second == d * d - Scalar(1)); // [3]_q
    LaurentPoly five;
    five.set(4, 1);
    five.set(2, 1);
    five.set(0, 1);
    five.set(-2, 1);
    five.set(-4, 1);
    CHECK(table[2].second == Scalar(five)); // [5]_q written out
}

TEST_CASE("coefficient denominators divide the quantum factorial") {
    for (int m = 2; m <= 6; ++m) {
        Scalar qfact(1);
        for (int k = 2; k <= m; ++k) qfact *= qint(k);
        for (const auto& [d, c] : jones_wenzl(m).terms()) {
            Scalar ratio = qfact / Scalar(c.den());
            CHECK(ratio.is_laurent());
        }
    }
}

TEST_CASE("cap on the strand count") {
    CHECK_THROWS_AS(jones_wenzl(jones_wenzl_cap() + 1), resource_limit_error);
}

} // TEST_SUITE
