#include <doctest.h>

#include <fstream>
#include <random>

#include "tlj/annular.hpp"
#include "tlj/boxalg.hpp"
#include "tlj/io.hpp"
#include "tlj/jw.hpp"

using namespace tlj;

TEST_SUITE("boxalg") {

TEST_CASE("unit laws") {
    BoxElement u = BoxElement::unit();
    CHECK(tau(u) == Scalar(1));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        BoxElement x = random_box(2, 3, rng);
        CHECK(bacher_mul(u, x) == x);
        CHECK(bacher_mul(x, u) == x);
    }
}

TEST_CASE("product of two single strands") {
    // a in D(1,0): one string on the M side
    BoxElement a = BoxElement::embed_left(TLElement::identity(1));
    BoxElement sq = bacher_mul(a, a);
    // p = 0: the two cups side by side in D(2,0)
    const TLElement* top = sq.component(2, 0);
    REQUIRE(top != nullptr);
    CHECK(*top == TLElement(TLDiagram(2, {1, 0, 3, 2})));
    // p = 1: the strand itself
    const TLElement* mid = sq.component(1, 0);
    REQUIRE(mid != nullptr);
    CHECK(*mid == TLElement::identity(1));
    // p = 2: full contraction closes one loop
    CHECK(tau(sq) == delta_scalar());
}

TEST_CASE("tau vanishes off the (0,0) component") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        BoxElement x = random_box(2, 2, rng);
        BoxElement off;
        for (const auto& [key, comp] : x.components())
            if (key != BoxElement::Key{0, 0}) off.add_component(key.first, key.second, comp);
        CHECK(tau(off) == Scalar());
    }
}

TEST_CASE("associativity, traciality and the involution") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 25; ++k) {
        BoxElement x = random_box(2, 2, rng);
        BoxElement y = random_box(2, 2, rng);
        BoxElement z = random_box(2, 2, rng);
        CHECK(bacher_mul(bacher_mul(x, y), z) == bacher_mul(x, bacher_mul(y, z)));
    }
    for (int k = 0; k < 50; ++k) {
        BoxElement x = random_box(2, 2, rng);
        BoxElement y = random_box(2, 2, rng);
        CHECK(tau(bacher_mul(x, y)) == tau(bacher_mul(y, x)));
        CHECK(dagger(bacher_mul(x, y)) == bacher_mul(dagger(y), dagger(x)));
        CHECK(dagger(dagger(x)) == x);
    }
    CHECK(dagger(BoxElement::unit()) == BoxElement::unit());
}

TEST_CASE("faithfulness probe: tau of dagger(x) x is positive") {
    std::mt19937_64 rng(21);
    NumericParams p = NumericParams::make(2.5);
    for (int k = 0; k < 50; ++k) {
        BoxElement x = random_box(2, 2, rng);
        if (x.is_zero()) continue;
        double v = tau(bacher_mul(dagger(x), x)).eval(p);
        CHECK(v > 0.0);
    }
}

TEST_CASE("component support matches the contraction grading") {
    std::mt19937_64 rng(27);
    for (int k = 0; k < 30; ++k) {
        BoxElement x = random_box(2, 1, rng);
        BoxElement y = random_box(2, 1, rng);
        if (x.is_zero() || y.is_zero()) continue;
        auto [n, m] = x.components().begin()->first;
        auto [i, j] = y.components().begin()->first;
        BoxElement prod = bacher_mul(x, y);
        for (const auto& [key, comp] : prod.components()) {
            // key = (n+i-p, m+j-r) for some contraction counts p, r
            int p = n + i - key.first;
            int r = m + j - key.second;
            CHECK(p >= 0);
            CHECK(p <= std::min(2 * n, 2 * i));
            CHECK(r >= 0);
            CHECK(r <= std::min(2 * m, 2 * j));
        }
    }
}

TEST_CASE("golden multiplication table at degree <= 2") {
    auto basis = box_basis(2);
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const auto& [n, m, da] = basis[a];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto& [i, j, db] = basis[b];
            BoxElement prod = bacher_mul(BoxElement::from_component(n, m, TLElement(da)),
                                         BoxElement::from_component(i, j, TLElement(db)));
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& [key, comp] : prod.components())
                comps.push_back(nlohmann::json{
                    {"n", key.first}, {"m", key.second}, {"element", to_json(comp)}});
            table.push_back(nlohmann::json{{"a", a}, {"b", b}, {"components", comps}});
        }
    }
    std::string path = std::string(TLJ_GOLDEN_DIR) + "/bacher_table_deg2.json";
    if (std::getenv("TLJ_REGEN_GOLDEN")) {
        std::ofstream out(path);
        REQUIRE(out.good());
        out << table.dump(1) << "\n";
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "golden file missing; regenerate with TLJ_REGEN_GOLDEN=1");
    nlohmann::json frozen = nlohmann::json::parse(in);
    CHECK(table == frozen);
}

TEST_CASE("embed_jw") {
    CHECK(embed_jw(0) == BoxElement::unit());
    for (int n = 1; n <= 2; ++n) {
        BoxElement g = embed_jw(n);
        CHECK(tau(g) == Scalar());
        CHECK(dagger(g) == g);
        const TLElement* comp = g.component(n, n);
        REQUIRE(comp != nullptr);
        CHECK(*comp == jones_wenzl(2 * n));
    }
}

TEST_CASE("pi0: unit acts trivially") {
    ModuleVector xi = ModuleVector::vacuum(6);
    std::mt19937_64 rng(33);
    BoxElement x = random_box(2, 2, rng);
    ModuleVector v = pi0_act_left(x, xi).value;
    ActionResult res = pi0_act_left(BoxElement::unit(), v);
    CHECK_FALSE(res.overflowed());
    CHECK(res.value == v);
    ActionResult res2 = pi0_act_right(BoxElement::unit(), v);
    CHECK(res2.value == v);
}

TEST_CASE("pi0: vector state equals tau") {
    ModuleVector xi = ModuleVector::vacuum(6);
    std::mt19937_64 rng(39);
    for (int k = 0; k < 50; ++k) {
        BoxElement x = random_box(2, 2, rng);
        ActionResult res = pi0_act_left(x, xi);
        CHECK_FALSE(res.overflowed());
        CHECK(module_inner(res.value, xi) == TPoly(tau(x)));
        ActionResult resr = pi0_act_right(x, xi);
        CHECK(module_inner(resr.value, xi) == TPoly(tau(x)));
    }
}

TEST_CASE("pi0: split elements act centrally on the vacuum") {
    ModuleVector xi = ModuleVector::vacuum(6);
    std::mt19937_64 rng(45);
    for (int n = 0; n <= 2; ++n) {
        for (int m = 0; n + m <= 2; ++m) {
            for (int k = 0; k < 5; ++k) {
                TLElement a = n == 0 ? TLElement::identity(0) : random_element(n, 2, rng);
                TLElement b = m == 0 ? TLElement::identity(0) : random_element(m, 2, rng);
                BoxElement split =
                    bacher_mul(BoxElement::embed_left(a), BoxElement::embed_right(b));
                ActionResult l = pi0_act_left(split, xi);
                ActionResult r = pi0_act_right(split, xi);
                CHECK_FALSE(l.overflowed());
                CHECK(l.value == r.value);
            }
        }
    }
}

TEST_CASE("pi0: sandwich reproduces the annular trace") {
    ModuleVector xi = ModuleVector::vacuum(8);
    for (int n = 1; n <= 2; ++n) {
        BoxElement g = embed_jw(n);
        ModuleVector right = pi0_act_right(g, xi).value;
        ActionResult left = pi0_act_left(g, right);
        TPoly sandwich = module_inner(left.value, xi);
        CHECK(sandwich == annular_trace(jones_wenzl(2 * n)));
    }
}

TEST_CASE("pi0: truncation overflow is flagged, not dropped") {
    ModuleVector xi = ModuleVector::vacuum(1);
    std::mt19937_64 rng(49);
    BoxElement x = random_box(2, 1, rng);
    while (x.total_degree() < 2) x = random_box(2, 1, rng);
    ActionResult res = pi0_act_left(x, xi);
    CHECK(res.overflowed());
    for (const auto& key : res.overflow) CHECK(key.first + key.second > 1);
}

} // TEST_SUITE
