#include <doctest.h>

#include "corpus.hpp"
#include "tlj/jw.hpp"
#include "tlj/parser.hpp"

using namespace tlj;
using tlj_corpus::kExpressions;

TEST_SUITE("parser") {

TEST_CASE("paper-derived evaluation examples") {
    // [5]_q
    Value v = evaluate(parse("tr(jw(4))"));
    REQUIRE(std::holds_alternative<Scalar>(v));
    CHECK(std::get<Scalar>(v) == qint(5));
    // e_1^2 - d e_1 = 0 in TL_2
    Value z = evaluate(parse("e_1*e_1 - d*e_1"));
    REQUIRE(std::holds_alternative<TLElement>(z));
    CHECK(std::get<TLElement>(z).is_zero());
    // annular trace of g_1
    Value a = evaluate(parse("atr(jw(2))"));
    REQUIRE(std::holds_alternative<TPoly>(a));
    CHECK(std::get<TPoly>(a) == qint_t(3));
    CHECK(value_str(a) == "t^2 - 1");
}

TEST_CASE("corpus round-trips through print") {
    CHECK(std::size(kExpressions) == tlj_corpus::kCount);
    for (const char* src : kExpressions) {
        ExprAST ast = parse(src);
        ExprAST again = parse(print(ast));
        CHECK_MESSAGE(ast_equal(ast, again), src);
    }
}

TEST_CASE("corpus evaluates without type errors") {
    for (const char* src : kExpressions) evaluate(parse(src));
}

TEST_CASE("rational literals via division") {
    Value v = evaluate(parse("5/3"));
    CHECK(std::get<Scalar>(v) == Scalar::rational(5, 3));
    CHECK(std::get<Scalar>(evaluate(parse("3/4 + 1/4"))) == Scalar(1));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse("jw(2"), parse_error);
    CHECK_THROWS_AS(parse("e_1 +"), parse_error);
    CHECK_THROWS_AS(parse("1 2"), parse_error);
    CHECK_THROWS_AS(parse("foo(3)"), parse_error);
    try {
        parse("tr(jw(2)");
    } catch (const parse_error& e) {
        CHECK(e.position == 9);
    }
}

TEST_CASE("type errors: sizes and kinds") {
    CHECK_THROWS_AS(evaluate(parse("e_1@2 + e_1@3")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("inner(e_1@2, e_1@3)")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("tr(q)")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("t*e_1")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("(e_1)@3")), domain_error); // computed size is 2
    CHECK_THROWS_AS(evaluate(parse("atr(id_3)")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("e_3@2")), domain_error);
    CHECK_THROWS_AS(evaluate(parse("1/0")), domain_error);
}

TEST_CASE("default sizes and ascription") {
    Value v = evaluate(parse("e_1"));
    CHECK(std::get<TLElement>(v).size() == 2);
    Value w = evaluate(parse("e_1@4"));
    CHECK(std::get<TLElement>(w).size() == 4);
    Value u = evaluate(parse("(e_1@3 + e_2)@3"));
    CHECK(std::get<TLElement>(u).size() == 3);
}

} // TEST_SUITE
