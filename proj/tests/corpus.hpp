#pragma once

// Shared 50-expression corpus for the parser round-trip checks.

namespace tlj_corpus {

inline constexpr const char* kExpressions[] = {
    "1",
    "-7",
    "5/3",
    "q",
    "d",
    "t",
    "q + q^-1",
    "d - q - q^-1",
    "e_1",
    "e_2",
    "e_1@4",
    "id_3",
    "jw(4)",
    "tr(jw(4))",
    "atr(jw(2))",
    "adj(e_1)",
    "inner(e_1, e_1)",
    "e_1*e_1 - d*e_1",
    "(e_1@3 + e_2)@3",
    "tr(e_1@3*e_2)",
    "q^2",
    "q^-2",
    "t^2 - 1",
    "atr(jw(2)) - (t*t - 1)",
    "2^5",
    "-(q + 1)",
    "(q - 1)*(q + 1)",
    "tr(jw(2))*tr(jw(2))",
    "inner(jw(2), jw(2))",
    "inner(e_1*e_1, e_1)",
    "d*d - 1",
    "tr(id_3)",
    "atr(id_2)",
    "atr(e_1)",
    "jw(2)*jw(2) - jw(2)",
    "adj(adj(e_1)) - e_1",
    "(1/2)*e_1",
    "e_1/2",
    "e_1/d",
    "tr(e_1@3*e_2*e_1@3 - e_1@3)",
    "q*q - 2 + q^-2",
    "inner(adj(e_1), e_1)",
    "id_2 - e_1/d",
    "tr((id_2 - e_1/d)@2)",
    "3/4 + 1/4",
    "t*t*t",
    "atr(jw(4))",
    "(e_1@3 - e_2)*(e_1@3 - e_2)",
    "tr(jw(3)*e_1@3)",
    "inner(id_4, jw(4))",
};

inline constexpr int kCount = 50;

} // namespace tlj_corpus
