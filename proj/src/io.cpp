#include "tlj/io.hpp"

namespace tlj {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.set(std::stol(it.key()), mpz_class(it.value().get<std::string>()));
    return p;
}

json to_json(const Scalar& s) {
    return json{{"num", to_json(s.num())}, {"den", to_json(s.den())}};
}

Scalar scalar_from_json(const json& j) {
    return Scalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const TPoly& p) {
    json coeffs = json::array();
    for (const Scalar& c : p.coeffs()) coeffs.push_back(to_json(c));
    return json{{"coeffs", coeffs}};
}

TPoly tpoly_from_json(const json& j) {
    std::vector<Scalar> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(c));
    return TPoly(std::move(coeffs));
}

json to_json(const TLElement& x) {
    json terms = json::array();
    for (const auto& [d, c] : x.terms())
        terms.push_back(json{{"pairing", d.pairing()}, {"coeff", to_json(c)}});
    return json{{"size", x.size()}, {"terms", terms}};
}

TLElement tl_element_from_json(const json& j) {
    TLElement x(j.at("size").get<int>());
    for (const auto& t : j.at("terms")) {
        TLDiagram d(x.size(), t.at("pairing").get<std::vector<int>>());
        x.add_term(d, scalar_from_json(t.at("coeff")));
    }
    return x;
}

json gram_to_json(int n) {
    const auto& basis = enumerate_annular_basis(n);
    auto g = gram_matrix(n);
    json jbasis = json::array();
    for (const auto& d : basis)
        jbasis.push_back(json{{"matching", d.matching().pairing()}, {"hole_face", d.hole_face()}});
    json entries = json::array();
    for (const auto& row : g) {
        json jrow = json::array();
        for (const auto& e : row) jrow.push_back(to_json(e));
        entries.push_back(jrow);
    }
    return json{{"schema", 1}, {"n", n}, {"basis", jbasis}, {"entries", entries}};
}

} // namespace tlj
