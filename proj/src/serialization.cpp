#include "hecke/serialization.hpp"

namespace hecke {

namespace {

Json poly_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(Json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
    return arr;
}

LaurentPoly poly_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& t : j) {
        int e = t.at(0).get<int>();
        mpz_class num(t.at(1).get<std::string>());
        mpz_class den(t.at(2).get<std::string>());
        if (den <= 0) throw Error("coefficient denominator must be positive");
        Rational c(num, den);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

} // namespace

Json scalar_to_json(const RationalScalar& s) {
    return Json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

RationalScalar scalar_from_json(const Json& j) {
    return RationalScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json operator_to_json(const TensorOperator& op) {
    Json entries = Json::array();
    std::vector<std::pair<MIndex, MIndex>> keys; // (row, col)
    for (const auto& [c, col] : op.columns())
        for (const auto& [r, v] : col) keys.emplace_back(r, c);
    std::sort(keys.begin(), keys.end());
    for (const auto& [r, c] : keys)
        entries.push_back(Json::array({r, c, scalar_to_json(op.entry(r, c))}));
    return Json{{"d", op.dim()},
                {"row_pow", op.row_pow()},
                {"col_pow", op.col_pow()},
                {"entries", entries}};
}

TensorOperator operator_from_json(const Json& j) {
    TensorOperator op(j.at("d").get<int>(), j.at("row_pow").get<int>(),
                      j.at("col_pow").get<int>());
    for (const auto& t : j.at("entries"))
        op.add_entry(t.at(0).get<MIndex>(), t.at(1).get<MIndex>(), scalar_from_json(t.at(2)));
    return op;
}

Json vector_to_json(const TensorVector& v) {
    Json entries = Json::array();
    for (const auto& [i, c] : v.entries()) entries.push_back(Json::array({i, scalar_to_json(c)}));
    return Json{{"d", v.dim()}, {"n", v.power()}, {"entries", entries}};
}

TensorVector vector_from_json(const Json& j) {
    TensorVector v(j.at("d").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("entries"))
        v.add_entry(t.at(0).get<MIndex>(), scalar_from_json(t.at(1)));
    return v;
}

} // namespace hecke
