#include "qfaulhaber/json_io.hpp"

namespace qfaulhaber {

nlohmann::json poly_to_json(const TPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (int e = 0; e <= p.degree(); ++e) {
        const Integer& c = p.coeff(e);
        if (c == 0) continue;
        terms.push_back(nlohmann::json::array({e, c.get_str()}));
    }
    return nlohmann::json{{"variable", "t"}, {"note", "q = t^2"}, {"terms", std::move(terms)}};
}

TPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw Error("poly_from_json: missing terms array");
    TPoly p;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw Error("poly_from_json: term must be [exponent, \"coefficient\"]");
        int e = term[0].get<int>();
        if (e < 0) throw Error("poly_from_json: negative exponent");
        Integer c;
        try {
            c = Integer(term[1].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw Error("poly_from_json: bad coefficient string");
        }
        p += TPoly::monomial(std::move(c), e);
    }
    return p;
}

}  // namespace qfaulhaber
