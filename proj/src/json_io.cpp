#include "polyspace/json_io.hpp"

#include <cstdio>

namespace polyspace {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const QPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

Json to_json(const GPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.is_real() ? Json(to_string(c.re)) : to_json(c));
    return arr;
}

Json to_json(const SystemTuple& t) {
    Json polys = Json::array();
    for (const auto& p : t.polys()) polys.push_back(to_json(p));
    return Json{{"n", t.n()}, {"field", t.field() == FieldTag::RationalReal ? "R" : "C"}, {"polys", polys}};
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Rational rational_from_json(const Json& j, const std::string& field) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const DomainError& e) {
        throw InputError(field + ": " + e.what());
    }
    throw InputError(field + ": expected a rational string \"p/q\"");
}

GaussianRational gaussian_from_json(const Json& j, const std::string& field) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im")) throw InputError(field + ": Gaussian rational needs \"re\" and \"im\"");
        return {rational_from_json(j["re"], field + ".re"), rational_from_json(j["im"], field + ".im")};
    }
    return GaussianRational(rational_from_json(j, field));
}

QPoly qpoly_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field + ": expected an array of coefficients");
    std::vector<Rational> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return QPoly(std::move(c));
}

GPoly gpoly_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field + ": expected an array of coefficients");
    std::vector<GaussianRational> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(gaussian_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return GPoly(std::move(c));
}

SystemTuple tuple_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("tuple: expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("n: expected an integer");
    if (!j.contains("polys") || !j["polys"].is_array()) throw InputError("polys: expected an array");
    FieldTag field = FieldTag::RationalReal;
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (f == "R")
            field = FieldTag::RationalReal;
        else if (f == "C")
            field = FieldTag::GaussianComplex;
        else
            throw InputError("field: expected \"R\" or \"C\"");
    }
    std::vector<GPoly> polys;
    for (std::size_t k = 0; k < j["polys"].size(); ++k)
        polys.push_back(gpoly_from_json(j["polys"][k], "polys[" + std::to_string(k) + "]"));
    return SystemTuple(std::move(polys), j["n"].get<int>(), field);
}

std::vector<std::complex<double>> configuration_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field + ": expected an array of [re, im] pairs");
    std::vector<std::complex<double>> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& p = j[k];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw InputError(field + "[" + std::to_string(k) + "]: expected [re, im]");
        out.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("input: malformed JSON: ") + e.what());
    }
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace polyspace
