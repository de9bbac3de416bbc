#pragma once

// JSON shapes:
//   Rational          "p/q"
//   GaussianRational  {"re": "p/q", "im": "p/q"}   (a bare "p/q" is accepted as real)
//   polynomial        [c0, c1, ...]                 ascending degree
//   SystemTuple       {"n": int, "field": "R"|"C", "polys": [[...], ...]}
//   configuration     [[re, im], ...]

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyspace/nonres.hpp"

namespace polyspace {

using Json = nlohmann::json;

/// Malformed or mistyped input. The message names the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const QPoly& p);
/// Real coefficients print as plain "p/q" strings.
Json to_json(const GPoly& p);
Json to_json(const SystemTuple& t);
Json to_json(std::complex<double> z);

Rational rational_from_json(const Json& j, const std::string& field);
GaussianRational gaussian_from_json(const Json& j, const std::string& field);
QPoly qpoly_from_json(const Json& j, const std::string& field);
GPoly gpoly_from_json(const Json& j, const std::string& field);
SystemTuple tuple_from_json(const Json& j);
std::vector<std::complex<double>> configuration_from_json(const Json& j, const std::string& field);

/// Parses text into JSON, raising InputError on syntax errors.
Json parse_json(const std::string& text);

/// Decimal text with 15 significant digits.
std::string format_double(double x);

}  // namespace polyspace
