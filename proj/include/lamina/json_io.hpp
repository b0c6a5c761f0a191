#pragma once

// JSON encodings. Angles are "p/q" strings; complex numbers are [re, im].

#include "lamina/lamination.hpp"
#include "lamina/model.hpp"
#include "lamina/ray_tracer.hpp"
#include "lamina/renormalization.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lamina {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(Complex z);
Json to_json(const RayTrace& trace);
Json to_json(const LandingResult& landing);
Json to_json(const AngleClass& c);
Json to_json(const Lamination& lam);
Json to_json(const ModelGraph& g);
Json to_json(const TuningData& t);
Json to_json(const CheckResult& r);
Json to_json(const OrderReport& r);
Json to_json(const ExactCheck& r);
Json to_json(const StrategicReport& r);

/// {"degree": d, "classes": [[...], ...], "warnings": [...]}; warnings optional.
Lamination lamination_from_json(const Json& j);

/// {"theta_minus", "theta_plus", "n", "d", "k"}; d and k default to 2.
TuningData tuning_from_json(const Json& j);

Json read_json_file(const std::string& path);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace lamina
