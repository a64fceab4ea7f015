#pragma once

#include <string>

#include <json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/poly.hpp"

namespace hecke {

using Json = nlohmann::json;

// Directory holding the bundled reference tables; HECKE_DATA_DIR in the
// environment overrides the compiled-in default.
std::string data_dir();

Json load_json_file(const std::string& path);

Json poly_to_json(const Poly& p);
Poly poly_from_json(ParamSpecPtr spec, const Json& j);

Json element_to_json(const HeckeElement& x);
HeckeElement element_from_json(const AlgebraPtr& alg, const Json& j);

}  // namespace hecke
