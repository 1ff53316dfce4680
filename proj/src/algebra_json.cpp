#include "algebra_json.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "scalar.hpp"

namespace quatrec {

namespace {

nlohmann::json base_to_json(const BaseRing& base) {
  switch (base.kind) {
    case RingKind::Rational: return "Q";
    case RingKind::Integer: return "Z";
    case RingKind::PrimeField: return nlohmann::json{{"Fp", base.p}};
  }
  throw InputError("unknown base ring");
}

BaseRing base_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return BaseRing::Q();
    if (s == "Z") return BaseRing::Z();
    throw InputError("base must be \"Q\", \"Z\", or {\"Fp\": p}; got \"" + s + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_integer())
    return BaseRing::Fp(j["Fp"].get<std::int64_t>());
  throw InputError("base must be \"Q\", \"Z\", or {\"Fp\": p}");
}

Scalar scalar_at(const nlohmann::json& j, const BaseRing& base, const std::string& where) {
  if (!j.is_string()) throw InputError(where + " must be a scalar string");
  try {
    return parse_scalar(j.get<std::string>(), base);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

nlohmann::json algebra_to_json(const AlgebraPresentation& a) {
  nlohmann::json j;
  j["base"] = base_to_json(a.base);
  j["dim"] = a.dim;
  nlohmann::json unit = nlohmann::json::array();
  for (const Scalar& c : a.unit.coords) unit.push_back(c.to_string());
  j["unit"] = std::move(unit);
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t s = 0; s < a.dim; ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t t = 0; t < a.dim; ++t) {
      nlohmann::json prod = nlohmann::json::array();
      for (const Scalar& c : a.table[s][t].coords) prod.push_back(c.to_string());
      row.push_back(std::move(prod));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  j["names"] = a.names;
  return j;
}

AlgebraPresentation algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  for (const char* key : {"base", "dim", "unit", "table"})
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");

  AlgebraPresentation a;
  a.base = base_from_json(j["base"]);
  if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1)
    throw InputError("dim must be a positive integer");
  a.dim = j["dim"].get<std::size_t>();
  if (a.dim > 4096) throw InputError("dim is implausibly large");

  const nlohmann::json& unit = j["unit"];
  if (!unit.is_array() || unit.size() != a.dim)
    throw InputError("unit must be an array of dim scalar strings");
  a.unit = Element{std::vector<Scalar>()};
  for (std::size_t u = 0; u < a.dim; ++u)
    a.unit.coords.push_back(scalar_at(unit[u], a.base, "unit[" + std::to_string(u) + "]"));

  const nlohmann::json& table = j["table"];
  if (!table.is_array() || table.size() != a.dim) throw InputError("table must have dim rows");
  for (std::size_t s = 0; s < a.dim; ++s) {
    const nlohmann::json& row = table[s];
    if (!row.is_array() || row.size() != a.dim)
      throw InputError("table[" + std::to_string(s) + "] must have dim entries");
    std::vector<Element> out_row;
    for (std::size_t t = 0; t < a.dim; ++t) {
      const nlohmann::json& prod = row[t];
      std::string where = "table[" + std::to_string(s) + "][" + std::to_string(t) + "]";
      if (!prod.is_array() || prod.size() != a.dim)
        throw InputError(where + " must be an array of dim scalar strings");
      Element e{std::vector<Scalar>()};
      for (std::size_t u = 0; u < a.dim; ++u)
        e.coords.push_back(scalar_at(prod[u], a.base, where + "[" + std::to_string(u) + "]"));
      out_row.push_back(std::move(e));
    }
    a.table.push_back(std::move(out_row));
  }

  if (j.contains("names")) {
    const nlohmann::json& names = j["names"];
    if (!names.is_array() || names.size() != a.dim)
      throw InputError("names must be an array of dim strings");
    for (std::size_t s = 0; s < a.dim; ++s) {
      if (!names[s].is_string()) throw InputError("names[" + std::to_string(s) + "] must be a string");
      a.names.push_back(names[s].get<std::string>());
    }
  } else {
    for (std::size_t s = 0; s < a.dim; ++s) a.names.push_back("e" + std::to_string(s));
  }
  return a;
}

AlgebraPresentation load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return algebra_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_algebra(const AlgebraPresentation& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << algebra_to_json(a).dump(2) << '\n';
  if (!out) throw InputError("failed writing " + path);
}

std::string algebra_digest(const AlgebraPresentation& a) {
  std::uint64_t h = fnv1a64(algebra_to_json(a).dump());
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

}  // namespace quatrec
