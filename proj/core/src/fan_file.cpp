#include "toradd/fan_file.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    static const std::regex decimal("-?(0|[1-9][0-9]*)");
    const auto& s = v.get_ref<const std::string&>();
    if (std::regex_match(s, decimal)) return Integer(s);
    throw InputError(where + ": \"" + s + "\" is not a decimal integer");
  }
  if (v.is_number_float()) {
    throw InputError(where + ": not an integer (write large values as decimal strings)");
  }
  throw InputError(where + ": expected an integer");
}

}  // namespace

FanFile parse_fan_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("malformed fan file at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("fan file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "rays" && key != "label" && key != "assume_complete") {
      throw InputError("unknown field \"" + key + "\"");
    }
  }

  FanFile ff;
  if (!doc.contains("dim")) throw InputError("missing field \"dim\"");
  const Integer dim = parse_integer(doc["dim"], "dim");
  if (dim < 1 || dim > 64) throw InputError("dim: must be between 1 and 64");
  ff.dim = dim.get_ui();

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError("label: expected a string");
    ff.label = doc["label"].get<std::string>();
  }
  if (doc.contains("assume_complete")) {
    if (!doc["assume_complete"].is_boolean()) throw InputError("assume_complete: expected a boolean");
    ff.assume_complete = doc["assume_complete"].get<bool>();
  }

  if (!doc.contains("rays")) throw InputError("missing field \"rays\"");
  const json& rays = doc["rays"];
  if (!rays.is_array()) throw InputError("rays: expected an array of integer arrays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array()) throw InputError(where + ": expected an array");
    if (rays[i].size() != ff.dim) {
      throw InputError(where + ": has " + std::to_string(rays[i].size()) +
                       " entries, dim is " + std::to_string(ff.dim));
    }
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < ff.dim; ++k) {
      coords.push_back(parse_integer(rays[i][k], where + "[" + std::to_string(k) + "]"));
    }
    LatticeVector v(std::move(coords));
    if (v.is_zero()) throw InputError(where + ": zero vector has no primitive generator");
    LatticeVector p = primitive(v);
    if (!(p == v)) {
      ff.warnings.push_back("ray " + std::to_string(i + 1) + " " + v.to_string() +
                            " normalized to primitive " + p.to_string());
    }
    const auto dup = std::find(ff.rays.begin(), ff.rays.end(), p);
    if (dup != ff.rays.end()) {
      throw InputError(where + ": duplicates ray " +
                       std::to_string(dup - ff.rays.begin() + 1) + " " + p.to_string());
    }
    ff.rays.push_back(std::move(p));
  }
  if (ff.rays.size() < ff.dim + 1) {
    throw InputError("rays: a complete fan in dimension " + std::to_string(ff.dim) +
                     " needs at least " + std::to_string(ff.dim + 1) + " rays, got " +
                     std::to_string(ff.rays.size()));
  }
  return ff;
}

FanFile load_fan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fan_file(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace toradd
