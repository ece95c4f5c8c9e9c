#include "nacog/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nacog {

using json = nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw FormatError(field + ": " + what);
}

void require_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const char* k : keys)
    if (!obj.contains(k)) fail(where.empty() ? std::string(k) : where + "." + k, "missing field");
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) == keys.end())
      fail(where.empty() ? key : where + "." + key, "unknown field");
  }
}

std::size_t read_index(const json& v, const std::string& field, std::size_t dim) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  const auto value = v.get<std::int64_t>();
  if (value < 1 || static_cast<std::uint64_t>(value) > dim)
    fail(field, "index " + std::to_string(value) + " out of range [1, " + std::to_string(dim) + "]");
  return static_cast<std::size_t>(value - 1);
}

}  // namespace

Structure parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError("line " + std::to_string(line_of(text, e.byte)) + ": invalid JSON (" +
                      e.what() + ")");
  }
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  require_keys(doc, {"kind", "dimension", "constants"}, "");

  if (!doc["kind"].is_string()) fail("kind", "expected a string");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "algebra" && kind != "coalgebra") fail("kind", "expected \"algebra\" or \"coalgebra\"");

  const json& dim_field = doc["dimension"];
  if (!dim_field.is_number_integer()) fail("dimension", "expected an integer");
  if (dim_field.get<std::int64_t>() < 1) fail("dimension", "must be at least 1");
  const auto dim = static_cast<std::size_t>(dim_field.get<std::int64_t>());

  const json& constants = doc["constants"];
  if (!constants.is_array()) fail("constants", "expected an array");

  const bool is_algebra = kind == "algebra";
  Algebra a(dim);
  Coalgebra c(dim);
  for (std::size_t r = 0; r < constants.size(); ++r) {
    const std::string where = "constants[" + std::to_string(r) + "]";
    const json& rec = constants[r];
    if (!rec.is_object()) fail(where, "expected an object");
    require_keys(rec, {"i", "j", "k", "c"}, where);
    const std::size_t i = read_index(rec["i"], where + ".i", dim);
    const std::size_t j = read_index(rec["j"], where + ".j", dim);
    const std::size_t k = read_index(rec["k"], where + ".k", dim);
    if (!rec["c"].is_string()) fail(where + ".c", "expected a rational string such as \"-1/2\"");
    Rat value;
    try {
      value = Rat::parse(rec["c"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where + ".c", e.what());
    }
    if (is_algebra)
      a.constant(i, j, k) += value;
    else
      c.constant(k, i, j) += value;
  }
  if (is_algebra) return a;
  return c;
}

Structure read_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

namespace {

struct Record {
  std::size_t i, j, k;
  const Rat* value;
};

std::string render(const char* kind, std::size_t dim, const std::vector<Record>& records) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"" << kind << "\",\n  \"dimension\": " << dim << ",\n  \"constants\": [";
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    os << (r ? ",\n" : "\n") << "    {\"i\": " << rec.i + 1 << ", \"j\": " << rec.j + 1
       << ", \"k\": " << rec.k + 1 << ", \"c\": \"" << *rec.value << "\"}";
  }
  os << (records.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

}  // namespace

std::string serialize(const Algebra& a) {
  std::vector<Record> records;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.constant(i, j, k).is_zero()) records.push_back({i, j, k, &a.constant(i, j, k)});
  return render("algebra", n, records);
}

std::string serialize(const Coalgebra& c) {
  std::vector<Record> records;
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.constant(k, i, j).is_zero()) records.push_back({i, j, k, &c.constant(k, i, j)});
  return render("coalgebra", n, records);
}

std::string serialize(const Structure& s) {
  return std::visit([](const auto& x) { return serialize(x); }, s);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace nacog
