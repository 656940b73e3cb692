#include "lnz/document.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "lnz/error.hpp"

namespace lnz {

namespace {

using nlohmann::json;

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorCode::SyntaxError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t p = 0; p < stop; ++p) {
      if (text[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::SyntaxError,
                "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column), line, column);
  }
}

long long require_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) syntax(where + ": missing \"" + key + "\"");
  if (!it->is_number_integer()) syntax(where + ": \"" + key + "\" must be an integer");
  return it->get<long long>();
}

Rational fraction(const json& v, const std::string& where) {
  if (!v.is_string()) syntax(where + ": coefficients must be fraction strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    syntax(where + ": " + e.what());
  }
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) syntax(where + ": unexpected key \"" + it.key() + "\"");
  }
}

std::size_t basis_index(long long v, std::size_t n, const std::string& where) {
  if (v < 1 || static_cast<unsigned long long>(v) > n)
    throw Error(ErrorCode::IndexError, where + ": basis index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(v);
}

std::size_t read_dim(const json& doc) {
  long long dim = require_int(doc, "dim", "document");
  if (dim < 1) syntax("document: \"dim\" must be >= 1");
  return static_cast<std::size_t>(dim);
}

}  // namespace

std::string serialize_algebra(const StructureTensor& a) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << a.dim() << ",\n";
  if (!a.name().empty()) out << "  \"name\": " << json(a.name()).dump() << ",\n";
  std::vector<std::string> rows;
  for (std::size_t i = 1; i <= a.dim(); ++i)
    for (std::size_t j = 1; j <= a.dim(); ++j) {
      const auto& entry = a.product(i, j);
      if (entry.empty()) continue;
      std::string row = "{\"i\": " + std::to_string(i) + ", \"j\": " + std::to_string(j) + ", \"terms\": [";
      for (std::size_t t = 0; t < entry.size(); ++t) {
        if (t) row += ", ";
        row += "[" + std::to_string(entry[t].k) + ", \"" + entry[t].c.str() + "\"]";
      }
      rows.push_back(row + "]}");
    }
  if (rows.empty()) {
    out << "  \"table\": []\n";
  } else {
    out << "  \"table\": [\n";
    for (std::size_t r = 0; r < rows.size(); ++r) out << "    " << rows[r] << (r + 1 < rows.size() ? ",\n" : "\n");
    out << "  ]\n";
  }
  out << "}\n";
  return out.str();
}

StructureTensor parse_algebra(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) syntax("document must be an object");
  check_keys(doc, {"dim", "name", "table"}, "document");
  const std::size_t n = read_dim(doc);
  StructureTensor a(n);
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) syntax("document: \"name\" must be a string");
    a.set_name(it->get<std::string>());
  }
  auto table = doc.find("table");
  if (table == doc.end()) return a;
  if (!table->is_array()) syntax("document: \"table\" must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t index = 0;
  for (const auto& entry : *table) {
    const std::string where = "table entry " + std::to_string(index++);
    if (!entry.is_object()) syntax(where + ": must be an object");
    check_keys(entry, {"i", "j", "terms"}, where);
    const std::size_t i = basis_index(require_int(entry, "i", where), n, where);
    const std::size_t j = basis_index(require_int(entry, "j", where), n, where);
    if (!seen.insert({i, j}).second)
      throw Error(ErrorCode::DuplicateEntry, where + ": repeated pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    auto terms = entry.find("terms");
    if (terms == entry.end() || !terms->is_array()) syntax(where + ": \"terms\" must be an array");
    std::set<std::size_t> ks;
    for (const auto& term : *terms) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
        syntax(where + ": each term must be [k, \"p/q\"]");
      const std::size_t k = basis_index(term[0].get<long long>(), n, where);
      if (!ks.insert(k).second)
        throw Error(ErrorCode::DuplicateEntry, where + ": repeated term k=" + std::to_string(k));
      a.add(i, j, k, fraction(term[1], where));
    }
  }
  return a;
}

std::string serialize_change(const MatrixQ& m) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << m.rows() << ",\n  \"matrix\": [\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "    [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << '"' << m(r, c).str() << '"';
    out << (r + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

MatrixQ parse_change(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) syntax("document must be an object");
  check_keys(doc, {"dim", "matrix"}, "document");
  const std::size_t n = read_dim(doc);
  auto rows = doc.find("matrix");
  if (rows == doc.end() || !rows->is_array() || rows->size() != n)
    syntax("document: \"matrix\" must be an array of " + std::to_string(n) + " rows");
  MatrixQ m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = (*rows)[r];
    const std::string where = "matrix row " + std::to_string(r + 1);
    if (!row.is_array() || row.size() != n) syntax(where + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = fraction(row[c], where);
  }
  return m;
}

}  // namespace lnz
