#include "modsym/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

using nlohmann::json;

namespace {

Matrix matrix_from(int order, const std::vector<std::vector<CycloNum>>& rows) {
  const int r = static_cast<int>(rows.size());
  Matrix m(order, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<RootOfUnity> roots(int order, std::initializer_list<std::int64_t> exps) {
  std::vector<RootOfUnity> out;
  for (auto e : exps) out.emplace_back(order, e);
  return out;
}

CycloNum golden_ratio() {
  // (1 + sqrt 5) / 2 with sqrt 5 = z - z^2 - z^3 + z^4.
  return CycloNum::make(5, {{0, Rational(1, 2)}, {1, Rational(1, 2)}, {2, Rational(-1, 2)}, {3, Rational(-1, 2)},
                            {4, Rational(1, 2)}});
}

CycloNum sqrt2_16() { return CycloNum::make(16, {{2, 1}, {14, 1}}); }

CatalogEntry make_entry(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "trivial") {
    e.data = ModularData::create(name, Matrix::identity(1, 1), roots(1, {0}));
    e.expected = {CycloNum::integer(1, 1), 1, 1, Rational(0)};
  } else if (name == "fibonacci") {
    const CycloNum one = CycloNum::integer(5, 1);
    const CycloNum phi = golden_ratio();
    e.data = ModularData::create(name, matrix_from(5, {{one, phi}, {phi, -one}}), roots(5, {0, 2}));
    e.expected = {CycloNum::integer(5, 2) + phi, 5, 10, Rational(14, 5)};
  } else if (name == "semion") {
    const CycloNum one = CycloNum::integer(1, 1);
    e.data = ModularData::create(name, matrix_from(1, {{one, one}, {one, -one}}), roots(4, {0, 1}));
    e.expected = {CycloNum::integer(1, 2), 4, 4, Rational(1)};
  } else if (name == "ising") {
    const CycloNum one = CycloNum::integer(16, 1);
    const CycloNum zero(16);
    const CycloNum r2 = sqrt2_16();
    e.data = ModularData::create(name, matrix_from(16, {{one, r2, one}, {r2, zero, -r2}, {one, -r2, one}}),
                                 roots(16, {0, 1, 8}));
    e.expected = {CycloNum::integer(1, 4), 16, 8, Rational(1, 2)};
  } else if (name == "toric") {
    const CycloNum p = CycloNum::integer(1, 1);
    const CycloNum m = -p;
    e.data = ModularData::create(name, matrix_from(1, {{p, p, p, p}, {p, p, m, m}, {p, m, p, m}, {p, m, m, p}}),
                                 roots(2, {0, 0, 0, 1}));
    e.expected = {CycloNum::integer(1, 4), 2, 1, Rational(0)};
  } else if (name == "pointed_z3") {
    std::vector<std::vector<CycloNum>> rows(3, std::vector<CycloNum>(3));
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) rows[j][k] = CycloNum::root(3, j * k);
    e.data = ModularData::create(name, matrix_from(3, rows), roots(3, {0, 1, 4}));
    e.expected = {CycloNum::integer(1, 3), 3, 2, Rational(2)};
  } else {
    throw InvalidInput("unknown builtin '" + name + "'");
  }
  e.expected.dim = promote(e.expected.dim, e.data.ambient());
  return e;
}

// ---------------------------------------------------------------------------

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw ParseError(where + ": not a decimal integer");
    return out;
  }
  throw ParseError(where + ": expected an integer");
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t positive_int(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  return v.get<std::int64_t>();
}

CycloNum parse_literal(const json& v, int order, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a list of [num, den, exp] terms");
  std::vector<CycloTerm> terms;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tw = where + "[" + std::to_string(t) + "]";
    const json& term = v[t];
    if (!term.is_array() || term.size() != 3) throw ParseError(tw + ": expected [num, den, exp]");
    const Integer num = json_integer(term[0], tw + ".num");
    const Integer den = json_integer(term[1], tw + ".den");
    if (den == 0) throw ParseError(tw + ": zero denominator");
    if (!term[2].is_number_integer()) throw ParseError(tw + ".exp: expected an integer");
    Rational q(num, den);
    q.canonicalize();
    terms.push_back({term[2].get<std::int64_t>(), q});
  }
  return CycloNum::make(order, terms);
}

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::vector<std::string> builtin_names() { return {"trivial", "fibonacci", "semion", "ising", "toric", "pointed_z3"}; }

ModularData builtin(const std::string& name) { return make_entry(name).data; }

CatalogEntry catalog_entry(const std::string& name) { return make_entry(name); }

std::string literal_to_json(const CycloNum& z) {
  json terms = json::array();
  for (const auto& t : z.terms())
    terms.push_back(json::array({integer_json(t.coeff.get_num()), integer_json(t.coeff.get_den()), t.exponent}));
  return terms.dump();
}

ModularData from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const json& name = field(doc, "name");
  if (!name.is_string()) throw ParseError("field 'name' must be a string");
  const std::int64_t ambient = positive_int(doc, "ambient");
  if (ambient > 20000) throw ParseError("field 'ambient' is too large");
  const std::int64_t rank = positive_int(doc, "rank");
  const int m = static_cast<int>(ambient);

  const json& s = field(doc, "s_tilde");
  if (!s.is_array() || static_cast<std::int64_t>(s.size()) != rank)
    throw ParseError("s_tilde must have 'rank' rows");
  Matrix st(m, static_cast<int>(rank), static_cast<int>(rank));
  for (std::int64_t i = 0; i < rank; ++i) {
    const json& row = s[i];
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != rank)
      throw ParseError("s_tilde[" + std::to_string(i) + "] must have 'rank' entries (matrix must be square)");
    for (std::int64_t j = 0; j < rank; ++j)
      st(static_cast<int>(i), static_cast<int>(j)) =
          parse_literal(row[j], m, "s_tilde[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }

  const json& th = field(doc, "theta");
  if (!th.is_array() || static_cast<std::int64_t>(th.size()) != rank)
    throw ParseError("theta must have 'rank' exponents");
  std::vector<RootOfUnity> theta;
  for (std::size_t i = 0; i < th.size(); ++i) {
    if (!th[i].is_number_integer()) throw ParseError("theta[" + std::to_string(i) + "]: expected an integer exponent");
    theta.emplace_back(m, th[i].get<std::int64_t>());
  }
  if (!theta[0].is_one()) throw InvalidInput("theta[0] exponent must be 0 (theta_0 = 1)");
  return ModularData::create(name.get<std::string>(), st, std::move(theta));
}

std::string to_json(const ModularData& data) {
  json doc;
  doc["name"] = data.name();
  doc["ambient"] = data.ambient();
  doc["rank"] = data.rank();
  json rows = json::array();
  for (int i = 0; i < data.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < data.rank(); ++j) row.push_back(json::parse(literal_to_json(data.s_tilde()(i, j))));
    rows.push_back(std::move(row));
  }
  doc["s_tilde"] = std::move(rows);
  json theta = json::array();
  for (const auto& t : data.theta()) theta.push_back(t.with_order(data.ambient()).exponent());
  doc["theta"] = std::move(theta);
  // Field order is fixed for stable output.
  std::ostringstream os;
  os << "{\n  \"name\": " << doc["name"].dump() << ",\n  \"ambient\": " << doc["ambient"].dump()
     << ",\n  \"rank\": " << doc["rank"].dump() << ",\n  \"s_tilde\": [\n";
  for (std::size_t i = 0; i < doc["s_tilde"].size(); ++i)
    os << "    " << doc["s_tilde"][i].dump() << (i + 1 < doc["s_tilde"].size() ? ",\n" : "\n");
  os << "  ],\n  \"theta\": " << doc["theta"].dump() << "\n}\n";
  return os.str();
}

ModularData read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void write(const ModularData& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json(data);
}

}  // namespace modsym
