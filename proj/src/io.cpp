#include "wba/io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "wba/errors.hpp"

namespace wba {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t size_of(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  if (j.size() != n) bad(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  return j;
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(where + ": expected a name");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a name");
  const std::string s = j.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return i;
  bad(where + ": unknown name \"" + s + "\"");
}

void require_unique(const std::vector<std::string>& names, const std::string& where) {
  std::map<std::string, int> seen;
  for (const auto& n : names)
    if (seen[n]++) bad(where + ": duplicate name \"" + n + "\"");
}

mpq_class rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
  if (!j.is_string()) bad(where + ": expected a rational as \"p/q\" or an integer");
  static const std::regex form(R"(-?[0-9]+(/[0-9]+)?)");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, form)) bad(where + ": malformed rational \"" + s + "\"");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) bad(where + ": malformed rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

Json rational_to_json(const mpq_class& q) { return q.get_str(); }

}  // namespace

Json field_to_json(const Field& f) {
  if (f.kind() == Field::Kind::Rationals) return {{"kind", "Q"}};
  return {{"kind", "Qzeta"}, {"N", f.order()}};
}

const Field& field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::Q();
  const Json& kind = member(j, "kind", "field");
  if (kind == "Q") return Field::Q();
  if (kind == "Qzeta") {
    const std::size_t n = size_of(member(j, "N", "field"), "field.N");
    if (n < 1 || n > 256) bad("field.N: out of range 1..256");
    return Field::Qzeta(static_cast<int>(n));
  }
  bad("field.kind: expected \"Q\" or \"Qzeta\"");
}

Json scalar_to_json(const Scalar& s, const Field& f) {
  if (f.kind() == Field::Kind::Rationals) return rational_to_json(s.is_zero() ? mpq_class(0) : s.rational());
  Json out = Json::array();
  const std::vector<mpq_class> c = s.is_zero() ? std::vector<mpq_class>(f.degree()) : s.coeffs();
  for (int k = 0; k < f.degree(); ++k) out.push_back(rational_to_json(k < static_cast<int>(c.size()) ? c[k] : 0));
  return out;
}

Scalar scalar_from_json(const Json& j, const Field& f) {
  if (!j.is_array()) return Scalar(f, rational_from_json(j, "scalar"));
  if (j.size() != static_cast<std::size_t>(f.degree()))
    bad("scalar: expected " + std::to_string(f.degree()) + " coefficients over " + f.describe());
  std::vector<mpq_class> c;
  for (const auto& x : j) c.push_back(rational_from_json(x, "scalar"));
  return Scalar(f, c);
}

Json vector_to_json(const Vector& v, const Field& f) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s, f));
  return out;
}

Vector vector_from_json(const Json& j, const Field& f, std::size_t n) {
  array_of(j, n, "vector");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Json matrix_to_json(const Matrix& m, const Field& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i), f));
  return out;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols) {
  array_of(j, rows, "matrix");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(j[i], f, cols);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

Json algebra_to_json(const FinAlgebra& a) {
  Json j;
  j["field"] = field_to_json(*a.field);
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim; ++k) row.push_back(vector_to_json(a.product(i, k), *a.field));
    mult.push_back(row);
  }
  j["mult"] = mult;
  j["unit"] = vector_to_json(a.unit, *a.field);
  return j;
}

FinAlgebra algebra_from_json(const Json& j) {
  FinAlgebra a;
  a.field = &field_from_json(j.contains("field") ? j["field"] : Json{{"kind", "Q"}});
  a.dim = size_of(member(j, "dim", "algebra"), "dim");
  a.basis = strings(member(j, "basis", "algebra"), "basis");
  if (a.basis.size() != a.dim) bad("basis: expected " + std::to_string(a.dim) + " labels");
  require_unique(a.basis, "basis");
  const Json& mult = array_of(member(j, "mult", "algebra"), a.dim, "mult");
  for (std::size_t i = 0; i < a.dim; ++i) {
    array_of(mult[i], a.dim, "mult[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < a.dim; ++k) a.mult.push_back(vector_from_json(mult[i][k], *a.field, a.dim));
  }
  a.unit = vector_from_json(member(j, "unit", "algebra"), *a.field, a.dim);
  return a;
}

Json frobenius_to_json(const FrobeniusAlgebra& r) {
  Json j = algebra_to_json(r.algebra);
  j["psi"] = vector_to_json(r.frob.psi, *r.algebra.field);
  j["frob"] = matrix_to_json(r.frob.frob, *r.algebra.field);
  return j;
}

FrobeniusAlgebra frobenius_from_json(const Json& j) {
  FrobeniusAlgebra r;
  r.algebra = algebra_from_json(j);
  const std::size_t n = r.algebra.dim;
  r.frob.psi = vector_from_json(member(j, "psi", "frobenius"), *r.algebra.field, n);
  r.frob.frob = matrix_from_json(member(j, "frob", "frobenius"), *r.algebra.field, n, n);
  return r;
}

Json wba_to_json(const WeakBialgebra& h) {
  Json j = algebra_to_json(h.alg);
  const Field& f = h.field();
  Json comult = Json::array();
  for (const auto& terms : h.coalg.comult) {
    Json row = Json::array();
    for (const auto& t : terms) row.push_back({t.left, t.right, scalar_to_json(t.coeff, f)});
    comult.push_back(row);
  }
  j["comult"] = comult;
  j["counit"] = vector_to_json(h.coalg.counit, f);
  if (h.antipode) j["antipode"] = matrix_to_json(*h.antipode, f);
  return j;
}

WeakBialgebra wba_from_json(const Json& j) {
  WeakBialgebra h;
  h.alg = algebra_from_json(j);
  const std::size_t n = h.alg.dim;
  const Field& f = h.field();
  h.coalg.dim = n;
  const Json& comult = array_of(member(j, "comult", "weak bialgebra"), n, "comult");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "comult[" + std::to_string(i) + "]";
    if (!comult[i].is_array()) bad(where + ": expected a list of [j, l, c]");
    std::vector<CoTerm> terms;
    for (const auto& t : comult[i]) {
      array_of(t, 3, where);
      const std::size_t l = size_of(t[0], where), r = size_of(t[1], where);
      if (l >= n || r >= n) bad(where + ": basis index out of range");
      terms.push_back({l, r, scalar_from_json(t[2], f)});
    }
    h.coalg.comult.push_back(std::move(terms));
  }
  h.coalg.counit = vector_from_json(member(j, "counit", "weak bialgebra"), f, n);
  if (j.contains("antipode")) h.antipode = matrix_from_json(j["antipode"], f, n, n);
  return h;
}

Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = c.objects;
  Json mor = Json::array();
  for (const auto& m : c.morphisms) mor.push_back({{"name", m.name}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
  j["morphisms"] = mor;
  Json comp = Json::object();
  for (std::size_t g = 0; g < c.size(); ++g)
    for (std::size_t h = 0; h < c.size(); ++h)
      if (auto k = c.composite(g, h)) comp[c.morphisms[g].name + "∘" + c.morphisms[h].name] = c.morphisms[*k].name;
  j["compose"] = comp;
  Json ids = Json::object();
  for (std::size_t x = 0; x < c.objects.size(); ++x) ids[c.objects[x]] = c.morphisms[c.identities[x]].name;
  j["identities"] = ids;
  if (c.inverse) {
    Json inv = Json::object();
    for (std::size_t g = 0; g < c.size(); ++g) inv[c.morphisms[g].name] = c.morphisms[(*c.inverse)[g]].name;
    j["inverse"] = inv;
  }
  return j;
}

FiniteCategory category_from_json(const Json& j) {
  FiniteCategory c;
  c.objects = strings(member(j, "objects", "category"), "objects");
  require_unique(c.objects, "objects");
  const Json& mor = member(j, "morphisms", "category");
  if (!mor.is_array()) bad("morphisms: expected an array");
  std::vector<std::string> names;
  for (const auto& m : mor) {
    Morphism x;
    const Json& name = member(m, "name", "morphism");
    if (!name.is_string()) bad("morphism.name: expected a string");
    x.name = name.get<std::string>();
    x.src = index_of(c.objects, member(m, "src", "morphism " + x.name), "morphism " + x.name + ".src");
    x.tgt = index_of(c.objects, member(m, "tgt", "morphism " + x.name), "morphism " + x.name + ".tgt");
    names.push_back(x.name);
    c.morphisms.push_back(x);
  }
  require_unique(names, "morphisms");
  const std::size_t n = names.size();
  c.compose.assign(n * n, std::nullopt);
  const Json& comp = member(j, "compose", "category");
  if (!comp.is_object()) bad("compose: expected an object");
  for (auto it = comp.begin(); it != comp.end(); ++it) {
    const std::string key = it.key();
    const auto sep = key.find("∘");
    if (sep == std::string::npos) bad("compose: key \"" + key + "\" is not of the form g∘h");
    const std::size_t g = index_of(names, key.substr(0, sep), "compose key " + key);
    const std::size_t h = index_of(names, key.substr(sep + std::string("∘").size()), "compose key " + key);
    c.compose[g * n + h] = index_of(names, it.value(), "compose[" + key + "]");
  }
  const Json& ids = member(j, "identities", "category");
  c.identities.resize(c.objects.size());
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    c.identities[x] = index_of(names, member(ids, c.objects[x].c_str(), "identities"), "identities." + c.objects[x]);
  if (j.contains("inverse")) {
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g)
      inv[g] = index_of(names, member(j["inverse"], names[g].c_str(), "inverse"), "inverse." + names[g]);
    c.inverse = inv;
  }
  return c;
}

Json span_to_json(const Span& a) {
  Json j;
  j["base"] = a.base;
  j["carrier"] = a.carrier;
  Json s = Json::object(), t = Json::object();
  for (std::size_t k = 0; k < a.carrier.size(); ++k) {
    s[a.carrier[k]] = a.base[a.s[k]];
    t[a.carrier[k]] = a.base[a.t[k]];
  }
  j["s"] = s;
  j["t"] = t;
  if (!a.name.empty()) j["name"] = a.name;
  return j;
}

Span span_from_json(const Json& j) {
  Span a;
  a.base = strings(member(j, "base", "span"), "base");
  a.carrier = strings(member(j, "carrier", "span"), "carrier");
  require_unique(a.base, "base");
  require_unique(a.carrier, "carrier");
  const Json &s = member(j, "s", "span"), &t = member(j, "t", "span");
  for (const auto& x : a.carrier) {
    a.s.push_back(index_of(a.base, member(s, x.c_str(), "span.s"), "s." + x));
    a.t.push_back(index_of(a.base, member(t, x.c_str(), "span.t"), "t." + x));
  }
  if (j.contains("name") && j["name"].is_string()) a.name = j["name"].get<std::string>();
  return a;
}

Json span_bimonoid_to_json(const SpanBimonoid& m) {
  Json j = span_to_json(m.span);
  const auto& c = m.span.carrier;
  Json mult = Json::object();
  for (std::size_t g = 0; g < c.size(); ++g)
    for (std::size_t h = 0; h < c.size(); ++h)
      if (auto k = m.mult[g * c.size() + h]) mult[c[g] + "∘" + c[h]] = c[*k];
  j["mult"] = mult;
  Json unit = Json::object();
  for (std::size_t x = 0; x < m.span.base.size(); ++x) unit[m.span.base[x]] = c[m.unit[x]];
  j["unit"] = unit;
  return j;
}

SpanBimonoid span_bimonoid_from_json(const Json& j) {
  SpanBimonoid m;
  m.span = span_from_json(j);
  const auto& c = m.span.carrier;
  const std::size_t n = c.size();
  m.mult.assign(n * n, std::nullopt);
  const Json& mult = member(j, "mult", "span bimonoid");
  if (!mult.is_object()) bad("mult: expected an object");
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    const std::string key = it.key();
    const auto sep = key.find("∘");
    if (sep == std::string::npos) bad("mult: key \"" + key + "\" is not of the form g∘h");
    const std::size_t g = index_of(c, key.substr(0, sep), "mult key " + key);
    const std::size_t h = index_of(c, key.substr(sep + std::string("∘").size()), "mult key " + key);
    m.mult[g * n + h] = index_of(c, it.value(), "mult[" + key + "]");
  }
  const Json& unit = member(j, "unit", "span bimonoid");
  for (const auto& x : m.span.base) m.unit.push_back(index_of(c, member(unit, x.c_str(), "unit"), "unit." + x));
  return m;
}

std::shared_ptr<const ReBase> re_base_from_json(const Json& r_ref) {
  if (r_ref.is_string()) {
    try {
      return make_re_base(builtin_frobenius(r_ref.get<std::string>()));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnknownName) bad(std::string("R: ") + e.what());
      throw;
    }
  }
  return make_re_base(frobenius_from_json(r_ref));
}

Json re_bimodule_to_json(const ReBimodule& m, const Json& r_ref) {
  Json j;
  j["R"] = r_ref;
  j["dim"] = m.dim;
  if (!m.name.empty()) j["name"] = m.name;
  const Field& f = m.base->field();
  Json l = Json::array(), r = Json::array();
  for (const auto& x : m.left) l.push_back(matrix_to_json(x, f));
  for (const auto& x : m.right) r.push_back(matrix_to_json(x, f));
  j["left"] = l;
  j["right"] = r;
  return j;
}

ReBimodule re_bimodule_from_json(const Json& j, const std::shared_ptr<const ReBase>& base) {
  ReBimodule m;
  m.base = base;
  m.dim = size_of(member(j, "dim", "bimodule"), "dim");
  const std::size_t dd = base->d * base->d;
  const Field& f = base->field();
  const Json &l = array_of(member(j, "left", "bimodule"), dd, "left"), &r = array_of(member(j, "right", "bimodule"), dd, "right");
  for (std::size_t x = 0; x < dd; ++x) {
    m.left.push_back(matrix_from_json(l[x], f, m.dim, m.dim));
    m.right.push_back(matrix_from_json(r[x], f, m.dim, m.dim));
  }
  m.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "M";
  return m;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const Error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace wba
