#include "sweedler/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sweedler {

namespace {

// Strips "name(" ... ")" and returns the inside; empty optional when the
// spec does not start with the name.
bool call_argument(const std::string& spec, const std::string& name,
                   std::string* inner) {
  if (spec.size() < name.size() + 2 || spec.compare(0, name.size(), name) != 0)
    return false;
  if (spec[name.size()] != '(' || spec.back() != ')') return false;
  *inner = spec.substr(name.size() + 1, spec.size() - name.size() - 2);
  return true;
}

size_t parse_count(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    long n = std::stol(text, &pos);
    if (pos != text.size() || n < 1) throw std::invalid_argument("range");
    return static_cast<size_t>(n);
  } catch (const std::exception&) {
    throw InputError("expected a positive integer " + what + ", got '" + text +
                     "'");
  }
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw InputError("malformed JSON in " + origin);
  return j;
}

void need(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(what + " needs a '" + std::string(key) + "' field");
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldPtr& f, const Json& j) {
  if (j.is_number_integer())
    return Scalar::of_int(f, j.get<long long>());
  if (j.is_string()) return Scalar::from_string(f, j.get<std::string>());
  throw InputError("scalars must be strings (or bare integers), got " +
                   j.dump());
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(scalar_json(s));
  return a;
}

Vec vec_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  Vec v;
  for (const Json& e : j) v.push_back(scalar_from_json(f, e));
  return v;
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw InputError("expected a matrix as an array of rows");
  size_t rows = j.size(), cols = j.front().size();
  Mat m = mat_zero(f, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols)
      throw InputError("matrix rows have uneven lengths");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, j[r][c]);
  }
  return m;
}

Json algebra_json(const FinAlgebra& a) {
  Json j;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  j["unit"] = vec_json(a.unit);
  Json c = Json::array();
  for (size_t i = 0; i < a.dim; ++i) {
    Json ci = Json::array();
    for (size_t k = 0; k < a.dim; ++k) ci.push_back(vec_json(a.c[i][k]));
    c.push_back(ci);
  }
  j["c"] = c;
  return j;
}

FinAlgebra algebra_from_json(const FieldPtr& f, const Json& j) {
  need(j, "dim", "an algebra");
  need(j, "unit", "an algebra");
  need(j, "c", "an algebra");
  FinAlgebra a;
  a.field = f;
  a.dim = j["dim"].get<size_t>();
  if (j.contains("labels"))
    a.labels = j["labels"].get<std::vector<std::string>>();
  else
    for (size_t i = 0; i < a.dim; ++i) a.labels.push_back("a" + std::to_string(i));
  a.unit = vec_from_json(f, j["unit"]);
  for (const Json& ci : j["c"]) {
    std::vector<Vec> row;
    for (const Json& cik : ci) row.push_back(vec_from_json(f, cik));
    a.c.push_back(row);
  }
  validate_algebra(a);
  return a;
}

Json coalgebra_json(const FinCoalgebra& h) {
  Json j;
  j["dim"] = h.dim;
  j["labels"] = h.labels;
  j["counit"] = vec_json(h.counit);
  Json d = Json::array();
  for (size_t i = 0; i < h.dim; ++i) {
    Json di = Json::array();
    for (size_t k = 0; k < h.dim; ++k) di.push_back(vec_json(h.d[i][k]));
    d.push_back(di);
  }
  j["d"] = d;
  return j;
}

FinCoalgebra coalgebra_from_json(const FieldPtr& f, const Json& j) {
  need(j, "dim", "a coalgebra");
  need(j, "counit", "a coalgebra");
  need(j, "d", "a coalgebra");
  FinCoalgebra h;
  h.field = f;
  h.dim = j["dim"].get<size_t>();
  if (j.contains("labels"))
    h.labels = j["labels"].get<std::vector<std::string>>();
  else
    for (size_t i = 0; i < h.dim; ++i) h.labels.push_back("h" + std::to_string(i));
  h.counit = vec_from_json(f, j["counit"]);
  for (const Json& di : j["d"]) {
    std::vector<Vec> row;
    for (const Json& dik : di) row.push_back(vec_from_json(f, dik));
    h.d.push_back(row);
  }
  validate_coalgebra(h);
  return h;
}

Json module_json(const FinModule& m) {
  Json j;
  j["dim"] = m.dim;
  Json act = Json::array();
  for (const Mat& a : m.action) act.push_back(mat_json(a));
  j["action"] = act;
  return j;
}

FinModule module_from_json(const FinAlgebra& over, const Json& j) {
  need(j, "dim", "a module");
  need(j, "action", "a module");
  FinModule m;
  m.algebra = over;
  m.dim = j["dim"].get<size_t>();
  for (const Json& a : j["action"]) {
    if (m.dim == 0)
      m.action.push_back(mat_zero(over.field, 0, 0));
    else
      m.action.push_back(mat_from_json(over.field, a));
  }
  validate_module(m);
  return m;
}

ExtensionMap extension_from_json(const FieldPtr& f, const FinAlgebra& a,
                                 const FinAlgebra& b, const Json& j) {
  need(j, "S", "an extension");
  need(j, "sigma", "an extension");
  ExtensionMap e;
  e.A = a;
  e.B = b;
  e.S = j["S"].is_string() ? parse_algebra_spec(f, j["S"].get<std::string>())
                           : algebra_from_json(f, j["S"]);
  for (const Json& row : j["sigma"]) {
    std::vector<Vec> per_s;
    for (const Json& cell : row) per_s.push_back(vec_from_json(f, cell));
    e.sigma.push_back(per_s);
  }
  validate_extension_shape(e);
  return e;
}

MeasuringData measuring_from_json(const FieldPtr& f, const Json& j) {
  need(j, "H", "measuring data");
  need(j, "A", "measuring data");
  need(j, "B", "measuring data");
  need(j, "rho", "measuring data");
  MeasuringData m;
  m.H = j["H"].is_string() ? parse_coalgebra_spec(f, j["H"].get<std::string>())
                           : coalgebra_from_json(f, j["H"]);
  m.A = j["A"].is_string() ? parse_algebra_spec(f, j["A"].get<std::string>())
                           : algebra_from_json(f, j["A"]);
  m.B = j["B"].is_string() ? parse_algebra_spec(f, j["B"].get<std::string>())
                           : algebra_from_json(f, j["B"]);
  for (const Json& row : j["rho"]) {
    std::vector<Vec> per_h;
    for (const Json& cell : row) per_h.push_back(vec_from_json(f, cell));
    m.rho.push_back(per_h);
  }
  validate_measuring_shape(m);
  return m;
}

ChainComplex complex_from_json(const FieldPtr& f, const Json& j) {
  need(j, "dims", "a chain complex");
  ChainComplex c;
  c.field = f;
  c.dims = j["dims"].get<std::vector<size_t>>();
  if (c.dims.empty()) throw InputError("a chain complex needs at least degree 0");
  c.d.push_back(mat_zero(f, 0, c.dims[0]));
  Json diffs = j.contains("d") ? j["d"] : Json::array();
  if (diffs.size() + 1 != c.dims.size())
    throw InputError("a chain complex needs one differential per degree >= 1");
  for (size_t i = 0; i < diffs.size(); ++i) {
    if (c.dims[i] == 0 || c.dims[i + 1] == 0)
      c.d.push_back(mat_zero(f, c.dims[i], c.dims[i + 1]));
    else
      c.d.push_back(mat_from_json(f, diffs[i]));
  }
  validate_chain_complex(c);
  return c;
}

Json load_json_argument(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::string path = spec.substr(1);
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), "file '" + path + "'");
  }
  return parse_json_text(spec, "inline argument");
}

FinAlgebra parse_algebra_spec(const FieldPtr& f, const std::string& spec) {
  std::string inner;
  if (!spec.empty() && (spec[0] == '@' || spec[0] == '{'))
    return algebra_from_json(f, load_json_argument(spec));
  if (call_argument(spec, "quotient_poly", &inner))
    return quotient_poly(f, polq_from_string(inner, "x"));
  if (call_argument(spec, "matrix_algebra", &inner))
    return matrix_algebra(f, parse_count(inner, "matrix size"));
  if (spec == "dual_numbers") return dual_numbers(f);
  if (spec == "conjugation_algebra") return conjugation_algebra(f);
  if (spec == "base_field") return base_field_algebra(f);
  throw InputError("unknown algebra '" + spec +
                   "'; expected quotient_poly(p), matrix_algebra(n), "
                   "dual_numbers, conjugation_algebra, base_field, inline "
                   "JSON, or @file.json");
}

FinCoalgebra parse_coalgebra_spec(const FieldPtr& f, const std::string& spec) {
  std::string inner;
  if (!spec.empty() && (spec[0] == '@' || spec[0] == '{'))
    return coalgebra_from_json(f, load_json_argument(spec));
  if (call_argument(spec, "matrix_coalgebra", &inner))
    return matrix_coalgebra(f, parse_count(inner, "matrix size"));
  if (call_argument(spec, "dual", &inner))
    return dual_coalgebra(parse_algebra_spec(f, inner));
  if (spec == "grouplike") return grouplike_coalgebra(f);
  if (spec == "derivation_pair") return derivation_pair_coalgebra(f);
  throw InputError("unknown coalgebra '" + spec +
                   "'; expected grouplike, derivation_pair, "
                   "matrix_coalgebra(n), dual(algebra), inline JSON, or "
                   "@file.json");
}

FinModule parse_module_spec(const FinAlgebra& over, const std::string& spec) {
  std::string inner;
  if (!spec.empty() && (spec[0] == '@' || spec[0] == '{'))
    return module_from_json(over, load_json_argument(spec));
  if (spec == "regular") return regular_module(over);
  if (spec == "zero") {
    FinModule m;
    m.algebra = over;
    m.dim = 0;
    m.action.assign(over.dim, mat_zero(over.field, 0, 0));
    return m;
  }
  if (call_argument(spec, "free", &inner)) {
    size_t n = parse_count(inner, "rank");
    FinModule m = regular_module(over);
    for (size_t i = 1; i < n; ++i) m = direct_sum_modules(m, regular_module(over));
    return m;
  }
  throw InputError("unknown module '" + spec +
                   "'; expected regular, free(n), zero, inline JSON, or "
                   "@file.json");
}

}  // namespace sweedler
