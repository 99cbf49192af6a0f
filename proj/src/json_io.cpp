#include "weil/json_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>

#include "weil/error.hpp"

namespace weil {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(std::string("integer out of range for ") + what);
  return static_cast<int>(v);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

template <class K>
K scalar_from_json(const Json& j);

template <>
Rational scalar_from_json<Rational>(const Json& j) {
  return rational_from_json(j);
}

template <>
GaussianRational scalar_from_json<GaussianRational>(const Json& j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  return GaussianRational(rational_from_json(j));
}

template <class K>
ChartForm<K> form_from_json_impl(const Json& j) {
  const int m = int_from_json(field(j, "dim"), "dim");
  if (m < 0 || m > 31) throw ParseError("chart dimension must be in [0, 31]");
  ChartForm<K> f(m);
  for (const auto& t : array_field(j, "terms")) {
    FormKey key{0, std::vector<int>(static_cast<std::size_t>(m))};
    const Json& dx = array_field(t, "dx");
    std::vector<int> idx;
    for (const auto& v : dx) {
      const int i = int_from_json(v, "dx");
      if (i < 1 || i > m) throw ParseError("dx index out of range");
      idx.push_back(i - 1);
    }
    // dx list is read as a wedge product in the given order
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) sign = 0;
        if (idx[a] > idx[b]) sign = -sign;
      }
    for (int i : idx) key.dx |= 1u << i;
    const Json& mono = array_field(t, "mono");
    if (static_cast<int>(mono.size()) != m) throw ParseError("monomial length differs from chart dimension");
    for (std::size_t i = 0; i < mono.size(); ++i) {
      key.mono[i] = int_from_json(mono[i], "mono");
      if (key.mono[i] < 0) throw ParseError("negative exponent");
    }
    K c = scalar_from_json<K>(field(t, "c"));
    if (sign == 0) continue;
    if (sign < 0) c = -c;
    f.add(key, c);
  }
  return f;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }
Json scalar_to_json(const Rational& r) { return to_string(r); }
Json scalar_to_json(const GaussianRational& z) { return to_string(z); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational string \"p/q\"");
}

Json to_json(const LieAlgebra& l) {
  Json brackets = Json::array();
  const int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(l.f(i, j, k)))
          brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", to_string(l.f(i, j, k))}});
  Json out{{"dim", n}, {"brackets", brackets}};
  if (!l.name().empty()) out["name"] = l.name();
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  const int n = int_from_json(field(j, "dim"), "dim");
  if (n < 1 || n > 31) throw ParseError("algebra dimension must be in [1, 31]");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("algebra name must be a string");
    name = j["name"].get<std::string>();
  }
  LieAlgebra l(n, name);
  const Json empty = Json::array();
  for (const auto& b : j.contains("brackets") ? array_field(j, "brackets") : empty) {
    const int i = int_from_json(field(b, "i"), "i");
    const int jj = int_from_json(field(b, "j"), "j");
    const int k = int_from_json(field(b, "k"), "k");
    if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n) throw ParseError("bracket index out of range");
    if (i >= jj) throw ParseError("brackets must be stored with i < j");
    l.set_bracket(i - 1, jj - 1, k - 1, rational_from_json(field(b, "c")));
  }
  if (auto v = validate(l)) throw DomainError("algebra violates " + v->message);
  return l;
}

LieAlgebra algebra_from_spec(const Json& j) {
  if (j.is_string()) return builtin_algebra(j.get<std::string>());
  return algebra_from_json(j);
}

Json to_json(const WeilElement& a) {
  Json out = Json::array();
  for (const auto& [idx, c] : a.terms()) {
    Json ext = Json::array();
    for (int i = 0; i < a.dim(); ++i)
      if ((idx.ext >> i) & 1u) ext.push_back(i + 1);
    out.push_back({{"ext", ext}, {"sym", idx.sym}, {"c", to_string(c)}});
  }
  return out;
}

WeilElement weil_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("Weil element must be an array of terms");
  WeilElement a(n);
  for (const auto& t : j) {
    WeilIndex idx{0, std::vector<int>(static_cast<std::size_t>(n))};
    int sign = 1;
    std::vector<int> ext;
    for (const auto& v : array_field(t, "ext")) {
      const int i = int_from_json(v, "ext");
      if (i < 1 || i > n) throw ParseError("ext index out of range");
      ext.push_back(i - 1);
    }
    for (std::size_t x = 0; x < ext.size(); ++x)
      for (std::size_t y = x + 1; y < ext.size(); ++y) {
        if (ext[x] == ext[y]) sign = 0;
        if (ext[x] > ext[y]) sign = -sign;
      }
    for (int i : ext) idx.ext |= 1u << i;
    const Json& sym = array_field(t, "sym");
    if (static_cast<int>(sym.size()) != n) throw ParseError("sym exponent vector has wrong length");
    for (std::size_t i = 0; i < sym.size(); ++i) {
      idx.sym[i] = int_from_json(sym[i], "sym");
      if (idx.sym[i] < 0) throw ParseError("negative symmetric exponent");
    }
    Rational c = rational_from_json(field(t, "c"));
    if (sign == 0) continue;
    a.add(idx, sign < 0 ? Rational(-c) : c);
  }
  return a;
}

template <class K>
Json to_json(const ChartForm<K>& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json dx = Json::array();
    for (int i = 0; i < f.chart_dim(); ++i)
      if ((k.dx >> i) & 1u) dx.push_back(i + 1);
    terms.push_back({{"dx", dx}, {"mono", k.mono}, {"c", scalar_to_json(c)}});
  }
  return Json{{"dim", f.chart_dim()}, {"terms", terms}};
}

RationalForm form_from_json(const Json& j) { return form_from_json_impl<Rational>(j); }

ChartForm<GaussianRational> complex_form_from_json(const Json& j) { return form_from_json_impl<GaussianRational>(j); }

template <class K>
Json to_json(const LieValuedForm<K>& a) {
  Json comps = Json::array();
  for (const auto& c : a.components) comps.push_back(to_json(c));
  return Json{{"algebra", to_json(a.algebra)}, {"chart_dim", a.chart_dim}, {"components", comps}};
}

Connection connection_from_json(const Json& j) {
  Connection a;
  a.algebra = algebra_from_spec(field(j, "algebra"));
  a.chart_dim = int_from_json(field(j, "chart_dim"), "chart_dim");
  for (const auto& c : array_field(j, "components")) a.components.push_back(form_from_json(c));
  a.validate();
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

LinearAction action_from_json(const Json& j, const LieAlgebra& l) {
  if (!j.is_array()) throw ParseError("action must be a list of matrices");
  LinearAction act{l, 0, {}};
  for (const auto& m : j) act.rho.push_back(matrix_from_json(m));
  if (!act.rho.empty()) act.chart_dim = static_cast<int>(act.rho.front().rows());
  act.validate();
  return act;
}

GaugeTransform<GaussianRational> gauge_from_json(const Json& j) {
  GaugeTransform<GaussianRational> g;
  const std::string kind = field(j, "kind").is_string() ? field(j, "kind").get<std::string>() : "";
  if (kind == "constant")
    g.kind = GaugeKind::constant;
  else if (kind == "unipotent")
    g.kind = GaugeKind::unipotent;
  else
    throw ParseError("gauge kind must be \"constant\" or \"unipotent\"");
  g.size = int_from_json(field(j, "size"), "size");
  g.chart_dim = int_from_json(field(j, "chart_dim"), "chart_dim");
  if (g.size < 1 || g.size > 16) throw ParseError("gauge size must be in [1, 16]");
  const Json& rows = array_field(j, "entries");
  if (static_cast<int>(rows.size()) != g.size) throw ParseError("gauge entries must have one row per matrix row");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != g.size) throw ParseError("gauge rows must be square");
    for (const auto& e : row) {
      // scalar shorthand or a 0-form
      if (e.is_string() || e.is_number_integer())
        g.entries.push_back(ChartForm<GaussianRational>::constant(g.chart_dim, scalar_from_json<GaussianRational>(e)));
      else
        g.entries.push_back(complex_form_from_json(e));
    }
  }
  g.validate();
  return g;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template Json to_json(const ChartForm<Rational>&);
template Json to_json(const ChartForm<GaussianRational>&);
template Json to_json(const LieValuedForm<Rational>&);
template Json to_json(const LieValuedForm<GaussianRational>&);

}  // namespace weil
