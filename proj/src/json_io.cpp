#include "gstruct/json_io.hpp"

namespace gstruct::io {

namespace {

const json& array_arg(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be a JSON array");
  return j;
}

std::size_t count_arg(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InvalidArgument(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw InvalidArgument("expected a rational (string \"p/q\" or number), got " + j.dump());
}

json to_json(const Rational& r) { return to_string(r); }

RatVector rat_vector_from_json(const json& j) {
  RatVector v;
  for (const auto& x : array_arg(j, "vector")) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json decimal_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_double(x));
  return a;
}

RatMatrix rat_matrix_from_json(const json& j) {
  array_arg(j, "matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? array_arg(j[0], "matrix row").size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (array_arg(j[i], "matrix row").size() != cols) throw InvalidArgument("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    a.push_back(std::move(row));
  }
  return a;
}

json decimal_json(const RatMatrix& m) { return to_json(to_real(m)); }

RealMatrix real_matrix_from_json(const json& j) {
  array_arg(j, "matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? array_arg(j[0], "matrix row").size() : 0;
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (array_arg(j[i], "matrix row").size() != cols) throw InvalidArgument("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& x = j[i][k];
      m(i, k) = x.is_number() ? x.get<double>() : to_double(rational_from_json(x));
    }
  }
  return m;
}

json to_json(const RealMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    a.push_back(std::move(row));
  }
  return a;
}

Sym2Tensor sym2_from_json(const json& j) {
  const json* rows = &j;
  if (j.is_object()) {
    if (j.contains("packing") && j.at("packing") != "upper-jk")
      throw InvalidArgument("unsupported Sym2 packing " + j.at("packing").dump());
    rows = &j.at("entries");
  }
  array_arg(*rows, "sym2 entries");
  const std::size_t n = rows->size();
  std::vector<Rational> packed;
  packed.reserve(n * Sym2Tensor::packed_size(n));
  for (const auto& row : *rows) {
    if (array_arg(row, "sym2 row").size() != Sym2Tensor::packed_size(n))
      throw InvalidArgument("each sym2 row needs n(n+1)/2 packed entries");
    for (const auto& x : row) packed.push_back(rational_from_json(x));
  }
  return Sym2Tensor(n, std::move(packed));
}

namespace {

template <class F>
json sym2_rows(const Sym2Tensor& s, F&& f) {
  const std::size_t n = s.dim(), p = Sym2Tensor::packed_size(n);
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < p; ++k) row.push_back(f(s.packed()[i * p + k]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const Sym2Tensor& s) {
  return {{"packing", "upper-jk"}, {"entries", sym2_rows(s, [](const Rational& r) { return to_string(r); })}};
}

json decimal_json(const Sym2Tensor& s) {
  return {{"packing", "upper-jk"}, {"entries", sym2_rows(s, [](const Rational& r) { return to_double(r); })}};
}

Polynomial polynomial_from_json(const json& j, std::size_t variables) {
  Polynomial p(variables);
  if (j.is_string() || j.is_number()) {
    p.add_term(Exponent(variables, 0), rational_from_json(j));
    return p;
  }
  for (const auto& term : array_arg(j, "polynomial")) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exp"))
      throw InvalidArgument("polynomial terms must be {\"coeff\": ..., \"exp\": [...]}");
    Exponent e;
    for (const auto& k : array_arg(term.at("exp"), "exponent")) e.push_back(static_cast<unsigned>(count_arg(k, "exponent")));
    if (e.size() != variables) throw InvalidArgument("exponent length must equal the number of variables");
    p.add_term(e, rational_from_json(term.at("coeff")));
  }
  return p;
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"coeff", to_string(c)}, {"exp", e}});
  return a;
}

PolyMetricField metric_field_from_json(const json& j) {
  const json& g = j.is_object() ? j.at("g") : j;
  array_arg(g, "metric field");
  const std::size_t n = g.size();
  std::vector<Polynomial> entries;
  for (const auto& row : g) {
    if (array_arg(row, "metric row").size() != n) throw InvalidArgument("metric field must be n x n");
    for (const auto& e : row) entries.push_back(polynomial_from_json(e, n));
  }
  std::optional<std::size_t> q;
  if (j.is_object() && j.contains("q") && !j.at("q").is_null()) q = count_arg(j.at("q"), "q");
  return PolyMetricField(n, std::move(entries), q);
}

PolyConnectionField connection_field_from_json(const json& j, std::size_t n) {
  const json& rows = j.is_object() ? j.at("entries") : j;
  PolyConnectionField f;
  f.n = n;
  if (array_arg(rows, "connection field").size() != n) throw InvalidArgument("connection field needs n rows");
  for (const auto& row : rows) {
    if (array_arg(row, "connection row").size() != Sym2Tensor::packed_size(n))
      throw InvalidArgument("connection rows need n(n+1)/2 packed entries");
    for (const auto& e : row) f.entries.push_back(polynomial_from_json(e, n));
  }
  return f;
}

Jet2 jet_from_json(const json& j) {
  return Jet2(GL1Element(rat_matrix_from_json(j.at("a"))), sym2_from_json(j.at("s")));
}

json to_json(const Jet2& x) { return {{"a", to_json(x.a.matrix())}, {"s", to_json(x.s)}}; }

SubgroupTag tag_from_json(const json& j) {
  GroupKind k = parse_group_kind(j.at("tag").get<std::string>());
  std::size_t q = j.contains("q") ? count_arg(j.at("q"), "q") : 0;
  return SubgroupTag(k, count_arg(j.at("n"), "n"), q);
}

json to_json(const SubgroupTag& t) { return {{"tag", to_string(t.kind)}, {"n", t.n}, {"q", t.q}}; }

LieSubalgebra algebra_from_json(const json& j) {
  const std::string name = j.at("name").get<std::string>();
  if (name == "custom") {
    std::vector<RatMatrix> basis;
    for (const auto& m : array_arg(j.at("basis"), "basis")) basis.push_back(rat_matrix_from_json(m));
    std::size_t n = j.contains("n") ? count_arg(j.at("n"), "n") : (basis.empty() ? 0 : basis.front().rows());
    LieSubalgebra g(n, std::move(basis), j.value("label", std::string("custom")));
    if (!g.closed_under_bracket()) throw InvalidArgument("custom basis is not closed under the commutator");
    return g;
  }
  AlgebraSpec spec;
  spec.name = name;
  spec.n = count_arg(j.at("n"), "n");
  if (j.contains("q")) spec.q = count_arg(j.at("q"), "q");
  if (j.contains("c")) spec.c = rational_from_json(j.at("c"));
  if (j.contains("coupling")) spec.coupling = rat_matrix_from_json(j.at("coupling"));
  return builtin_algebra(spec);
}

json to_json(const ProlongSpace& p) {
  json basis = json::array();
  for (std::size_t b = 0; b < p.dim(); ++b) {
    if (p.degree == 1) basis.push_back(to_json(p.element(b)).at("entries"));
    else basis.push_back(to_json(p.basis[b]));
  }
  return {{"n", p.n},
          {"degree", p.degree},
          {"dim", p.dim()},
          {"packing", p.degree == 1 ? "upper-jk" : "lex-multiset"},
          {"basis", std::move(basis)}};
}

json to_json(const TypeReport& r) {
  json out = {{"dims", r.dims}, {"verdict", r.verdict()}, {"k_max", r.k_max}};
  out["finite_type"] = r.finite_type ? json(*r.finite_type) : json(nullptr);
  return out;
}

void put_exact(json& obj, const std::string& key, const Rational& r) {
  obj[key] = to_string(r);
  obj[key + "_decimal"] = to_double(r);
}

void put_exact(json& obj, const std::string& key, const RatVector& v) {
  obj[key] = to_json(v);
  obj[key + "_decimal"] = decimal_json(v);
}

void put_exact(json& obj, const std::string& key, const RatMatrix& m) {
  obj[key] = to_json(m);
  obj[key + "_decimal"] = decimal_json(m);
}

void put_exact(json& obj, const std::string& key, const Sym2Tensor& s) {
  obj[key] = to_json(s);
  obj[key + "_decimal"] = decimal_json(s);
}

void put_root(json& obj, const std::string& key, const RootScalar& r) {
  obj[key] = r.value;
  obj[key + "_exact"] = r.exact ? json(to_string(*r.exact)) : json(nullptr);
}

}  // namespace gstruct::io
