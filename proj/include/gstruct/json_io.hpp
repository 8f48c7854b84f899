#pragma once

#include <json.hpp>

#include "gstruct/connection.hpp"
#include "gstruct/prolong.hpp"
#include "gstruct/structures.hpp"

namespace gstruct::io {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p"); JSON numbers are accepted on
// input and read through their decimal text, so 0.5 means 1/2 exactly.
Rational rational_from_json(const json& j);
json to_json(const Rational& r);

RatVector rat_vector_from_json(const json& j);
json to_json(const RatVector& v);
json decimal_json(const RatVector& v);

RatMatrix rat_matrix_from_json(const json& j);
json to_json(const RatMatrix& m);
json decimal_json(const RatMatrix& m);
RealMatrix real_matrix_from_json(const json& j);
json to_json(const RealMatrix& m);

/// {"packing": "upper-jk", "entries": [[...n(n+1)/2...] × n]}; a bare array of
/// n packed rows is also accepted.
Sym2Tensor sym2_from_json(const json& j);
json to_json(const Sym2Tensor& s);
json decimal_json(const Sym2Tensor& s);

/// [{"coeff": "p/q", "exp": [e1, …, en]}, …]; `variables` fixes n when the
/// list is empty.
Polynomial polynomial_from_json(const json& j, std::size_t variables);
json to_json(const Polynomial& p);

/// {"g": n×n array of polynomials, "q": optional int}
PolyMetricField metric_field_from_json(const json& j);
PolyConnectionField connection_field_from_json(const json& j, std::size_t n);

/// {"a": matrix, "s": sym2}
Jet2 jet_from_json(const json& j);
json to_json(const Jet2& x);

/// {"tag": "O", "q": 1, "n": 4}
SubgroupTag tag_from_json(const json& j);
json to_json(const SubgroupTag& t);

/// {"name": "co", "n": 4, "q": 1} or {"name": "custom", "basis": [matrices]}
LieSubalgebra algebra_from_json(const json& j);

json to_json(const ProlongSpace& p);
json to_json(const TypeReport& r);

/// Writes key (rational string form) and key + "_decimal".
void put_exact(json& obj, const std::string& key, const Rational& r);
void put_exact(json& obj, const std::string& key, const RatVector& v);
void put_exact(json& obj, const std::string& key, const RatMatrix& m);
void put_exact(json& obj, const std::string& key, const Sym2Tensor& s);
/// Writes key (decimal) and key + "_exact" (rational string or null).
void put_root(json& obj, const std::string& key, const RootScalar& r);

}  // namespace gstruct::io
