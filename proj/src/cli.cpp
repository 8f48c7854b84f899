#include "gstruct/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace gstruct::cli {

using namespace gstruct::io;

namespace {

using Handler = std::function<json(const json&, const CommandOptions&)>;

Point point_from_json(const json& j) { return rat_vector_from_json(j); }

bool has_float_entry(const json& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x.is_number_float()) return true;
  return false;
}

bool present(const json& p, const char* key) { return p.contains(key) && !p.at(key).is_null(); }

VolumeDensityValue volume_from_json(const json& p) {
  if (present(p, "v2")) return VolumeDensityValue::from_square(rational_from_json(p.at("v2")));
  if (present(p, "v_exact")) return VolumeDensityValue::from_exact(rational_from_json(p.at("v_exact")));
  if (present(p, "v")) {
    const json& v = p.at("v");
    if (v.is_number_float()) return VolumeDensityValue::from_real(v.get<double>());
    return VolumeDensityValue::from_exact(rational_from_json(v));
  }
  throw InvalidArgument("a volume needs one of \"v\", \"v_exact\" or \"v2\"");
}

ConformalRep rep_from_json(const json& p) {
  if (present(p, "rep_exact")) return ConformalRep::from_exact(rat_matrix_from_json(p.at("rep_exact")));
  // any positive multiple of the representative names the same class
  if (present(p, "rep_direction")) return ConformalRep::from_exact(rat_matrix_from_json(p.at("rep_direction")));
  const json& m = p.at("rep");
  if (!m.is_array()) throw InvalidArgument("\"rep\" must be a matrix");
  if (has_float_entry(m)) return ConformalRep::from_real(real_matrix_from_json(m));
  return ConformalRep::from_exact(rat_matrix_from_json(m));
}

MetricValue metric_value_from_json(const json& p) {
  RatMatrix g = rat_matrix_from_json(p.at("g"));
  if (present(p, "q")) return MetricValue(std::move(g), p.at("q").get<std::size_t>());
  return MetricValue(std::move(g));
}

json cov_deriv_json(const CovariantDerivative& d) {
  const std::size_t n = d.dim();
  json out = json::array();
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(k, i, j);
    out.push_back(to_json(m));
  }
  return out;
}

json check_result(bool ok, json certificate, json residual) {
  return {{"ok", ok}, {"certificate", std::move(certificate)}, {"residual", std::move(residual)}};
}

LieSubalgebra default_algebra_for(const SubgroupTag& tag) {
  AlgebraSpec spec;
  spec.n = tag.n;
  spec.q = tag.q;
  switch (tag.kind) {
    case GroupKind::SLpm: spec.name = "sl"; break;
    case GroupKind::O: spec.name = "o"; break;
    case GroupKind::CO: spec.name = "co"; break;
    case GroupKind::GL: spec.name = "gl"; break;
    case GroupKind::H: throw InvalidArgument("closure-check needs an explicit \"algebra\" for tag H");
  }
  return builtin_algebra(spec);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"prolong",
       [](const json& p, const CommandOptions&) {
         std::size_t k = p.value("k", std::size_t{1});
         return to_json(kth_prolongation(algebra_from_json(p), k));
       }},
      {"type-order",
       [](const json& p, const CommandOptions& o) {
         std::size_t k_max = p.value("k_max", o.k_max);
         return to_json(finite_type_order(algebra_from_json(p), k_max));
       }},
      {"co1-basis",
       [](const json& p, const CommandOptions&) {
         if (present(p, "form")) return to_json(co1_formula_basis(rat_matrix_from_json(p.at("form"))));
         return to_json(co1_formula_basis(p.at("n").get<std::size_t>(), p.value("q", std::size_t{0})));
       }},
      {"projective-basis",
       [](const json& p, const CommandOptions&) {
         return to_json(projective_subspace(p.at("n").get<std::size_t>()));
       }},
      {"jet-mul",
       [](const json& p, const CommandOptions&) {
         return to_json(jet2_mul(jet_from_json(p.at("x")), jet_from_json(p.at("y"))));
       }},
      {"jet-inv",
       [](const json& p, const CommandOptions&) {
         const json& x = p.contains("x") ? p.at("x") : p;
         return to_json(jet2_inv(jet_from_json(x)));
       }},
      {"member",
       [](const json& p, const CommandOptions&) {
         GL1Element a(rat_matrix_from_json(p.at("a")));
         Membership m = subgroup_member(a, tag_from_json(p.at("tag")));
         return json{{"member", m.member},
                     {"certificate", m.certificate ? json(to_string(*m.certificate)) : json(nullptr)}};
       }},
      {"factor",
       [](const json& p, const CommandOptions& o) {
         GL1Element a(rat_matrix_from_json(p.at("a")));
         SlCoFactor f = factor_sl_co(a, p.value("q", std::size_t{0}));
         json out;
         out["s"] = to_json(f.s);
         out["c"] = to_json(f.c);
         out["s_exact"] = f.s_exact ? to_json(*f.s_exact) : json(nullptr);
         out["c_exact"] = f.c_exact ? to_json(*f.c_exact) : json(nullptr);
         put_root(out, "scale", f.scale);
         double det_s = f.s_exact ? to_double(abs(determinant(*f.s_exact))) : std::abs(determinant(f.s));
         out["abs_det_s"] = det_s;
         out["unit_det"] = std::abs(det_s - 1.0) <= o.tolerance;
         return out;
       }},
      {"decompose",
       [](const json& p, const CommandOptions& o) {
         MetricValue g = metric_value_from_json(p);
         MetricDecomposition d = decompose_metric(g);
         json out;
         out["rep"] = to_json(d.rep.r);
         out["rep_exact"] = d.rep.exact ? to_json(*d.rep.exact) : json(nullptr);
         out["rep_direction"] = to_json(*d.rep.direction);
         out["v"] = d.vol.v;
         out["v_exact"] = d.vol.v_exact ? json(to_string(*d.vol.v_exact)) : json(nullptr);
         out["v2"] = to_string(*d.vol.v2_exact);
         out["q"] = g.signature().q;
         out["p"] = g.signature().p;
         double det_rep = std::abs(determinant(d.rep.r));
         out["abs_det_rep"] = det_rep;
         out["unit_det"] = std::abs(det_rep - 1.0) <= o.tolerance;
         return out;
       }},
      {"recompose",
       [](const json& p, const CommandOptions&) {
         ConformalRep rep = rep_from_json(p);
         if (present(p, "q") && p.at("q").get<std::size_t>() != rep.signature.q)
           throw DomainError("declared q does not match the representative's signature");
         RecomposedMetric g = recompose_metric(rep, volume_from_json(p));
         json out;
         out["g"] = to_json(g.g);
         out["g_exact"] = g.exact ? to_json(*g.exact) : json(nullptr);
         out["q"] = g.signature.q;
         out["p"] = g.signature.p;
         return out;
       }},
      {"equivariant-value",
       [](const json& p, const CommandOptions&) {
         GL1Element l(rat_matrix_from_json(p.at("l")));
         json out;
         put_root(out, "value", volume_equivariant_value(volume_from_json(p), l));
         return out;
       }},
      {"levi-civita",
       [](const json& p, const CommandOptions&) {
         json out;
         put_exact(out, "gamma", levi_civita_at(metric_field_from_json(p), point_from_json(p.at("x"))));
         return out;
       }},
      {"transform-connection",
       [](const json& p, const CommandOptions&) {
         json out;
         put_exact(out, "gamma", connection_transform(sym2_from_json(p.at("gamma")), jet_from_json(p.at("jet"))));
         return out;
       }},
      {"projective-diff",
       [](const json& p, const CommandOptions&) {
         Sym2Tensor g1 = sym2_from_json(p.at("gamma1")), g2 = sym2_from_json(p.at("gamma2"));
         auto mu = projective_difference(g1, g2);
         return check_result(mu.has_value(), mu ? to_json(*mu) : json(nullptr), to_json(g2 - g1));
       }},
      {"projective-shift",
       [](const json& p, const CommandOptions&) {
         json out;
         put_exact(out, "gamma", projective_shift(sym2_from_json(p.at("gamma")), rat_vector_from_json(p.at("mu"))));
         return out;
       }},
      {"equiaffine",
       [](const json& p, const CommandOptions&) {
         Sym2Tensor gamma = sym2_from_json(p.at("gamma"));
         PolyVolumeField vol{polynomial_from_json(p.at("v"), gamma.dim())};
         Point x = point_from_json(p.at("x"));
         EquiaffineResult r = equiaffine_representative(gamma, vol, x);
         Covector residual = volume_parallel_residual(r.gamma, vol, x);
         bool ok = std::all_of(residual.begin(), residual.end(), [](const Rational& v) { return is_zero(v); });
         json out = check_result(ok, to_json(r.mu), to_json(residual));
         put_exact(out, "gamma", r.gamma);
         put_exact(out, "mu", r.mu);
         return out;
       }},
      {"weyl-build",
       [](const json& p, const CommandOptions&) {
         json out;
         put_exact(out, "gamma", weyl_connection_at(metric_field_from_json(p), rat_vector_from_json(p.at("theta")),
                                                    point_from_json(p.at("x"))));
         return out;
       }},
      {"weyl-check",
       [](const json& p, const CommandOptions&) {
         Sym2Tensor gamma = sym2_from_json(p.at("gamma"));
         PolyMetricField g = metric_field_from_json(p);
         Point x = point_from_json(p.at("x"));
         auto theta = weyl_compatibility_check(gamma, g, x);
         return check_result(theta.has_value(), theta ? to_json(*theta) : json(nullptr),
                             cov_deriv_json(metric_cov_deriv_at(gamma, g, x)));
       }},
      {"weyl-intersect",
       [](const json& p, const CommandOptions&) {
         Sym2Tensor gamma = sym2_from_json(p.at("gamma"));
         PolyMetricField g = metric_field_from_json(p);
         Point x = point_from_json(p.at("x"));
         auto sol = weyl_intersection_at(gamma, g, x);
         json cert = sol ? json{{"mu", to_json(sol->mu)}, {"theta", to_json(sol->theta)}} : json(nullptr);
         json residual = nullptr;
         if (sol) {
           Sym2Tensor shifted = projective_shift(gamma, sol->mu);
           residual = cov_deriv_json(metric_cov_deriv_at(shifted, g, x));
         }
         return check_result(sol.has_value(), std::move(cert), std::move(residual));
       }},
      {"closure-check",
       [](const json& p, const CommandOptions& o) {
         SubgroupTag tag = tag_from_json(p.at("tag"));
         LieSubalgebra g = present(p, "algebra") ? algebra_from_json(p.at("algebra")) : default_algebra_for(tag);
         ProlongSpace g1 = first_prolongation(g);
         std::mt19937_64 rng(o.seed);
         ClosureVerdict v = semidirect_closure_check(tag, g1, p.value("samples", std::size_t{20}), rng);
         return json{{"ok", v.ok}, {"checked", v.checked}, {"failures", v.failures}, {"dim_g1", g1.dim()}};
       }},
  };
  return table;
}

json unwrap_payload(const std::string& command, const json& input) {
  if (input.is_object() && input.contains("payload")) {
    if (input.contains("command") && input.at("command") != command)
      throw InvalidArgument("request names command " + input.at("command").dump() + " but \"" + command +
                            "\" was invoked");
    return input.at("payload");
  }
  if (input.is_object() && input.contains("status") && input.contains("data")) return input.at("data");
  return input;
}

CommandResult failure(std::string code, std::string message) {
  CommandResult r;
  r.status = Status::Error;
  r.code = std::move(code);
  r.data = nullptr;
  r.diagnostics.push_back(std::move(message));
  return r;
}

}  // namespace

int CommandResult::exit_code() const {
  if (status == Status::Ok) return 0;
  if (code == "schema") return 2;
  if (code == "precondition") return 3;
  return 1;
}

json CommandResult::to_json() const {
  json out = {{"status", status == Status::Ok ? "ok" : "error"}, {"data", data}, {"diagnostics", diagnostics}};
  if (status == Status::Error) out["code"] = code;
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

CommandResult run(const std::string& command, const json& input, const CommandOptions& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) return failure("schema", "unknown command \"" + command + "\"");
  try {
    json payload = unwrap_payload(command, input);
    if (!payload.is_object()) return failure("schema", "payload must be a JSON object");
    CommandResult r;
    r.data = it->second(payload, options);
    return r;
  } catch (const DomainError& e) {
    return failure("precondition", e.what());
  } catch (const InvalidArgument& e) {
    return failure("schema", e.what());
  } catch (const json::exception& e) {
    return failure("schema", e.what());
  } catch (const std::exception& e) {
    return failure("internal", e.what());
  }
}

}  // namespace gstruct::cli
