#include "hweyl/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "hweyl/errors.hpp"

namespace hweyl::io {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing field '") + key + "'");
  return *it;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(path, "non-finite number");
  return v;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

json complex_array(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

Eigen::VectorXcd complex_vector(const json& j, const std::string& path) {
  array(j, path);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i], idx(path, i));
  return v;
}

json matrix_row_major(const Eigen::MatrixXcd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) a.push_back(to_json(m(i, k)));
  }
  return a;
}

Exponent exponent_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return Exponent::infinity();
    throw ParseError(path, "expected a number >= 1 or \"inf\"");
  }
  const double v = number(j, path);
  if (v < 1.0) throw ParseError(path, "exponent must be >= 1");
  return Exponent(v);
}

json exponent_to_json(Exponent p) { return p.infinite() ? json("inf") : json(p.value()); }

// Wraps a library error raised while assembling a parsed object.
template <class Fn>
auto rethrow_at(const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

json to_json(const FiniteAbelianGroup& g) {
  json orders = json::array();
  for (int n : g.orders()) orders.push_back(n);
  return json{{"orders", orders}};
}

FiniteAbelianGroup group_from_json(const json& j, const std::string& path) {
  const json& o = array(field(j, "orders", path), path + ".orders");
  std::vector<int> orders;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (!o[i].is_number_integer()) throw ParseError(idx(path + ".orders", i), "expected an integer");
    const auto v = o[i].get<long long>();
    if (v < 1 || v > static_cast<long long>(kMaxGroupOrder)) {
      throw ParseError(idx(path + ".orders", i), "order out of range");
    }
    orders.push_back(static_cast<int>(v));
  }
  return rethrow_at(path + ".orders", [&] { return FiniteAbelianGroup(orders); });
}

json to_json(cplx z) {
  if (z.imag() == 0.0) return json(z.real());
  return json::array({z.real(), z.imag()});
}

cplx complex_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
  throw ParseError(path, "expected a number or an [re, im] pair");
}

json to_json(const PhaseFunction& f) {
  return json{{"group", to_json(f.group())}, {"values", complex_array(f.values())}};
}

PhaseFunction phase_function_from_json(const json& j, const std::string& path) {
  const auto g = group_from_json(field(j, "group", path), path + ".group");
  const auto& vals = field(j, "values", path);
  Eigen::VectorXcd v = complex_vector(vals, path + ".values");
  return rethrow_at(path + ".values", [&] { return PhaseFunction(g, std::move(v)); });
}

json to_json(const WeylOperator& op) {
  return json{{"group", to_json(op.group())}, {"matrix", matrix_row_major(op.matrix())}};
}

WeylOperator weyl_operator_from_json(const json& j, const std::string& path) {
  const auto g = group_from_json(field(j, "group", path), path + ".group");
  const Eigen::VectorXcd v = complex_vector(field(j, "matrix", path), path + ".matrix");
  const auto n = static_cast<Eigen::Index>(g.order());
  if (v.size() != n * n) throw ParseError(path + ".matrix", "expected |G|^2 entries");
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = v[i * n + k];
  }
  return WeylOperator(g, std::move(m));
}

json to_json(const NormedSpace& s) {
  return json{{"dim", s.dim()}, {"field", to_string(s.field())}, {"norm", {{"lq", exponent_to_json(s.q())}}}};
}

NormedSpace space_from_json(const json& j, const std::string& path) {
  const json& d = field(j, "dim", path);
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
    throw ParseError(path + ".dim", "expected an integer in [1, 64]");
  }
  const json& f = field(j, "field", path);
  if (!f.is_string()) throw ParseError(path + ".field", "expected \"real\" or \"complex\"");
  const ScalarField sf =
      rethrow_at(path + ".field", [&] { return scalar_field_from_string(f.get<std::string>()); });
  Exponent q(2.0);
  if (j.contains("norm")) q = exponent_from_json(field(field(j, "norm", path), "lq", path + ".norm"), path + ".norm.lq");
  return NormedSpace(static_cast<int>(d.get<long long>()), sf, q);
}

json to_json(const VectorMeasure& nu) {
  json atoms = json::array();
  for (Eigen::Index i = 0; i < nu.atoms().rows(); ++i) atoms.push_back(complex_array(nu.atoms().row(i).transpose()));
  return json{{"group", to_json(nu.group())}, {"space", to_json(nu.space())}, {"atoms", atoms}};
}

VectorMeasure vector_measure_from_json(const json& j, const std::string& path) {
  const auto g = group_from_json(field(j, "group", path), path + ".group");
  const auto s = space_from_json(field(j, "space", path), path + ".space");
  const json& atoms = array(field(j, "atoms", path), path + ".atoms");
  if (atoms.size() != g.phase_count()) throw ParseError(path + ".atoms", "expected |G|^2 atoms");
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(atoms.size()), s.dim());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = idx(path + ".atoms", i);
    const Eigen::VectorXcd v = complex_vector(atoms[i], p);
    if (v.size() != s.dim()) throw ParseError(p, "atom length differs from space dimension");
    a.row(static_cast<Eigen::Index>(i)) = v.transpose();
  }
  return rethrow_at(path + ".atoms", [&] { return VectorMeasure(g, s, std::move(a)); });
}

json to_json(const VectorWeylOperator& op) {
  json mats = json::array();
  for (const auto& m : op.coord_matrices()) mats.push_back(matrix_row_major(m));
  return json{{"group", to_json(op.group())}, {"coord_matrices", mats}};
}

json to_json(const ScalarMeasure& mu) {
  return json{{"group", to_json(mu.group())}, {"atoms", complex_array(mu.atoms())}};
}

json to_json(const VectorPhaseField& field) {
  json vals = json::array();
  for (Eigen::Index i = 0; i < field.values().rows(); ++i) {
    vals.push_back(complex_array(field.values().row(i).transpose()));
  }
  return json{{"group", to_json(field.group())}, {"space", to_json(field.space())}, {"values", vals}};
}

json to_json(const Estimate& e) {
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json("inf"); };
  return json{{"value", num(e.value)}, {"lower", num(e.lower)}, {"upper", num(e.upper)}, {"exact", e.exact}};
}

json read_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError(filename, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(filename, e.what());
  }
}

void write(const json& j, const std::string& filename) {
  const std::string text = j.dump(2) + "\n";
  if (filename.empty() || filename == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(filename);
  if (!out) throw ParseError(filename, "cannot open file for writing");
  out << text;
}

}  // namespace hweyl::io
