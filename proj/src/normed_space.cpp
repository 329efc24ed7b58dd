#include "hweyl/normed_space.hpp"

#include <cmath>

#include "hweyl/errors.hpp"

namespace hweyl {

std::string to_string(ScalarField field) { return field == ScalarField::real ? "real" : "complex"; }

ScalarField scalar_field_from_string(const std::string& name) {
  if (name == "real") return ScalarField::real;
  if (name == "complex") return ScalarField::complex;
  throw DomainError("scalar field must be 'real' or 'complex', got '" + name + "'");
}

double lq_norm(const Eigen::Ref<const Eigen::VectorXcd>& v, Exponent q) {
  if (v.size() == 0) return 0.0;
  if (q.infinite()) return v.cwiseAbs().maxCoeff();
  const double e = q.value();
  if (e == 2.0) return v.norm();
  if (e == 1.0) return v.cwiseAbs().sum();
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]) / top, e);
  return top * std::pow(s, 1.0 / e);
}

NormedSpace::NormedSpace(int dim, ScalarField field, Exponent q) : dim_(dim), field_(field), q_(q) {
  if (dim < 1) throw DomainError("normed space dimension must be >= 1");
}

double NormedSpace::norm(const Eigen::Ref<const Eigen::VectorXcd>& v) const { return lq_norm(v, q_); }

double NormedSpace::dual_norm(const Eigen::Ref<const Eigen::VectorXcd>& x) const {
  return lq_norm(x, dual_q());
}

Eigen::VectorXcd NormedSpace::norming_functional(const Eigen::Ref<const Eigen::VectorXcd>& v) const {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim_);
  const double nv = norm(v);
  if (nv == 0.0) {
    x[0] = 1.0;
    return x;
  }
  auto phase = [](cplx z) { return std::abs(z) > 0 ? z / std::abs(z) : cplx{0.0}; };
  if (q_.infinite()) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    x[k] = phase(v[k]);
    return x;
  }
  const double e = q_.value();
  if (e == 1.0) {
    for (int j = 0; j < dim_; ++j) x[j] = std::abs(v[j]) > 0 ? phase(v[j]) : cplx{0.0};
    return x;
  }
  // x*_j = v_j |v_j|^{q-2} / ||v||^{q-1}, computed on v/||v|| to stay in range.
  for (int j = 0; j < dim_; ++j) {
    const cplx u = v[j] / nv;
    x[j] = phase(u) * std::pow(std::abs(u), e - 1.0);
  }
  return x;
}

void NormedSpace::validate(const Eigen::Ref<const Eigen::VectorXcd>& v, const char* what) const {
  if (v.size() != dim_) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim_) +
                            ", got " + std::to_string(v.size()));
  }
  if (!v.allFinite()) throw DomainError(std::string(what) + " has non-finite entries");
  if (is_real() && v.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw DomainError(std::string(what) + " has imaginary parts in a real space");
  }
}

DualFunctional::DualFunctional(const NormedSpace& space, Eigen::VectorXcd coeffs)
    : coeffs_(std::move(coeffs)) {
  space.validate(coeffs_, "dual functional");
}

DualFunctional DualFunctional::zero(const NormedSpace& space) {
  return DualFunctional(space, Eigen::VectorXcd::Zero(space.dim()));
}

}  // namespace hweyl
