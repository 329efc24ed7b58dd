#include "hweyl/vector_measure.hpp"

#include <cmath>

#include "hweyl/errors.hpp"

namespace hweyl {

PhaseSet full_phase_set(const FiniteAbelianGroup& group) {
  PhaseSet s(group.phase_count());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

VectorMeasure::VectorMeasure(FiniteAbelianGroup group, NormedSpace space, Eigen::MatrixXcd atoms)
    : group_(std::move(group)), space_(space), atoms_(std::move(atoms)) {
  if (static_cast<std::size_t>(atoms_.rows()) != group_.phase_count()) {
    throw DimensionMismatch("vector measure needs " + std::to_string(group_.phase_count()) +
                            " atoms, got " + std::to_string(atoms_.rows()));
  }
  if (atoms_.cols() != space_.dim()) {
    throw DimensionMismatch("vector measure atoms must have dimension " +
                            std::to_string(space_.dim()));
  }
  if (!atoms_.allFinite()) throw DomainError("vector measure has non-finite atoms");
  if (space_.is_real() && atoms_.size() > 0 && atoms_.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw DomainError("vector measure over a real space has complex atoms");
  }
}

VectorMeasure VectorMeasure::zero(const FiniteAbelianGroup& group, const NormedSpace& space) {
  return VectorMeasure(group, space,
                       Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(group.phase_count()), space.dim()));
}

VectorMeasure VectorMeasure::point_mass(const FiniteAbelianGroup& group, const NormedSpace& space,
                                        std::size_t phase, const Eigen::VectorXcd& v) {
  if (phase >= group.phase_count()) throw DomainError("phase index out of range");
  space.validate(v, "point mass");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(group.phase_count()), space.dim());
  a.row(static_cast<Eigen::Index>(phase)) = v.transpose();
  return VectorMeasure(group, space, std::move(a));
}

namespace {

void check_set(const FiniteAbelianGroup& g, const PhaseSet& set) {
  for (std::size_t p : set) {
    if (p >= g.phase_count()) throw DomainError("phase set index out of range");
  }
}

}  // namespace

Eigen::VectorXcd VectorMeasure::operator()(const PhaseSet& set) const {
  check_set(group_, set);
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(space_.dim());
  for (std::size_t p : set) s += atoms_.row(static_cast<Eigen::Index>(p)).transpose();
  return s;
}

VectorMeasure VectorMeasure::weighted(const PhaseFunction& f) const {
  require_same_group(group_, f.group(), "weighted measure");
  NormedSpace space = space_;
  Eigen::MatrixXcd a = f.values().asDiagonal() * atoms_;
  if (space.is_real() && f.values().imag().cwiseAbs().maxCoeff() != 0.0) {
    space = NormedSpace(space.dim(), ScalarField::complex, space.q());
  }
  return VectorMeasure(group_, space, std::move(a));
}

double scalar_total_variation(const VectorMeasure& nu, const DualFunctional& xstar, const PhaseSet& set) {
  if (xstar.dim() != nu.space().dim()) throw DimensionMismatch("functional dimension differs from measure");
  check_set(nu.group(), set);
  double s = 0.0;
  for (std::size_t p : set) s += std::abs(xstar.pair(nu.atom(p)));
  return s;
}

Eigen::VectorXcd integrate(const PhaseFunction& f, const VectorMeasure& nu, const PhaseSet& set) {
  require_same_group(f.group(), nu.group(), "integrate");
  check_set(nu.group(), set);
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(nu.space().dim());
  for (std::size_t p : set) s += f[p] * nu.atoms().row(static_cast<Eigen::Index>(p)).transpose();
  return s;
}

PhaseFunction radon_nikodym(const VectorMeasure& nu, const DualFunctional& xstar) {
  if (xstar.dim() != nu.space().dim()) throw DimensionMismatch("functional dimension differs from measure");
  const double w = nu.group().haar().phase;
  // <v_w, x*> = sum_j v_wj conj(x*_j)
  Eigen::VectorXcd h = nu.atoms() * xstar.coeffs().conjugate() / w;
  return PhaseFunction(nu.group(), std::move(h));
}

bool nu_null(const VectorMeasure& nu, const PhaseSet& set) {
  check_set(nu.group(), set);
  for (std::size_t p : set) {
    if (nu.atoms().row(static_cast<Eigen::Index>(p)).cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

}  // namespace hweyl
