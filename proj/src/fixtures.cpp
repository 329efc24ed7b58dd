#include "hweyl/fixtures.hpp"

namespace hweyl {

PhaseFunction random_phase_function(const FiniteAbelianGroup& group, Rng& rng) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(group.phase_count()));
  for (auto& z : v) z = rng.cnormal();
  return PhaseFunction(group, std::move(v));
}

Eigen::VectorXcd random_vector(const NormedSpace& space, Rng& rng) {
  Eigen::VectorXcd v(space.dim());
  for (auto& z : v) z = space.is_real() ? cplx(rng.normal()) : rng.cnormal();
  return v;
}

VectorMeasure random_vector_measure(const FiniteAbelianGroup& group, const NormedSpace& space, Rng& rng) {
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(group.phase_count()), space.dim());
  for (Eigen::Index i = 0; i < a.rows(); ++i) a.row(i) = random_vector(space, rng).transpose();
  return VectorMeasure(group, space, std::move(a));
}

DualFunctional random_unit_dual(const NormedSpace& space, Rng& rng) {
  Eigen::VectorXcd x = random_vector(space, rng);
  const double n = space.dual_norm(x);
  if (n > 0) x /= n;
  return DualFunctional(space, std::move(x));
}

Eigen::MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.cnormal();
  }
  return m;
}

}  // namespace hweyl
