#include "hweyl/dual_ball.hpp"

#include <cmath>

namespace hweyl {

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

DualNet::DualNet(const NormedSpace& space, std::size_t budget) : space_(space) {
  const int d = space.dim();
  const bool cplx_field = !space.is_real();
  const int free_axes = (d - 1) * (cplx_field ? 2 : 1);

  int m = 2;
  if (free_axes == 0) {
    m = 1;
  } else {
    while (static_cast<double>(d) * ipow(m + 1, free_axes) <= static_cast<double>(budget)) ++m;
  }
  resolution_ = m;

  std::vector<double> grid(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) grid[static_cast<std::size_t>(i)] = m == 1 ? 0.0 : -1.0 + 2.0 * i / (m - 1);

  const std::size_t per_face = static_cast<std::size_t>(ipow(m, free_axes));
  points_.resize(d, static_cast<Eigen::Index>(per_face * static_cast<std::size_t>(d)));
  const Exponent qd = space.dual_q();
  Eigen::Index col = 0;
  std::vector<int> digits(static_cast<std::size_t>(free_axes), 0);
  for (int k = 0; k < d; ++k) {
    for (std::size_t t = 0; t < per_face; ++t) {
      std::size_t rem = t;
      for (int a = 0; a < free_axes; ++a) {
        digits[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(m));
        rem /= static_cast<std::size_t>(m);
      }
      Eigen::VectorXcd u(d);
      int axis = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) {
          u[j] = 1.0;
          continue;
        }
        const double re = grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(axis++)])];
        const double im = cplx_field ? grid[static_cast<std::size_t>(digits[static_cast<std::size_t>(axis++)])] : 0.0;
        u[j] = cplx(re, im);
      }
      points_.col(col++) = u / lq_norm(u, qd);
    }
  }

  // Per-coordinate distance to the nearest grid node, then the l^{q'} bound
  // over the d-1 free coordinates; normalization at most doubles it.
  double cell = 0.0;
  if (free_axes > 0) {
    const double h = 2.0 / (m - 1);
    cell = cplx_field ? h / std::sqrt(2.0) : h / 2.0;
  }
  const double free = static_cast<double>(d - 1);
  const double delta = qd.infinite() ? cell : std::pow(free, 1.0 / qd.value()) * cell;
  eps_ = 2.0 * delta;
}

}  // namespace hweyl
