#include "hweyl/vector_weyl.hpp"

#include <cmath>

#include "hweyl/errors.hpp"
#include "hweyl/rng.hpp"

namespace hweyl {

VectorWeylOperator::VectorWeylOperator(FiniteAbelianGroup group, std::vector<Eigen::MatrixXcd> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  const auto n = static_cast<Eigen::Index>(group_.order());
  for (const auto& a : coords_) {
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("coordinate matrices must be |G| x |G|");
  }
}

WeylOperator VectorWeylOperator::scalarize(const DualFunctional& xstar) const {
  if (xstar.dim() != dim()) throw DimensionMismatch("functional dimension differs from operator");
  const auto n = static_cast<Eigen::Index>(group_.order());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < dim(); ++j) m += std::conj(xstar.coeffs()[j]) * coords_[static_cast<std::size_t>(j)];
  return WeylOperator(group_, std::move(m));
}

double VectorWeylOperator::max_abs() const {
  double m = 0.0;
  for (const auto& a : coords_) {
    if (a.size() > 0) m = std::max(m, a.cwiseAbs().maxCoeff());
  }
  return m;
}

VectorWeylOperator weyl_nu(const PhaseFunction& f, const VectorMeasure& nu) {
  require_same_group(f.group(), nu.group(), "weyl_nu");
  std::vector<Eigen::MatrixXcd> coords;
  coords.reserve(static_cast<std::size_t>(nu.space().dim()));
  for (int j = 0; j < nu.space().dim(); ++j) {
    const Eigen::VectorXcd c = f.values().cwiseProduct(nu.atoms().col(j));
    coords.push_back(weyl_synthesis(nu.group(), c));
  }
  return VectorWeylOperator(nu.group(), std::move(coords));
}

WeylOperator weyl_nu_weak(const PhaseFunction& f, const VectorMeasure& nu, const DualFunctional& xstar) {
  require_same_group(f.group(), nu.group(), "weyl_nu_weak");
  return weyl_transform(f.pointwise(radon_nikodym(nu, xstar)));
}

VectorWeylOperator weyl_of_measure(const VectorMeasure& nu) {
  return weyl_nu(PhaseFunction::constant(nu.group(), 1.0), nu);
}

bool kernel_support_test(const VectorMeasure& nu, const PhaseFunction& f) {
  const VectorWeylOperator w = weyl_nu(f, nu);
  const double fmax = f.values().size() ? f.values().cwiseAbs().maxCoeff() : 0.0;
  const double vmax = nu.atoms().size() ? nu.atoms().cwiseAbs().maxCoeff() : 0.0;
  return w.max_abs() <= 1e-10 * (1.0 + fmax * vmax);
}

// ---------------------------------------------------------------------------

namespace {

Eigen::VectorXcd vec(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int rows, int cols) {
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), rows, cols);
}

}  // namespace

MatrixPresentation::MatrixPresentation(std::vector<Eigen::MatrixXcd> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw DimensionMismatch("presentation needs at least one basis matrix");
  r_ = static_cast<int>(basis_.front().rows());
  vec_basis_.resize(static_cast<Eigen::Index>(r_) * r_, static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const auto& b = basis_[j];
    if (b.rows() != r_ || b.cols() != r_) throw DimensionMismatch("presentation basis must be square of one size");
    if (!b.allFinite()) throw DomainError("presentation basis has non-finite entries");
    vec_basis_.col(static_cast<Eigen::Index>(j)) = vec(b);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vec_basis_);
  const auto& sv = svd.singularValues();
  if (sv.size() < static_cast<Eigen::Index>(basis_.size()) || sv[0] == 0.0 ||
      sv[sv.size() - 1] <= 1e-10 * sv[0]) {
    throw DomainError("presentation basis is linearly dependent");
  }
}

MatrixPresentation MatrixPresentation::full(int r) {
  if (r < 1) throw DomainError("matrix size must be >= 1");
  std::vector<Eigen::MatrixXcd> basis;
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(r, r);
      e(i, j) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return MatrixPresentation(std::move(basis));
}

Eigen::MatrixXcd MatrixPresentation::compose(const Eigen::Ref<const Eigen::VectorXcd>& c) const {
  if (c.size() != dim()) throw DimensionMismatch("coordinate vector length differs from presentation");
  return unvec(vec_basis_ * c, r_, r_);
}

bool MatrixPresentation::contains(const Eigen::MatrixXcd& m, double tol) const {
  if (m.rows() != r_ || m.cols() != r_) return false;
  const Eigen::VectorXcd v = vec(m);
  const Eigen::VectorXcd c = vec_basis_.colPivHouseholderQr().solve(v);
  return (vec_basis_ * c - v).norm() <= tol * std::max(1.0, v.norm());
}

VectorPhaseFunction::VectorPhaseFunction(FiniteAbelianGroup group, std::vector<Eigen::MatrixXcd> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.phase_count()) {
    throw DimensionMismatch("vector phase function needs |G|^2 values");
  }
  r_ = static_cast<int>(values_.front().rows());
  for (const auto& v : values_) {
    if (v.rows() != r_ || v.cols() != r_) throw DimensionMismatch("values must be square of one size");
    if (!v.allFinite()) throw DomainError("vector phase function has non-finite entries");
  }
}

VectorPhaseFunction VectorPhaseFunction::from_coordinates(const FiniteAbelianGroup& group,
                                                          const MatrixPresentation& pres,
                                                          const Eigen::MatrixXcd& coords) {
  if (static_cast<std::size_t>(coords.rows()) != group.phase_count() || coords.cols() != pres.dim()) {
    throw DimensionMismatch("coordinates must be |G|^2 x dim");
  }
  std::vector<Eigen::MatrixXcd> values;
  values.reserve(group.phase_count());
  for (Eigen::Index i = 0; i < coords.rows(); ++i) values.push_back(pres.compose(coords.row(i).transpose()));
  return VectorPhaseFunction(group, std::move(values));
}

VectorPhaseFunction VectorPhaseFunction::scalar(const PhaseFunction& f, int r) {
  std::vector<Eigen::MatrixXcd> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(f[i] * Eigen::MatrixXcd::Identity(r, r));
  return VectorPhaseFunction(f.group(), std::move(values));
}

namespace {

Eigen::MatrixXcd weyl_tensor_sum(const VectorPhaseFunction& F) {
  const auto& g = F.group();
  const std::size_t n = g.order();
  const Eigen::Index r = F.size();
  const double w = g.haar().phase;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * r, static_cast<Eigen::Index>(n) * r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      const Eigen::MatrixXcd& val = F[g.phase_index(x, a)];
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t row = g.add(x, y);
        big.block(static_cast<Eigen::Index>(row) * r, static_cast<Eigen::Index>(y) * r, r, r) +=
            (g.pairing(a, row) * w) * val;
      }
    }
  }
  return big;
}

}  // namespace

Eigen::MatrixXcd vector_weyl_transform(const VectorPhaseFunction& F, const MatrixPresentation& pres) {
  if (F.size() != pres.size()) throw DimensionMismatch("function values do not match the presentation size");
  for (const auto& v : F.values()) {
    if (!pres.contains(v)) throw DimensionMismatch("function value outside the presented space");
  }
  return weyl_tensor_sum(F);
}

double vv_hausdorff_young_margin(const VectorPhaseFunction& F, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("vector Hausdorff-Young needs p in [1, 2]");
  const Exponent ep(p);
  const Exponent pd = ep.conjugate();
  const double w = F.group().haar().phase;
  double s = 0.0;
  for (const auto& v : F.values()) s += std::pow(schatten_norm(v, pd), p) * w;
  return std::pow(s, 1.0 / p) - schatten_norm(weyl_tensor_sum(F), pd);
}

// ---------------------------------------------------------------------------

MatrixMap::MatrixMap(int r, int s, Eigen::MatrixXcd action) : r_(r), s_(s), action_(std::move(action)) {
  if (r < 1 || s < 1) throw DomainError("matrix map sizes must be >= 1");
  if (action_.rows() != static_cast<Eigen::Index>(s) * s || action_.cols() != static_cast<Eigen::Index>(r) * r) {
    throw DimensionMismatch("action matrix must be s^2 x r^2");
  }
}

MatrixMap MatrixMap::identity(int r) {
  return MatrixMap(r, r, Eigen::MatrixXcd::Identity(r * r, r * r));
}

MatrixMap MatrixMap::transpose(int r) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(r * r, r * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a(j + i * r, i + j * r) = 1.0;
  }
  return MatrixMap(r, r, std::move(a));
}

Eigen::MatrixXcd MatrixMap::apply(const Eigen::MatrixXcd& m) const {
  if (m.rows() != r_ || m.cols() != r_) throw DimensionMismatch("input matrix size differs from map domain");
  return unvec(action_ * vec(m), s_, s_);
}

MatrixMap MatrixMap::adjoint() const { return MatrixMap(s_, r_, action_.adjoint()); }

Eigen::MatrixXcd MatrixMap::amplify(const Eigen::MatrixXcd& x, int k) const {
  if (x.rows() != static_cast<Eigen::Index>(k) * r_ || x.cols() != x.rows()) {
    throw DimensionMismatch("amplified input must be (k r) x (k r)");
  }
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(k) * s_, static_cast<Eigen::Index>(k) * s_);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.block(i * s_, j * s_, s_, s_) = apply(x.block(i * r_, j * r_, r_, r_));
  }
  return out;
}

namespace {

// Ascent for sup ||T(X)|| over ||X|| <= 1: with u, v top singular vectors of
// T(X), the polar part of T*(u v^*) is a unit-norm X' with
// ||T(X')|| >= |u^* T(X') v| = ||T*(u v^*)||_1 >= ||T(X)||.
double amplified_ascent(const MatrixMap& T, const MatrixMap& Tadj, Eigen::MatrixXcd x, int k) {
  double best = 0.0;
  for (int it = 0; it < 100; ++it) {
    const Eigen::MatrixXcd y = T.amplify(x, k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(y, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double val = svd.singularValues()[0];
    if (val <= best * (1.0 + 1e-13) && it > 0) {
      best = std::max(best, val);
      break;
    }
    best = std::max(best, val);
    const Eigen::MatrixXcd g = Tadj.amplify(svd.matrixU().col(0) * svd.matrixV().col(0).adjoint(), k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> pol(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (pol.singularValues()[0] == 0.0) break;
    x = pol.matrixU() * pol.matrixV().adjoint();
  }
  return best;
}

}  // namespace

double amplification_lower_bound(const MatrixMap& T, int k, std::size_t samples, std::uint64_t seed) {
  if (k < 1) throw DomainError("amplification level must be >= 1");
  const MatrixMap Tadj = T.adjoint();
  double best = 0.0;
  for (int level = 1; level <= k; ++level) {
    Rng rng = Rng::stream(seed, "amplification/" + std::to_string(level));
    const Eigen::Index n = static_cast<Eigen::Index>(level) * T.domain_size();
    for (std::size_t s = 0; s < samples; ++s) {
      Eigen::MatrixXcd x(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) x(i, j) = rng.cnormal();
      }
      const double nrm = Eigen::JacobiSVD<Eigen::MatrixXcd>(x).singularValues()[0];
      if (nrm == 0.0) continue;
      best = std::max(best, amplified_ascent(T, Tadj, x / nrm, level));
    }
  }
  return best;
}

}  // namespace hweyl
