#include "hweyl/weyl.hpp"

#include <algorithm>
#include <cmath>

#include "character_transform.hpp"
#include "hweyl/errors.hpp"

namespace hweyl {

namespace {

void require_finite(const Eigen::VectorXcd& v, const char* what) {
  if (!v.allFinite()) throw DomainError(std::string(what) + " has non-finite entries");
}

}  // namespace

PhaseFunction::PhaseFunction(FiniteAbelianGroup group)
    : group_(std::move(group)),
      values_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group_.phase_count()))) {}

PhaseFunction::PhaseFunction(FiniteAbelianGroup group, Eigen::VectorXcd values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != group_.phase_count()) {
    throw DimensionMismatch("phase function needs " + std::to_string(group_.phase_count()) +
                            " values, got " + std::to_string(values_.size()));
  }
  require_finite(values_, "phase function");
}

PhaseFunction PhaseFunction::constant(const FiniteAbelianGroup& group, cplx value) {
  return PhaseFunction(group, Eigen::VectorXcd::Constant(
                                  static_cast<Eigen::Index>(group.phase_count()), value));
}

PhaseFunction PhaseFunction::delta(const FiniteAbelianGroup& group, std::size_t phase, cplx value) {
  if (phase >= group.phase_count()) throw DomainError("phase index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group.phase_count()));
  v[static_cast<Eigen::Index>(phase)] = value;
  return PhaseFunction(group, std::move(v));
}

PhaseFunction PhaseFunction::operator+(const PhaseFunction& other) const {
  require_same_group(group_, other.group_, "phase function sum");
  return PhaseFunction(group_, values_ + other.values_);
}

PhaseFunction PhaseFunction::operator-(const PhaseFunction& other) const {
  require_same_group(group_, other.group_, "phase function difference");
  return PhaseFunction(group_, values_ - other.values_);
}

PhaseFunction PhaseFunction::operator*(cplx s) const { return PhaseFunction(group_, values_ * s); }

PhaseFunction PhaseFunction::pointwise(const PhaseFunction& other) const {
  require_same_group(group_, other.group_, "pointwise product");
  return PhaseFunction(group_, values_.cwiseProduct(other.values_));
}

WeylOperator::WeylOperator(FiniteAbelianGroup group)
    : group_(std::move(group)),
      matrix_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(group_.order()),
                                     static_cast<Eigen::Index>(group_.order()))) {}

WeylOperator::WeylOperator(FiniteAbelianGroup group, Eigen::MatrixXcd matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(group_.order());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw DimensionMismatch("Weyl operator must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  if (!matrix_.allFinite()) throw DomainError("Weyl operator has non-finite entries");
}

WeylOperator WeylOperator::operator*(const WeylOperator& other) const {
  require_same_group(group_, other.group_, "operator product");
  return WeylOperator(group_, matrix_ * other.matrix_);
}

Eigen::MatrixXcd schrodinger_matrix(const FiniteAbelianGroup& group, std::size_t phase) {
  const std::size_t n = group.order();
  const std::size_t x = group.phase_element(phase);
  const std::size_t a = group.phase_character(phase);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t y = 0; y < n; ++y) {
    const std::size_t row = group.add(x, y);
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(y)) = group.pairing(a, row);
  }
  return m;
}

WeylOperator schrodinger_rep(const PhasePoint& point) {
  return WeylOperator(point.group(), schrodinger_matrix(point.group(), point.index()));
}

Eigen::MatrixXcd weyl_synthesis(const FiniteAbelianGroup& group, const Eigen::VectorXcd& coeffs) {
  const std::size_t n = group.order();
  if (static_cast<std::size_t>(coeffs.size()) != group.phase_count()) {
    throw DimensionMismatch("synthesis coefficients must have length |G|^2");
  }
  // Column contributions per shift x: entry (y', y'-x) = sum_a c(x,a) chi_a(y').
  Eigen::VectorXcd shifted(coeffs.size());
  detail::character_transform(group, coeffs.data(), shifted.data(), n,
                              detail::TransformSign::synthesis);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t yp = 0; yp < n; ++yp) {
      m(static_cast<Eigen::Index>(yp), static_cast<Eigen::Index>(group.sub(yp, x))) =
          shifted[static_cast<Eigen::Index>(x * n + yp)];
    }
  }
  return m;
}

WeylOperator weyl_transform(const PhaseFunction& f, TransformPath path) {
  const auto& g = f.group();
  const double w = g.haar().phase;
  if (path == TransformPath::fft) {
    return WeylOperator(g, weyl_synthesis(g, f.values()) * w);
  }
  const std::size_t n = g.order();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      const cplx c = f.at(x, a) * w;
      if (c == cplx{}) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t row = g.add(x, y);
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(y)) += c * g.pairing(a, row);
      }
    }
  }
  return WeylOperator(g, std::move(m));
}

PhaseFunction weyl_inverse(const WeylOperator& op, TransformPath path) {
  const auto& g = op.group();
  const std::size_t n = g.order();
  const auto& A = op.matrix();
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(n * n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t yp = 0; yp < n; ++yp) {
      diag[static_cast<Eigen::Index>(x * n + yp)] =
          A(static_cast<Eigen::Index>(yp), static_cast<Eigen::Index>(g.sub(yp, x)));
    }
  }
  if (path == TransformPath::fft) {
    Eigen::VectorXcd out(diag.size());
    detail::character_transform(g, diag.data(), out.data(), n, detail::TransformSign::analysis);
    return PhaseFunction(g, std::move(out));
  }
  Eigen::VectorXcd out(diag.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      cplx s{};
      for (std::size_t yp = 0; yp < n; ++yp) {
        s += std::conj(g.pairing(a, yp)) * diag[static_cast<Eigen::Index>(x * n + yp)];
      }
      out[static_cast<Eigen::Index>(g.phase_index(x, a))] = s;
    }
  }
  return PhaseFunction(g, std::move(out));
}

double lp_norm(const PhaseFunction& f, Exponent p) {
  const auto& v = f.values();
  if (p.infinite()) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  const double w = f.group().haar().phase;
  const double e = p.value();
  double s = 0.0;
  if (e == 2.0) {
    s = v.squaredNorm();
  } else if (e == 1.0) {
    s = v.cwiseAbs().sum();
  } else {
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), e);
  }
  return std::pow(s * w, 1.0 / e);
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  Eigen::VectorXd sv;
  if (m.size() == 0) return sv;
  if (std::max(m.rows(), m.cols()) <= 16) {
    sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  } else {
    sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  }
  const double cut = sv.size() ? 1e-12 * sv[0] : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] < cut) sv[i] = 0.0;
  }
  return sv;
}

double schatten_norm(const Eigen::MatrixXcd& m, Exponent p) {
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0) return 0.0;
  if (p.infinite()) return sv[0];
  const double e = p.value();
  if (e == 2.0) return sv.norm();
  if (e == 1.0) return sv.sum();
  // Scale by the largest value so that large p cannot overflow.
  const double top = sv[0];
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) s += std::pow(sv[i] / top, e);
  return top * std::pow(s, 1.0 / e);
}

double schatten_norm(const WeylOperator& op, Exponent p) { return schatten_norm(op.matrix(), p); }

double hausdorff_young_margin(const PhaseFunction& f, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("Hausdorff-Young exponent must lie in [1,2]");
  const Exponent e(p);
  return lp_norm(f, e) - schatten_norm(weyl_transform(f), e.conjugate());
}

}  // namespace hweyl
