#include "hweyl/vector_twisted.hpp"

#include <cmath>

#include "hweyl/errors.hpp"

namespace hweyl {

VectorPhaseField::VectorPhaseField(FiniteAbelianGroup group, NormedSpace space, Eigen::MatrixXcd values)
    : group_(std::move(group)), space_(space), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.rows()) != group_.phase_count() || values_.cols() != space_.dim()) {
    throw DimensionMismatch("vector field must be |G|^2 x dim");
  }
  if (!values_.allFinite()) throw DomainError("vector field has non-finite entries");
}

PhaseFunction VectorPhaseField::pair(const DualFunctional& xstar) const {
  if (xstar.dim() != space_.dim()) throw DimensionMismatch("functional dimension differs from field");
  return PhaseFunction(group_, values_ * xstar.coeffs().conjugate());
}

VectorMeasure VectorPhaseField::as_density() const {
  return VectorMeasure(group_, space_, values_ * group_.haar().phase);
}

ScalarMeasure::ScalarMeasure(FiniteAbelianGroup group, Eigen::VectorXcd atoms)
    : group_(std::move(group)), atoms_(std::move(atoms)) {
  if (static_cast<std::size_t>(atoms_.size()) != group_.phase_count()) {
    throw DimensionMismatch("scalar measure needs |G|^2 atoms");
  }
  if (!atoms_.allFinite()) throw DomainError("scalar measure has non-finite atoms");
}

ScalarMeasure ScalarMeasure::from_density(const PhaseFunction& f) {
  return ScalarMeasure(f.group(), f.values() * f.group().haar().phase);
}

ScalarMeasure ScalarMeasure::point_mass(const FiniteAbelianGroup& group, std::size_t phase, cplx mass) {
  if (phase >= group.phase_count()) throw DomainError("phase index out of range");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group.phase_count()));
  a[static_cast<Eigen::Index>(phase)] = mass;
  return ScalarMeasure(group, std::move(a));
}

PhaseFunction tconv_nu_weak(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu,
                            const DualFunctional& xstar) {
  require_same_group(f.group(), g.group(), "tconv_nu_weak");
  require_same_group(f.group(), nu.group(), "tconv_nu_weak");
  return twisted_convolve(f, g.pointwise(radon_nikodym(nu, xstar)), ConvPath::direct);
}

VectorPhaseField tconv_nu_vector(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu) {
  require_same_group(f.group(), g.group(), "tconv_nu_vector");
  require_same_group(f.group(), nu.group(), "tconv_nu_vector");
  const auto& G = f.group();
  const std::size_t n = G.order();
  const std::size_t m = G.phase_count();
  const auto& V = nu.atoms();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(V.rows(), V.cols());
  for (std::size_t sp = 0; sp < m; ++sp) {
    const cplx gv = g[sp];
    if (gv == cplx{}) continue;
    const std::size_t xs = G.phase_element(sp);
    const std::size_t as = G.phase_character(sp);
    for (std::size_t x = 0; x < n; ++x) {
      // conj(chi'(x)) chi'(x') = chi'(x' - x)
      const cplx phase = gv * G.pairing(as, G.sub(xs, x));
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t s = G.phase_index(x, a);
        const cplx c = f[G.phase_sub(s, sp)] * phase;
        if (c != cplx{}) out.row(static_cast<Eigen::Index>(s)) += c * V.row(static_cast<Eigen::Index>(sp));
      }
    }
  }
  return VectorPhaseField(G, nu.space(), std::move(out));
}

VectorMeasure measure_tconv(const ScalarMeasure& mu, const VectorMeasure& nu) {
  require_same_group(mu.group(), nu.group(), "measure_tconv");
  const auto& G = nu.group();
  const std::size_t m = G.phase_count();
  const auto& V = nu.atoms();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(V.rows(), V.cols());
  for (std::size_t p = 0; p < m; ++p) {
    const cplx mass = mu.atoms()[static_cast<Eigen::Index>(p)];
    if (mass == cplx{}) continue;
    const std::size_t x = G.phase_element(p);
    for (std::size_t q = 0; q < m; ++q) {
      const cplx c = mass * std::conj(G.pairing(G.phase_character(q), x));
      out.row(static_cast<Eigen::Index>(G.phase_add(p, q))) += c * V.row(static_cast<Eigen::Index>(q));
    }
  }
  NormedSpace space = nu.space();
  if (space.is_real() && out.size() > 0 && out.imag().cwiseAbs().maxCoeff() != 0.0) {
    space = NormedSpace(space.dim(), ScalarField::complex, space.q());
  }
  return VectorMeasure(G, space, std::move(out));
}

VectorPhaseField fn_measure_tconv(const PhaseFunction& f, const VectorMeasure& nu) {
  require_same_group(f.group(), nu.group(), "fn_measure_tconv");
  const auto& G = f.group();
  const std::size_t m = G.phase_count();
  const auto& V = nu.atoms();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(V.rows(), V.cols());
  for (std::size_t q = 0; q < m; ++q) {
    const PhaseFunction t = twisted_translate(f, q);
    out.noalias() += t.values() * V.row(static_cast<Eigen::Index>(q));
  }
  NormedSpace space = nu.space();
  if (space.is_real() && out.size() > 0 && out.imag().cwiseAbs().maxCoeff() != 0.0) {
    space = NormedSpace(space.dim(), ScalarField::complex, space.q());
  }
  return VectorPhaseField(G, space, std::move(out));
}

Estimate pp_norm_of_field(const VectorPhaseField& field, Exponent p, const SearchConfig& cfg) {
  if (p.infinite()) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < field.values().rows(); ++i) {
      best = std::max(best, field.space().norm(field.values().row(i).transpose()));
    }
    return Estimate::exact_value(best);
  }
  // The density measure phi dm has h_{x*} = <phi, x*>, so this is its p-semivariation.
  SearchConfig c = cfg;
  c.estimator_opt_in = true;
  return p_semivariation(field.as_density(), p, c);
}

namespace {

SearchConfig with_estimators(const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.estimator_opt_in = true;
  return c;
}

}  // namespace

VectorYoungMargin pp_contraction_margin(const PhaseFunction& f, const VectorMeasure& nu, Exponent p,
                                        const SearchConfig& cfg) {
  const SearchConfig c = with_estimators(cfg);
  const double fp = lp_norm(f, p);
  const Estimate sv = semivariation(nu, c);
  const Estimate lhs = pp_norm_of_field(fn_measure_tconv(f, nu), p, c);
  VectorYoungMargin out;
  out.scale = std::max(fp * sv.value, 0.0);
  out.margin = fp * sv.value - lhs.value;
  out.bracket_width = (lhs.upper - lhs.value) + fp * (sv.upper - sv.value);
  // Both estimates are attained values (lower bounds); only the right side's
  // bracket can hide slack.
  out.tolerance = 1e-10 * std::max(out.scale, lhs.value) + fp * (sv.upper - sv.value);
  return out;
}

VectorYoungMargin young_vvyi_margin(const PhaseFunction& f, const VectorMeasure& nu, Exponent p, Exponent q,
                                    const SearchConfig& cfg) {
  if (p.infinite() || p.value() <= 1.0) throw DomainError("vector Young inequality needs 1 < p < inf");
  if (p.reciprocal() + q.reciprocal() <= 1.0) throw DomainError("vector Young inequality needs 1/p + 1/q > 1");
  const Exponent r = young_target_exponent(p, q);
  const SearchConfig c = with_estimators(cfg);
  const double fq = lp_norm(f, q);
  const Estimate psv = p_semivariation(nu, p, c);
  const Estimate lhs = pp_norm_of_field(fn_measure_tconv(f, nu), r, c);
  VectorYoungMargin out;
  out.scale = std::max(fq * psv.value, 0.0);
  out.margin = fq * psv.value - lhs.value;
  out.bracket_width = (lhs.upper - lhs.value) + fq * (psv.upper - psv.value);
  out.tolerance = 1e-10 * std::max(out.scale, lhs.value) + fq * (psv.upper - psv.value);
  return out;
}

double weyl_tconv_identity_check(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu,
                                 const DualFunctional& xstar) {
  const Eigen::MatrixXcd lhs = weyl_transform(tconv_nu_weak(f, g, nu, xstar)).matrix();
  const Eigen::MatrixXcd wf = weyl_transform(f).matrix();
  const Eigen::MatrixXcd wg = weyl_nu_weak(g, nu, xstar).matrix();
  const double dev = (lhs - wf * wg).norm();
  const double scale = wf.norm() * wg.norm();
  return scale > 0 ? dev / scale : dev;
}

}  // namespace hweyl
