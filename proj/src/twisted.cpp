#include "hweyl/twisted.hpp"

#include <chrono>
#include <cmath>

#include "character_transform.hpp"
#include "hweyl/errors.hpp"
#include "hweyl/fixtures.hpp"

namespace hweyl {

std::string to_string(ConvPath path) {
  switch (path) {
    case ConvPath::direct:
      return "direct";
    case ConvPath::weyl_factorized:
      return "weyl_factorized";
    case ConvPath::fft:
      return "fft";
  }
  return "unknown";
}

ConvPath conv_path_from_string(const std::string& name) {
  if (name == "direct") return ConvPath::direct;
  if (name == "weyl_factorized" || name == "weyl") return ConvPath::weyl_factorized;
  if (name == "fft") return ConvPath::fft;
  throw DomainError("unknown convolution path '" + name + "'");
}

namespace {

PhaseFunction convolve_direct(const PhaseFunction& f, const PhaseFunction& g) {
  const auto& G = f.group();
  const std::size_t n = G.order();
  const double w = G.haar().phase;
  const cplx* fv = f.values().data();
  const cplx* gv = g.values().data();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n * n));
  for (std::size_t x = 0; x < n; ++x) {
    cplx* orow = out.data() + x * n;
    for (std::size_t xs = 0; xs < n; ++xs) {
      const cplx* frow = fv + G.sub(x, xs) * n;
      const std::size_t d = G.sub(xs, x);
      for (std::size_t as = 0; as < n; ++as) {
        // conj(chi'(x)) chi'(x') = chi'(x' - x)
        const cplx coef = gv[xs * n + as] * G.pairing(as, d) * w;
        if (coef == cplx{}) continue;
        const std::size_t nas = G.neg(as);
        for (std::size_t a = 0; a < n; ++a) orow[a] += frow[G.add(a, nas)] * coef;
      }
    }
  }
  return PhaseFunction(G, std::move(out));
}

PhaseFunction convolve_weyl(const PhaseFunction& f, const PhaseFunction& g) {
  const WeylOperator prod =
      weyl_transform(f, TransformPath::direct) * weyl_transform(g, TransformPath::direct);
  return weyl_inverse(prod, TransformPath::direct);
}

PhaseFunction convolve_fft(const PhaseFunction& f, const PhaseFunction& g) {
  const auto& G = f.group();
  const std::size_t n = G.order();
  const double w = G.haar().phase;
  // Shift-domain representation: W(f)[y, y - x] = w F[x][y].
  Eigen::VectorXcd F(f.values().size()), Gs(g.values().size());
  detail::character_transform(G, f.values().data(), F.data(), n, detail::TransformSign::synthesis);
  detail::character_transform(G, g.values().data(), Gs.data(), n, detail::TransformSign::synthesis);
  Eigen::VectorXcd H = Eigen::VectorXcd::Zero(F.size());
  for (std::size_t x = 0; x < n; ++x) {
    cplx* hrow = H.data() + x * n;
    for (std::size_t x1 = 0; x1 < n; ++x1) {
      const cplx* frow = F.data() + x1 * n;
      const cplx* grow = Gs.data() + G.sub(x, x1) * n;
      for (std::size_t y = 0; y < n; ++y) hrow[y] += frow[y] * grow[G.sub(y, x1)];
    }
  }
  Eigen::VectorXcd out(H.size());
  detail::character_transform(G, H.data(), out.data(), n, detail::TransformSign::analysis);
  out *= w * w;
  return PhaseFunction(G, std::move(out));
}

}  // namespace

PhaseFunction twisted_convolve(const PhaseFunction& f, const PhaseFunction& g, ConvPath path) {
  require_same_group(f.group(), g.group(), "twisted_convolve");
  switch (path) {
    case ConvPath::direct:
      return convolve_direct(f, g);
    case ConvPath::weyl_factorized:
      return convolve_weyl(f, g);
    case ConvPath::fft:
      return convolve_fft(f, g);
  }
  throw DomainError("unknown convolution path");
}

PhaseFunction twisted_translate(const PhaseFunction& f, std::size_t shift_phase) {
  const auto& G = f.group();
  if (shift_phase >= G.phase_count()) throw DomainError("shift phase index out of range");
  const std::size_t n = G.order();
  const std::size_t xs = G.phase_element(shift_phase);
  const std::size_t as = G.phase_character(shift_phase);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(n * n));
  for (std::size_t x = 0; x < n; ++x) {
    const cplx phase = G.pairing(as, G.sub(xs, x));
    for (std::size_t a = 0; a < n; ++a) {
      out[static_cast<Eigen::Index>(x * n + a)] = f.at(G.sub(x, xs), G.sub(a, as)) * phase;
    }
  }
  return PhaseFunction(G, std::move(out));
}

PhaseFunction twisted_translate(const PhaseFunction& f, const PhasePoint& shift) {
  require_same_group(f.group(), shift.group(), "twisted_translate");
  return twisted_translate(f, shift.index());
}

PhaseFunction twisted_identity(const FiniteAbelianGroup& group) {
  return PhaseFunction::delta(group, 0, static_cast<double>(group.order()));
}

Exponent young_target_exponent(Exponent p, Exponent q) {
  const double s = p.reciprocal() + q.reciprocal();
  if (s < 1.0 - 1e-15) {
    throw DomainError("unsupported exponent pair: 1/p + 1/q = " + std::to_string(s) + " < 1");
  }
  return Exponent::from_reciprocal(std::max(0.0, s - 1.0));
}

YoungMargins young_margins(const PhaseFunction& f, const PhaseFunction& g, Exponent p, Exponent q) {
  require_same_group(f.group(), g.group(), "young_margins");
  const Exponent r = young_target_exponent(p, q);
  const Exponent one(1.0);
  const PhaseFunction fg = twisted_convolve(f, g, ConvPath::direct);
  const PhaseFunction gf = twisted_convolve(g, f, ConvPath::direct);
  const double fp = lp_norm(f, p);
  const double gq = lp_norm(g, q);
  const double f1 = lp_norm(f, one);
  return YoungMargins{p,
                      q,
                      r,
                      fp * gq - lp_norm(fg, r),
                      f1 * gq - lp_norm(fg, q),
                      f1 * gq - lp_norm(gf, q),
                      fp * gq};
}

BenchReport bench_conv(const FiniteAbelianGroup& group, std::size_t trials, std::uint64_t seed,
                       std::size_t ceiling) {
  if (group.order() > ceiling) {
    throw CeilingExceeded("benchmark group order " + std::to_string(group.order()) +
                          " exceeds ceiling " + std::to_string(ceiling));
  }
  BenchReport report;
  if (trials == 0) return report;
  Rng rng = Rng::stream(seed, "bench_conv/" + group.describe());
  const ConvPath paths[] = {ConvPath::direct, ConvPath::weyl_factorized, ConvPath::fft};
  std::vector<std::vector<double>> times(3);
  std::vector<double> worst(3, 0.0);
  using clock = std::chrono::steady_clock;
  for (std::size_t t = 0; t < trials; ++t) {
    const PhaseFunction f = random_phase_function(group, rng);
    const PhaseFunction g = random_phase_function(group, rng);
    Eigen::VectorXcd reference;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto start = clock::now();
      const PhaseFunction h = twisted_convolve(f, g, paths[k]);
      const auto stop = clock::now();
      times[k].push_back(std::chrono::duration<double, std::nano>(stop - start).count());
      if (k == 0) {
        reference = h.values();
      } else {
        const double denom = std::max(reference.norm(), 1e-300);
        worst[k] = std::max(worst[k], (h.values() - reference).norm() / denom);
      }
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    double mean = 0.0;
    for (double v : times[k]) mean += v;
    mean /= static_cast<double>(times[k].size());
    double var = 0.0;
    for (double v : times[k]) var += (v - mean) * (v - mean);
    const double sd = times[k].size() > 1 ? std::sqrt(var / static_cast<double>(times[k].size() - 1)) : 0.0;
    report.rows.push_back({group.describe(), paths[k], mean, sd, worst[k]});
  }
  report.speedup_weyl_factorized = report.rows[0].mean_ns / report.rows[1].mean_ns;
  report.speedup_fft = report.rows[0].mean_ns / report.rows[2].mean_ns;
  return report;
}

}  // namespace hweyl
