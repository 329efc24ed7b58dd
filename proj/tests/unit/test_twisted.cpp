#include "doctest.h"

#include "hweyl/errors.hpp"
#include "hweyl/fixtures.hpp"
#include "hweyl/twisted.hpp"
#include "oracles.hpp"

using namespace hweyl;

namespace {

double rel(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double s = std::max(a.norm(), b.norm());
  return s > 0 ? (a - b).norm() / s : 0.0;
}

const ConvPath kPaths[] = {ConvPath::direct, ConvPath::weyl_factorized, ConvPath::fft};

}  // namespace

TEST_SUITE("twisted") {
  TEST_CASE("every path matches the defining sum") {
    Rng rng(21);
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {6}, {2, 3}}) {
      const FiniteAbelianGroup g(orders);
      const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
      const Eigen::VectorXcd ref = oracle::tconv(g, f.values(), h.values());
      for (ConvPath p : kPaths) CHECK(rel(twisted_convolve(f, h, p).values(), ref) < 1e-12);
    }
  }

  TEST_CASE("paths agree up to |G| = 16") {
    Rng rng(22);
    for (const auto& orders : std::vector<std::vector<int>>{{8}, {16}, {4, 4}, {2, 2, 2, 2}, {2, 8}, {5, 3}}) {
      const FiniteAbelianGroup g(orders);
      const PhaseFunction f = random_phase_function(g, rng), h = random_phase_function(g, rng);
      const auto d = twisted_convolve(f, h, ConvPath::direct).values();
      CHECK(rel(twisted_convolve(f, h, ConvPath::weyl_factorized).values(), d) < 1e-9);
      CHECK(rel(twisted_convolve(f, h, ConvPath::fft).values(), d) < 1e-9);
    }
  }

  TEST_CASE("algebra structure") {
    Rng rng(23);
    const FiniteAbelianGroup g({2, 3});
    const PhaseFunction a = random_phase_function(g, rng), b = random_phase_function(g, rng),
                        c = random_phase_function(g, rng);
    const auto ab_c = twisted_convolve(twisted_convolve(a, b), c).values();
    const auto a_bc = twisted_convolve(a, twisted_convolve(b, c)).values();
    CHECK(rel(ab_c, a_bc) < 1e-10);
    const auto e = twisted_identity(g);
    CHECK(rel(twisted_convolve(e, a).values(), a.values()) < 1e-12);
    CHECK(rel(twisted_convolve(a, e).values(), a.values()) < 1e-12);
    CHECK(twisted_convolve(PhaseFunction(g), a).values().norm() == 0.0);
    // W(f x g) = W(f) W(g)
    CHECK((weyl_transform(twisted_convolve(a, b)).matrix() - (weyl_transform(a) * weyl_transform(b)).matrix()).norm() <
          1e-10 * weyl_transform(a).matrix().norm() * weyl_transform(b).matrix().norm());
  }

  TEST_CASE("not commutative") {
    const FiniteAbelianGroup z2({2});
    const auto f = PhaseFunction::delta(z2, z2.phase_index(1, 0));
    const auto h = PhaseFunction::delta(z2, z2.phase_index(0, 1));
    CHECK((twisted_convolve(f, h) - twisted_convolve(h, f)).values().norm() > 0.5);
  }

  TEST_CASE("twisted translate") {
    Rng rng(24);
    const FiniteAbelianGroup g({4, 2});
    const PhaseFunction f = random_phase_function(g, rng);
    CHECK(rel(twisted_translate(f, 0).values(), f.values()) < 1e-15);
    const std::size_t n = g.order();
    for (std::size_t s = 0; s < g.phase_count(); s += 3) {
      const auto t = twisted_translate(f, s);
      const std::size_t xs = g.phase_element(s), as = g.phase_character(s);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < n; ++a) {
          const cplx expect = f.values()[static_cast<Eigen::Index>(oracle::sub(g, x, xs) * n + oracle::sub(g, a, as))] *
                              std::conj(oracle::chi(g, as, x)) * oracle::chi(g, as, xs);
          CHECK(std::abs(t.at(x, a) - expect) < 1e-12);
        }
      }
      CHECK(lp_norm(t, Exponent(1.5)) == doctest::Approx(lp_norm(f, Exponent(1.5))));
    }
    CHECK_THROWS_AS(twisted_translate(f, g.phase_count()), DomainError);
  }

  TEST_CASE("Young margins") {
    Rng rng(25);
    const FiniteAbelianGroup z4({4});
    const PhaseFunction f = random_phase_function(z4, rng);
    const auto zero = young_margins(f, PhaseFunction(z4), Exponent(2.0), Exponent(2.0));
    CHECK(zero.young == 0.0);
    CHECK(zero.l1_left == 0.0);
    CHECK(zero.l1_right == 0.0);
    for (int i = 0; i < 200; ++i) {
      const PhaseFunction a = random_phase_function(z4, rng), b = random_phase_function(z4, rng);
      const auto m = young_margins(a, b, Exponent(1.0), Exponent(2.0));
      CHECK(m.young >= -1e-10 * m.scale);
      // Target exponent r = 2 here, so the margin is checked against the oracle convolution too.
      const double lhs = oracle::lq(oracle::tconv(z4, a.values(), b.values()), 2.0) * std::pow(0.25, 0.5);
      CHECK(m.young == doctest::Approx(m.scale - lhs).epsilon(1e-9));
    }
    CHECK_THROWS_AS(young_margins(f, f, Exponent(3.0), Exponent(3.0)), DomainError);
    CHECK(young_target_exponent(Exponent(2.0), Exponent(2.0)).infinite());
    CHECK(young_target_exponent(Exponent(1.0), Exponent(3.0)).value() == doctest::Approx(3.0));
  }

  TEST_CASE("path names") {
    CHECK(conv_path_from_string("weyl") == ConvPath::weyl_factorized);
    CHECK(to_string(ConvPath::fft) == "fft");
    CHECK_THROWS_AS(conv_path_from_string("nope"), DomainError);
  }

  TEST_CASE("benchmark contract") {
    const auto rep = bench_conv(FiniteAbelianGroup({16}), 3);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& r : rep.rows) CHECK(r.agreement_err <= 1e-9);
    CHECK(bench_conv(FiniteAbelianGroup({4}), 0).rows.empty());
    CHECK_THROWS_AS(bench_conv(FiniteAbelianGroup({256}), 1), CeilingExceeded);
  }
}
