#include "doctest.h"

#include "hweyl/errors.hpp"
#include "hweyl/fixtures.hpp"
#include "hweyl/io.hpp"
#include "hweyl/verify.hpp"

using namespace hweyl;
using io::json;

TEST_SUITE("io") {
  TEST_CASE("round trips") {
    Rng rng(71);
    const FiniteAbelianGroup g({4, 2});
    CHECK(io::to_json(g) == json::parse(R"({"orders":[4,2]})"));
    CHECK(io::group_from_json(io::to_json(g)) == g);

    const PhaseFunction f = random_phase_function(g, rng);
    CHECK(io::phase_function_from_json(io::to_json(f)).values() == f.values());
    const WeylOperator w = weyl_transform(f);
    CHECK(io::weyl_operator_from_json(io::to_json(w)).matrix() == w.matrix());

    const NormedSpace s(3, ScalarField::complex, Exponent::infinity());
    const VectorMeasure nu = random_vector_measure(g, s, rng);
    const VectorMeasure back = io::vector_measure_from_json(io::to_json(nu));
    CHECK(back.atoms() == nu.atoms());
    CHECK(back.space() == s);
  }

  TEST_CASE("parse errors name the location") {
    auto path_of = [](const char* text, auto reader) {
      try {
        reader(json::parse(text));
      } catch (const ParseError& e) {
        return e.path();
      }
      return std::string("no error");
    };
    auto pf = [](const json& j) { io::phase_function_from_json(j); };
    auto vm = [](const json& j) { io::vector_measure_from_json(j); };
    CHECK(path_of(R"({"group":{"orders":[2]},"values":[1,2,"x",4]})", pf) == "$.values[2]");
    CHECK(path_of(R"({"group":{"orders":[2]},"values":[1,2,3]})", pf) == "$.values");
    CHECK(path_of(R"({"group":{"orders":[0]},"values":[]})", pf) == "$.group.orders[0]");
    CHECK(path_of(R"({"values":[]})", pf) == "$");
    CHECK(path_of(R"({"group":{"orders":[1]},"space":{"dim":2,"field":"real"},"atoms":[[1]]})", vm) == "$.atoms[0]");
    CHECK(path_of(R"({"group":{"orders":[1]},"space":{"dim":1,"field":"quaternion"},"atoms":[[1]]})", vm) ==
          "$.space.field");
    CHECK(path_of(R"({"group":{"orders":[1]},"space":{"dim":1,"field":"real"},"atoms":[[[0,1]]]})", vm) == "$.atoms");
  }
}

TEST_SUITE("verify") {
  TEST_CASE("zero trials is a vacuous pass") {
    VerifyConfig cfg;
    cfg.trials = 0;
    const auto rep = run_verify(Suite::all, cfg);
    CHECK(rep.pass);
    CHECK(rep.checks.size() == check_names(Suite::all).size());
    for (const auto& c : rep.checks) {
      CHECK(c.trials == 0);
      CHECK(c.pass);
    }
  }

  TEST_CASE("reports are deterministic and sorted") {
    VerifyConfig cfg;
    cfg.trials = 2;
    cfg.seed = 42;
    const auto a = report_to_json(run_verify(Suite::vtwisted, cfg)).dump();
    const auto b = report_to_json(run_verify(Suite::vtwisted, cfg)).dump();
    CHECK(a == b);
    const auto names = check_names(Suite::all);
    CHECK(std::is_sorted(names.begin(), names.end()));
    cfg.seed = 43;
    CHECK(report_to_json(run_verify(Suite::vtwisted, cfg)).dump() != a);
  }

  TEST_CASE("report schema") {
    VerifyConfig cfg;
    cfg.trials = 1;
    const json j = report_to_json(run_verify(Suite::core, cfg));
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "core");
    CHECK(j["config"]["groups"].size() == 5);
    for (const auto& c : j["checks"]) {
      CHECK(c.contains("check_name"));
      CHECK(c.contains("anchor"));
      CHECK(c.contains("worst_margin"));
      CHECK(c.contains("tolerance"));
      CHECK(c["pass"].is_boolean());
    }
  }

  TEST_CASE("core suite passes on defaults") {
    const auto rep = run_verify(Suite::core, VerifyConfig{});
    CHECK(rep.pass);
    for (const auto& c : rep.checks) {
      if (c.name == "core.plancherel") CHECK(c.worst_margin >= -1e-10);
    }
  }

  TEST_CASE("config errors") {
    VerifyConfig cfg;
    cfg.groups.clear();
    CHECK_THROWS_AS(run_verify(Suite::core, cfg), DomainError);
    CHECK_THROWS_AS(suite_from_string("bogus"), DomainError);
    CHECK(suite_from_string("vweyl") == Suite::vweyl);
  }
}
