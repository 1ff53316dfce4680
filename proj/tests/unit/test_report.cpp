#include <cstdio>
#include <string>

#include "algebra_json.hpp"
#include "builtin.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "helpers.hpp"
#include "report.hpp"

namespace {

qt::Element element_from_json(const qt::AlgebraPresentation& a, const nlohmann::json& ej) {
  const nlohmann::json& coords = ej.at("coords");
  REQUIRE(coords.size() == a.dim);
  qt::Element x = a.zero();
  for (std::size_t s = 0; s < a.dim; ++s)
    x.coords[s] = qt::parse_scalar(coords[s].get<std::string>(), a.base);
  return x;
}

bool json_zero(const qt::AlgebraPresentation& a, const nlohmann::json& ej) {
  qt::Element x = element_from_json(a, ej);
  for (const qt::Scalar& c : x.coords)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("recognize on the canonical quaternions exits 0 with a stable report") {
    qt::AlgebraPresentation h = qt::builtin("hamilton");
    qt::CommandResult r1 = qt::run_recognize(h);
    qt::CommandResult r2 = qt::run_recognize(h);

    CHECK(r1.exit_code == 0);
    CHECK(r1.report.dump() == r2.report.dump());
    CHECK(r1.report["version"] == qt::kVersion);
    CHECK(r1.report["command"] == "recognize");
    CHECK(r1.report["parameters"]["seed"] == 0);
    CHECK(r1.report["parameters"]["samples"] == 64);
    CHECK(r1.report["parameters"]["height"] == 10);
    CHECK(r1.report["input"]["base"] == "Q");
    CHECK(r1.report["input"]["digest"] == qt::algebra_digest(h));
    CHECK(r1.report["recognized"] == "yes");
    CHECK(r1.report["division"]["division"] == "yes");
    CHECK(r1.report["center"]["rank"] == 1);
    CHECK(r1.report["central_squares"]["verdict"] == "holds_symbolic");
    CHECK(r1.report["regular_commutators"]["verdict"] == "holds_implied");
    CHECK(r1.report["completeness"]["complete"] == true);
    CHECK_FALSE(r1.report.contains("refusal"));

    std::string text = qt::render_text(r1.report);
    CHECK(text.find("recognized: yes") != std::string::npos);
    CHECK(text.find("division: yes") != std::string::npos);
    CHECK(text.find("structure: i = ") != std::string::npos);
  }

  TEST_CASE("check exit codes track the verdicts") {
    qt::CommandResult ham = qt::run_check(qt::builtin("hamilton"));
    CHECK(ham.exit_code == 2);  // squares conclusive, regularity only sampled
    CHECK(ham.report["central_squares"]["verdict"] == "holds_symbolic");
    CHECK(ham.report["regular_commutators"]["verdict"] == "no_violation_sampled");

    qt::CommandResult m2 = qt::run_check(qt::builtin("matrix(2,Q)"));
    CHECK(m2.exit_code == 1);
    CHECK(m2.report["central_squares"]["verdict"] == "holds_symbolic");
    CHECK(m2.report["regular_commutators"]["verdict"] == "fails");

    qt::CommandResult triv = qt::run_check(qt::builtin("matrix(1,Q)"));
    CHECK(triv.exit_code == 0);
    CHECK(triv.report["central_squares"]["verdict"] == "holds_vacuously");

    qt::CommandResult lip = qt::run_check(qt::builtin("lipschitz"));
    CHECK(lip.exit_code == 2);
    CHECK(lip.report["lifted"] == true);
  }

  TEST_CASE("exit-1 check reports carry a witness that replays from the JSON alone") {
    for (const char* desc : {"matrix(2,Q)", "matrix(2,F3)", "upper_triangular(3,Q)"}) {
      qt::AlgebraPresentation a = qt::builtin(desc);
      qt::AlgebraPresentation w =
          a.base.kind == qt::RingKind::Integer ? qt::lift_to_rationals(a) : a;
      qt::CommandResult r = qt::run_check(a);
      REQUIRE(r.exit_code == 1);

      bool replayed = false;
      if (r.report["regular_commutators"]["verdict"] == "fails") {
        const nlohmann::json& wit = r.report["regular_commutators"]["witness"];
        qt::Element x = element_from_json(w, wit["x"]);
        qt::Element y = element_from_json(w, wit["y"]);
        qt::Element v = element_from_json(w, wit["commutator"]);
        CHECK(qt::commutator(w, x, y) == v);
        CHECK_FALSE(json_zero(w, wit["commutator"]));
        qt::Element partner = element_from_json(w, wit["divisor"]["partner"]);
        CHECK_FALSE(json_zero(w, wit["divisor"]["partner"]));
        qt::Element prod = wit["divisor"]["side"] == "left" ? qt::multiply(w, v, partner)
                                                            : qt::multiply(w, partner, v);
        for (const qt::Scalar& c : prod.coords) CHECK(c.is_zero());
        replayed = true;
      }
      if (r.report["central_squares"]["verdict"] == "fails") {
        const nlohmann::json& wit = r.report["central_squares"]["witness"];
        qt::Element x = element_from_json(w, wit["x"]);
        qt::Element y = element_from_json(w, wit["y"]);
        qt::Element v = element_from_json(w, wit["commutator"]);
        CHECK(qt::commutator(w, x, y) == v);
        qt::Element sq = element_from_json(w, wit["square"]);
        CHECK(qt::multiply(w, v, v) == sq);
        CHECK_FALSE(qt::is_central(w, sq));
        replayed = true;
      }
      CHECK(replayed);
    }
  }

  TEST_CASE("recognize refusals exit 1 and embed the refusal") {
    qt::CommandResult m2 = qt::run_recognize(qt::builtin("matrix(2,Q)"));
    CHECK(m2.exit_code == 1);
    CHECK(m2.report["refusal"]["reason"] == "commutator_zero_divisor");
    CHECK(m2.report["refusal"]["stage"] == "commutator_regularity");
    CHECK(m2.report["recognized"] == "no");
    std::string text = qt::render_text(m2.report);
    CHECK(text.find("refusal: commutator_zero_divisor") != std::string::npos);

    qt::CommandResult f2 = qt::run_recognize(qt::builtin("matrix(2,F2)"));
    CHECK(f2.exit_code == 1);
    CHECK(f2.report["refusal"]["reason"] == "characteristic_two");
    // Hypothesis verdicts are still on record for the characteristic-2 refusal.
    CHECK(f2.report.contains("central_squares"));
    CHECK(f2.report.contains("regular_commutators"));
  }

  TEST_CASE("decompose reports exact coordinates") {
    qt::AlgebraPresentation h = qt::builtin("hamilton");
    qt::CommandResult r = qt::run_decompose(h, elem(h, {1, 2, 3, 4}));
    CHECK(r.exit_code == 0);
    CHECK(r.report["decomposition"]["complete"] == true);
    CHECK(json_zero(h, r.report["decomposition"]["residual"]));
    // Coordinates are central, hence scalar multiples of the unit here.
    CHECK(r.report["decomposition"]["c0"]["coords"][0] == "1");

    // Reconstruction replay using nothing but the report payload.
    qt::Element x = element_from_json(h, r.report["element"]);
    qt::Element rebuilt = element_from_json(h, r.report["decomposition"]["c0"]);
    const char* gens[3] = {"i", "j", "k"};
    const char* cs[3] = {"c1", "c2", "c3"};
    for (int t = 0; t < 3; ++t) {
      qt::Element coeff = element_from_json(h, r.report["decomposition"][cs[t]]);
      qt::Element gen = element_from_json(h, r.report["structure"][gens[t]]);
      rebuilt = rebuilt + qt::multiply(h, coeff, gen);
    }
    CHECK(rebuilt == x);

    qt::AlgebraPresentation lip = qt::builtin("lipschitz");
    qt::CommandResult rl = qt::run_decompose(lip, elem(lip, {1, 2, 3, 4}));
    CHECK(rl.exit_code == 0);
    CHECK(rl.report["lifted"] == true);
    CHECK(rl.report["decomposition"]["complete"] == true);
  }

  TEST_CASE("decompose over characteristic 2 exits 1 before any division by 2") {
    qt::AlgebraPresentation a = qt::builtin("matrix(2,F2)");
    qt::CommandResult r = qt::run_decompose(a, elem(a, {1, 1, 0, 0}));
    CHECK(r.exit_code == 1);
    CHECK(r.report["refusal"]["reason"] == "characteristic_two");
  }

  TEST_CASE("quadratic certificates exit by their flags") {
    qt::AlgebraPresentation h = qt::builtin("hamilton");
    qt::CommandResult good = qt::run_quadratic(h, elem(h, {0, 1, 0, 0}));
    CHECK(good.exit_code == 0);
    CHECK(good.report["certificate"]["identity_holds"] == true);
    CHECK(good.report["certificate"]["a_nonzero"] == true);
    CHECK(good.report["certificate"]["c_nonzero"] == true);
    CHECK(good.report["certificate"]["a"]["coords"][0] == "-4");

    qt::CommandResult central = qt::run_quadratic(h, elem(h, {5, 0, 0, 0}));
    CHECK(central.exit_code == 1);
    CHECK(central.report["refusal"]["reason"] == "central_input");

    // x = E12 in the 2x2 matrix algebra: its first basis commutator is -E12,
    // so every certificate coefficient collapses to zero.
    qt::AlgebraPresentation m2 = qt::builtin("matrix(2,Q)");
    qt::CommandResult degenerate = qt::run_quadratic(m2, elem(m2, {0, 1, 0, 0}));
    CHECK(degenerate.exit_code == 2);
    CHECK(degenerate.report["certificate"]["identity_holds"] == true);
    CHECK(degenerate.report["certificate"]["a_nonzero"] == false);
    CHECK(degenerate.report["certificate"]["c_nonzero"] == false);
  }

  TEST_CASE("center command decides or reports unknown") {
    qt::CommandResult h = qt::run_center(qt::builtin("hamilton"));
    CHECK(h.exit_code == 0);
    CHECK(h.report["center"]["rank"] == 1);
    CHECK(h.report["center"]["field"] == "yes");

    qt::CommandResult lip = qt::run_center(qt::builtin("lipschitz"));
    CHECK(lip.exit_code == 0);
    CHECK(lip.report["lifted"] == true);

    // Split two-dimensional commutative algebra: the center is everything and
    // is conclusively not a field.
    qt::AlgebraPresentation split = make_presentation(
        qt::BaseRing::Q(), {1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {"1", "f"});
    qt::CommandResult s = qt::run_center(split);
    CHECK(s.exit_code == 0);
    CHECK(s.report["center"]["field"] == "no");
    CHECK(s.report["center"].contains("obstruction"));
  }

  TEST_CASE("enumerate reports pinned counts and witness payloads") {
    qt::CommandResult r = qt::run_enumerate(3, 2);
    CHECK(r.exit_code == 0);
    const nlohmann::json& e = r.report["enumeration"];
    CHECK(e["total"] == 4096);
    CHECK(e["associative"] == 76);
    CHECK(e["commutative"] == 64);
    CHECK(e["regularity_fail"] == 12);
    CHECK(e["passes_both"] == 0);
    CHECK(e["witnesses"].size() == 12);
    CHECK(e["survivors"].empty());
    for (const nlohmann::json& w : e["witnesses"]) {
      CHECK(w["cells"].size() == 12);
      CHECK(w["regularity_violation"] == true);
      CHECK(w.contains("annihilator"));
    }
    CHECK_THROWS_AS(qt::run_enumerate(3, 5), qt::InputError);

    std::string text = qt::render_text(r.report);
    CHECK(text.find("noncommutative passing both: 0") != std::string::npos);
  }

  TEST_CASE("examples writes a file that loads back identically") {
    std::string path = "report_test_examples.json";
    qt::CommandResult r = qt::run_examples("hamilton", path);
    CHECK(r.exit_code == 0);
    CHECK(r.report["written"]["digest"] == qt::algebra_digest(qt::builtin("hamilton")));
    CHECK(qt::load_algebra(path) == qt::builtin("hamilton"));
    std::remove(path.c_str());

    CHECK_THROWS_AS(qt::run_examples("no_such_builtin", "unused.json"), qt::InputError);
  }

  TEST_CASE("element parsing is strict about arity and grammar") {
    qt::AlgebraPresentation h = qt::builtin("hamilton");
    qt::Element x = qt::parse_element(h, "1, -2/3 ,0,4");
    CHECK(x.coords[0] == Q(1));
    CHECK(x.coords[1] == Q("-2/3"));
    CHECK(x.coords[3] == Q(4));
    CHECK_THROWS_AS(qt::parse_element(h, "1,2,3"), qt::InputError);
    CHECK_THROWS_AS(qt::parse_element(h, "1,2,3,x"), qt::InputError);

    qt::CommandResult err = qt::input_error_result("decompose", "element needs 4 coordinates");
    CHECK(err.exit_code == 3);
    CHECK(err.report["error"] == "element needs 4 coordinates");
    std::string text = qt::render_text(err.report);
    CHECK(text.find("input error") != std::string::npos);
  }

  TEST_CASE("identical invocations produce byte-identical reports") {
    qt::AlgebraPresentation m2 = qt::builtin("matrix(2,Q)");
    CHECK(qt::run_check(m2).report.dump() == qt::run_check(m2).report.dump());
    CHECK(qt::run_enumerate(3, 2).report.dump() == qt::run_enumerate(3, 2).report.dump());

    qt::RunOptions seeded;
    seeded.seed = 7;
    qt::AlgebraPresentation h = qt::builtin("hamilton");
    qt::CommandResult a = qt::run_recognize(h, seeded);
    qt::CommandResult b = qt::run_recognize(h, seeded);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.report["parameters"]["seed"] == 7);
    CHECK(a.exit_code == 0);
  }
}
