#include <doctest.h>

#include "twtie/cert_json.hpp"
#include "twtie/errors.hpp"
#include "twtie/families.hpp"
#include "twtie/report.hpp"

using namespace twtie;

TEST_CASE("report on P4 pins the whole battery") {
  auto rep = parameter_report(path_graph(4), "p4");
  CHECK(rep.values["tw"] == 1);
  CHECK(rep.values["bw"] == 2);
  CHECK(rep.values["sep_half"] == 2);
  CHECK(rep.values["link"] == 1);
  CHECK(rep.values["wl"] == 2);
  CHECK(rep.values["had"] == 2);
  CHECK(rep.all_verdicts_hold());
  for (auto it = rep.constructions.begin(); it != rep.constructions.end();
       ++it)
    CHECK(it.value().get<std::string>() == "valid");
}

TEST_CASE("report on K_5") {
  auto rep = parameter_report(complete(5), "k5");
  CHECK(rep.values["tw"] == 4);
  CHECK(rep.values["sep_half"] == 5);
  CHECK(rep.values["link"] == 3);
  CHECK(rep.values["wl"] == 5);
  CHECK(rep.values["had"] == 5);
  CHECK(rep.values["had_f"] == "5");
  CHECK(rep.all_verdicts_hold());
}

TEST_CASE("report on a single vertex sits at the degenerate minima") {
  auto rep = parameter_report(Graph(1, {}), "k1");
  CHECK(rep.values["tw"] == 0);
  CHECK(rep.values["bw"] == 0);
  CHECK(rep.values["sep_half"] == 1);
  CHECK(rep.values["link"] == 1);
  CHECK(rep.values["wl"] == 1);
  CHECK(rep.values["had"] == 1);
  CHECK(rep.all_verdicts_hold());
}

TEST_CASE("budget-exceeded values suppress their verdicts") {
  Budgets tight;
  tight.hadwiger = 2;
  tight.had_fractional = 2;
  auto rep = parameter_report(complete(4), "k4", tight);
  CHECK(rep.values["had"] == "budget-exceeded");
  CHECK(rep.values["had_f"] == "budget-exceeded");
  for (const auto& v : rep.verdicts) {
    CHECK(v.name.find("had") == std::string::npos);
    CHECK(v.holds);
  }
}

TEST_CASE("report witnesses re-verify") {
  Graph g = grid(3, 3);
  auto rep = parameter_report(g, "grid33");
  REQUIRE(rep.witnesses.contains("hadwiger_model"));
  CHECK(verify_certificate(rep.witnesses["hadwiger_model"], g).valid);
  REQUIRE(rep.witnesses.contains("grid_bramble"));
  CHECK(verify_certificate(rep.witnesses["grid_bramble"], g).valid);
  REQUIRE(rep.witnesses.contains("separator_half_all"));
  CHECK(verify_certificate(rep.witnesses["separator_half_all"], g).valid);
  REQUIRE(rep.witnesses.contains("model_bramble"));
  CHECK(verify_certificate(rep.witnesses["model_bramble"], g).valid);
}

TEST_CASE("budget override parsing") {
  Budgets b = parse_budget_overrides("tw=16,sep=12,hadf=5");
  CHECK(b.treewidth == 16);
  CHECK(b.separation == 12);
  CHECK(b.had_fractional == 5);
  CHECK(b.linkedness == 10);  // untouched
  CHECK_THROWS_AS(parse_budget_overrides("bogus=3"), input_error);
  CHECK_THROWS_AS(parse_budget_overrides("tw"), input_error);
}
