#include "hodgeledger/ledger.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>

#include "hodgeledger/errors.hpp"

using namespace hodgeledger;

namespace {

nlohmann::json builtin_doc() { return nlohmann::json::parse(builtin_ledger_json()); }

std::string with_component(const char* fibration, const char* stratum, long long value) {
  nlohmann::json doc = builtin_doc();
  doc["components"][fibration][stratum] = value;
  return doc.dump();
}

}  // namespace

TEST_SUITE("ledger") {

TEST_CASE("builtin fixture loads with the expected structure") {
  const Ledger& ledger = builtin_ledger();
  CHECK(ledger.strata.size() == 7);
  CHECK(ledger.strata.at(StratumName::S).dim == 3);
  CHECK(ledger.strata.at(StratumName::N3).count == Int(240));
  CHECK(ledger.strata.at(StratumName::NR).count == Int(16));
  CHECK_FALSE(ledger.strata.at(StratumName::R1).count.has_value());
  CHECK(ledger.specializations.size() == 5);
  CHECK(ledger.specializations.count({StratumName::NR, StratumName::N2}) == 1);
  CHECK(ledger.incidence.lines_total == 120);
  CHECK(ledger.incidence.lines_through_nr_point == 15);
  CHECK(ledger.incidence.lines_through_n3_point == 3);
  CHECK(ledger.stalks.size() == 28);
  for (const auto& [key, entry] : ledger.stalks) {
    (void)key;
    CHECK_FALSE(entry.cite.empty());
  }
  CHECK(ledger.components.size() == 21);
  CHECK(ledger.components.at({Fibration::Mtilde, StratumName::NR}) == 34);
  CHECK(ledger.components.at({Fibration::M, StratumName::NR}) == 17);
  CHECK(ledger.components.at({Fibration::N, StratumName::NR}) == 2);
}

TEST_CASE("linear expressions print readably") {
  CHECK(LinearIntExpr{33, 1, 1}.to_string() == "33 + r + r24");
  CHECK(LinearIntExpr{0, 1, 0}.to_string() == "r");
  CHECK(LinearIntExpr{16, 1, 0}.to_string() == "16 + r");
  CHECK(LinearIntExpr{0, 0, 0}.to_string() == "0");
  CHECK(LinearIntExpr{1, 0, 2}.to_string() == "1 + 2*r24");
  CHECK(LinearIntExpr{0, -1, 0}.to_string() == "-r");
  CHECK(LinearIntExpr{2, 0, -3}.to_string() == "2 - 3*r24");
  CHECK(LinearIntExpr{5, 2, 1}.eval(3, 4) == 15);
}

TEST_CASE("degree-6 ranks synthesize from the strings") {
  const Ledger& ledger = builtin_ledger();
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::S) == LinearIntExpr{1, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::N1) == LinearIntExpr{1, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::N2) == LinearIntExpr{2, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::N3) == LinearIntExpr{4, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::R1) == LinearIntExpr{2, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::R2) == LinearIntExpr{2, 0, 0});
  CHECK(r6_rank(ledger, Fibration::Mtilde, StratumName::NR) == LinearIntExpr{33, 1, 1});
  CHECK(r6_rank(ledger, Fibration::N, StratumName::N3) == LinearIntExpr{4, 0, 0});
  CHECK(r6_rank(ledger, Fibration::N, StratumName::R1) == LinearIntExpr{2, 0, 0});
  CHECK(r6_rank(ledger, Fibration::N, StratumName::NR) == LinearIntExpr{1, 1, 1});
  CHECK_THROWS_AS(r6_rank(ledger, Fibration::M, StratumName::S), BadInput);
}

TEST_CASE("the unknowns solve to exactly two points") {
  const auto solutions = solve_unknowns(builtin_ledger());
  CHECK(solutions == std::set<std::pair<Int, Int>>{{0, 1}, {1, 0}});
}

TEST_CASE("component table cross-check passes everywhere") {
  const VerificationReport report = verify_component_table(builtin_ledger());
  CHECK(report.checks.size() == 23);  // 21 cells + 2 monodromy notes
  CHECK(report.all_pass());
  bool saw_mtilde_nr = false, saw_m_nr = false, saw_monodromy = false;
  for (const auto& check : report.checks) {
    if (check.id == "Mtilde/NR") {
      saw_mtilde_nr = true;
      CHECK(check.lhs == "33 + r + r24 = 34");
      CHECK(check.rhs == "34");
    }
    if (check.id == "M/NR") {
      saw_m_nr = true;
      CHECK(check.lhs == "16 + r + r24 = 17");
      CHECK(check.rhs == "17");
    }
    if (check.id == "monodromy/N/R1") saw_monodromy = true;
    if (check.id == "Mtilde/N2" || check.id == "N/R1") {
      CHECK(check.pass);
      CHECK(check.rhs == "2");
    }
  }
  CHECK(saw_mtilde_nr);
  CHECK(saw_m_nr);
  CHECK(saw_monodromy);
}

TEST_CASE("every one-off perturbation of the data rows is inconsistent") {
  for (const char* fibration : {"Mtilde", "N"})
    for (const char* stratum : {"S", "N1", "N2", "N3", "R1", "R2", "NR"})
      for (int delta : {-1, 1}) {
        nlohmann::json doc = builtin_doc();
        const long long value = doc["components"][fibration][stratum].get<long long>() + delta;
        const Ledger perturbed = load_ledger(with_component(fibration, stratum, value));
        CHECK_THROWS_AS(solve_unknowns(perturbed), Inconsistent);
      }
}

TEST_CASE("the deep-point conflict carries a useful hint") {
  const Ledger perturbed = load_ledger(with_component("Mtilde", "NR", 35));
  try {
    solve_unknowns(perturbed);
    FAIL("expected Inconsistent");
  } catch (const Inconsistent& e) {
    const std::string hint = e.what();
    CHECK(hint.find("r + r24 = 2") != std::string::npos);
    CHECK(hint.find("N/NR") != std::string::npos);
  }

  try {
    solve_unknowns(load_ledger(with_component("N", "NR", 1)));
    FAIL("expected Inconsistent");
  } catch (const Inconsistent& e) {
    CHECK(std::string(e.what()).find("r + r24") != std::string::npos);
  }

  // A constant cell names itself.
  try {
    solve_unknowns(load_ledger(with_component("Mtilde", "S", 2)));
    FAIL("expected Inconsistent");
  } catch (const Inconsistent& e) {
    const std::string hint = e.what();
    CHECK(hint.find("Mtilde/S") != std::string::npos);
    CHECK(hint.find("expects 2") != std::string::npos);
  }
}

TEST_CASE("the fixed middle row is enforced at load") {
  CHECK_THROWS_AS(load_ledger(with_component("M", "NR", 18)), FixtureInvalid);
  CHECK_THROWS_AS(load_ledger(with_component("M", "R1", 2)), FixtureInvalid);
}

TEST_CASE("structural validation rejects broken fixtures") {
  CHECK_THROWS_AS(load_ledger("{"), FixtureInvalid);
  CHECK_THROWS_AS(load_ledger("[]"), FixtureInvalid);
  CHECK_THROWS_AS(load_ledger(R"({"format":"ledger/v2"})"), FixtureInvalid);

  {
    nlohmann::json doc = builtin_doc();
    doc["surprise"] = 1;
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["strata"].erase(0);
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["strata"][0]["dim"] = 2;
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["strata"][3].erase("count");  // the 240 triple points
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["strata"][6]["count"] = 17;  // there are exactly 16 deep points
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["strata"][0]["name"] = "X";
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["incidence"]["lines_total"] = 119;
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["specializations"].erase(0);
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["stalks"].erase(0);
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["stalks"][0]["rank"]["const"] = 2;
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["stalks"][0]["cite"] = "";
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["stalks"][0].erase("cite");
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["stalks"].push_back(doc["stalks"][0]);  // duplicate row
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    nlohmann::json row = doc["stalks"][0];
    row["string"] = "R_plus";
    row["stratum"] = "S";  // outside that string's support
    doc["stalks"].push_back(row);
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["components"]["Mtilde"]["NR"] = 100000;  // implausible count
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
  {
    nlohmann::json doc = builtin_doc();
    doc["components"]["N"]["S"] = -1;
    CHECK_THROWS_AS(load_ledger(doc.dump()), FixtureInvalid);
  }
}

TEST_CASE("loading is what the builtin accessor does") {
  const Ledger reloaded = load_ledger(builtin_ledger_json());
  CHECK(reloaded.components == builtin_ledger().components);
  CHECK(reloaded.specializations == builtin_ledger().specializations);
}

}  // TEST_SUITE
