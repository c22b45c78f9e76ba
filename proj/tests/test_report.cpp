#include <doctest.h>

#include <json.hpp>

#include "conglab/report.hpp"

using namespace conglab;

TEST_CASE("empty prime range: valid document with zero counts") {
  RunConfig cfg;
  cfg.prime_lo = 24;
  cfg.prime_hi = 28;
  auto rep = run_suites(cfg);
  CHECK(rep.rows.size() == 2);  // only the prime-independent section3 rows
  cfg.suites = {"lemmas"};
  rep = run_suites(cfg);
  CHECK(rep.rows.empty());
  auto doc = nlohmann::json::parse(report_emit(rep, cfg));
  CHECK(doc["summary"]["total"]["pass"] == 0);
  CHECK(doc["results"].empty());
  CHECK(doc["findings"].empty());
}

TEST_CASE("a failing row lands in results and the summary") {
  RunReport rep;
  CheckResult bad;
  bad.check_id = "conj_5_4";
  bad.p = 7;
  bad.status = Status::fail;
  bad.witness["lhs"] = "1";
  bad.witness["rhs"] = "2";
  bad.witness["modulus"] = "49";
  rep.rows.push_back({"conjectures", bad});
  rep.findings.push_back(0);
  RunConfig cfg;
  cfg.suites = {"conjectures"};
  auto doc = nlohmann::json::parse(report_emit(rep, cfg));
  CHECK(doc["summary"]["conjectures"]["fail"] == 1);
  CHECK(doc["results"].size() == 1);
  CHECK(doc["findings"].size() == 1);
  CHECK(doc["findings"][0]["check_id"] == "conj_5_4");
}

TEST_CASE("json round-trip reproduces the result list") {
  RunConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 20;
  cfg.suites = {"lemmas", "etaq-oracle"};
  auto rep = run_suites(cfg);
  auto doc = nlohmann::json::parse(report_emit(rep, cfg));
  REQUIRE(doc["results"].size() == rep.rows.size());
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(doc["results"][i]["check_id"] == rep.rows[i].result.check_id);
    CHECK(doc["results"][i]["p"] == rep.rows[i].result.p);
    CHECK(doc["results"][i]["status"] == status_name(rep.rows[i].result.status));
    for (const auto& [k, v] : rep.rows[i].result.witness)
      CHECK(doc["results"][i]["witness"][k] == v);
  }
}

TEST_CASE("csv emission: header, one row per result, flattened maps") {
  RunConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 12;
  cfg.suites = {"lemmas"};
  cfg.format = "csv";
  auto rep = run_suites(cfg);
  auto csv = report_emit(rep, cfg);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == rep.rows.size() + 1);
  CHECK(csv.rfind("suite,check_id,p,status,params,witness\n", 0) == 0);
  CHECK(csv.find("lemma_2_1,5,pass") != std::string::npos);
  CHECK(csv.find("lhs=") != std::string::npos);
}

TEST_CASE("determinism: identical reports for any worker count") {
  RunConfig a;
  a.prime_lo = 5;
  a.prime_hi = 80;
  a.samples = 8;
  a.seed = 99;
  a.workers = 1;
  RunConfig b = a;
  b.workers = 5;
  auto ra = report_emit(run_suites(a), a);
  auto rb = report_emit(run_suites(b), b);
  CHECK(ra == rb);
}

TEST_CASE("exit-code contract pieces: theorem vs conjecture failures") {
  RunConfig cfg;
  cfg.prime_lo = 5;
  cfg.prime_hi = 30;
  auto rep = run_suites(cfg);
  CHECK_FALSE(rep.theorem_fail);
  // synthesize: a conjecture fail is a finding, not a theorem failure
  RunReport synth;
  CheckResult cf;
  cf.check_id = "conj_5_5";
  cf.status = Status::fail;
  synth.rows.push_back({"conjectures", cf});
  synth.findings.push_back(0);
  CHECK_FALSE(synth.theorem_fail);
  CheckResult tf;
  tf.check_id = "thm_3_2";
  tf.status = Status::fail;
  synth.rows.push_back({"section3", tf});
  // recompute the flag the way run_suites does
  bool theorem_fail = false;
  for (const auto& row : synth.rows)
    if (row.result.status == Status::fail && row.suite != "conjectures") theorem_fail = true;
  CHECK(theorem_fail);
}

TEST_CASE("sampled-seed reproducibility: same seed, same report; different seed differs") {
  RunConfig a;
  a.prime_lo = 29;
  a.prime_hi = 29;
  a.suites = {"theorems2"};
  a.samples = 5;
  a.seed = 1;
  auto r1 = report_emit(run_suites(a), a);
  auto r2 = report_emit(run_suites(a), a);
  CHECK(r1 == r2);
  RunConfig b = a;
  b.seed = 2;
  auto r3 = report_emit(run_suites(b), b);
  CHECK(r1 != r3);  // the recorded sample (m, n) params differ
}
