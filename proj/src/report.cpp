#include "conglab/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

namespace conglab {

namespace {

bool suite_selected(const RunConfig& cfg, const std::string& s) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
}

bool needs_eta(const RunConfig& cfg) {
  return suite_selected(cfg, "corollaries2") || suite_selected(cfg, "conjectures") ||
         suite_selected(cfg, "etaq-oracle");
}

CheckResult exception_result(const std::string& id, u64 p, const std::string& what) {
  CheckResult r;
  r.check_id = id;
  r.p = p;
  r.status = Status::fail;
  r.witness["exception"] = what;
  return r;
}

template <class Fn>
void guarded(std::vector<RunReport::Row>& rows, const std::string& suite, const std::string& id,
             u64 p, Fn&& fn) {
  try {
    for (auto& res : fn()) rows.push_back({suite, std::move(res)});
  } catch (const std::exception& e) {
    rows.push_back({suite, exception_result(id, p, e.what())});
  }
}

template <class Fn>
void guarded_one(std::vector<RunReport::Row>& rows, const std::string& suite, const std::string& id,
                 u64 p, Fn&& fn) {
  guarded(rows, suite, id, p, [&] { return std::vector<CheckResult>{fn()}; });
}

std::vector<RunReport::Row> run_prime(u64 pv, const RunConfig& cfg, const EtaTables* eta) {
  std::vector<RunReport::Row> rows;
  PrimeContext ctx(pv);
  const Prime& p = ctx.p;

  if (suite_selected(cfg, "lemmas")) {
    guarded_one(rows, "lemmas", "lemma_2_1", pv, [&] { return lemma21_check(p); });
    guarded_one(rows, "lemmas", "lemma_2_2", pv, [&] { return lemma22_check(p); });
    guarded_one(rows, "lemmas", "lemma_3_2", pv, [&] { return lemma32_check(p, ctx.D); });
    guarded_one(rows, "lemmas", "lemma_3_3", pv, [&] { return check_lemma_3_3(ctx); });
  }
  if (suite_selected(cfg, "theorems2")) {
    guarded_one(rows, "theorems2", "thm_2_3", pv, [&] { return check_thm_2_3(ctx); });
    guarded_one(rows, "theorems2", "thm_2_4", pv, [&] { return check_thm_2_4(ctx); });
    guarded_one(rows, "theorems2", "thm_2_5", pv, [&] { return check_thm_2_5(ctx); });
    // sampled (m, n) sweeps; aggregated into one row per theorem
    for (const char* tag : {"thm_2_1", "thm_2_2", "thm_2_6"}) {
      guarded_one(rows, "theorems2", tag, pv, [&]() -> CheckResult {
        SplitMix64 g{mix_seed(cfg.seed, pv, std::string_view(tag).size() + tag[4] * 131 + tag[6])};
        CheckResult agg;
        agg.check_id = tag;
        agg.p = pv;
        agg.params["samples"] = std::to_string(cfg.samples);
        agg.params["seed"] = std::to_string(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s) {
          i64 m = static_cast<i64>(g.next() % (pv - 1)) + 1;
          i64 n = static_cast<i64>(g.next() % pv);
          CheckResult one;
          if (std::string_view(tag) == "thm_2_1")
            one = check_thm_2_1(ctx, m, n);
          else if (std::string_view(tag) == "thm_2_2")
            one = check_thm_2_2(ctx, m, n);
          else
            one = check_thm_2_6(ctx, m, n);
          if (one.status == Status::fail) {
            one.check_id = agg.check_id;
            one.params["samples"] = agg.params["samples"];
            one.params["seed"] = agg.params["seed"];
            return one;
          }
          if (s + 1 == cfg.samples) {
            agg.witness = one.witness;
            agg.params["m"] = one.params["m"];
            agg.params["n"] = one.params["n"];
          }
        }
        agg.status = Status::pass;
        return agg;
      });
    }
  }
  if (suite_selected(cfg, "corollaries2")) {
    guarded(rows, "corollaries2", "cor_2_x", pv, [&] { return check_corollaries_2x(ctx, eta); });
  }
  if (suite_selected(cfg, "section3")) {
    if (pv <= cfg.thm31_bound) {
      guarded_one(rows, "section3", "thm_3_1", pv, [&] { return check_thm_3_1(ctx); });
    } else {
      CheckResult r;
      r.check_id = "thm_3_1";
      r.p = pv;
      r.status = Status::skip;
      r.witness["reason"] = "above thm31 bound";
      rows.push_back({"section3", r});
    }
    guarded_one(rows, "section3", "thm_3_2", pv, [&] { return check_thm_3_2(ctx); });
    guarded_one(rows, "section3", "eq_3_3", pv, [&] { return check_eq_3_3(ctx); });
  }
  if (suite_selected(cfg, "section4")) {
    guarded(rows, "section4", "cm", pv, [&] { return check_cm_supercongruences(ctx); });
    for (const char* tag : {"thm_4_1", "thm_4_2", "cor_3_1"}) {
      guarded_one(rows, "section4", tag, pv, [&]() -> CheckResult {
        SplitMix64 g{mix_seed(cfg.seed, pv, 1000 + tag[4] * 7 + tag[6])};
        CheckResult agg;
        agg.check_id = tag;
        agg.p = pv;
        agg.params["samples"] = std::to_string(cfg.samples);
        agg.params["seed"] = std::to_string(cfg.seed);
        int skipped = 0;
        for (int s = 0; s < cfg.samples; ++s) {
          i64 m = static_cast<i64>(g.next() % (pv - 1)) + 1;
          i64 n = static_cast<i64>(g.next() % pv);
          CheckResult one;
          if (std::string_view(tag) == "thm_4_1")
            one = check_thm_4_1(ctx, m);
          else if (std::string_view(tag) == "thm_4_2")
            one = check_thm_4_2(ctx, m, n);
          else
            one = check_cor_3_1(ctx, m);
          if (one.status == Status::fail) {
            one.check_id = agg.check_id;
            one.params["samples"] = agg.params["samples"];
            one.params["seed"] = agg.params["seed"];
            return one;
          }
          if (one.status == Status::skip) ++skipped;
          if (s + 1 == cfg.samples) {
            agg.witness = one.witness;
            agg.params["m"] = one.params["m"];
          }
        }
        agg.params["skipped_samples"] = std::to_string(skipped);
        agg.status = Status::pass;
        return agg;
      });
    }
  }
  if (suite_selected(cfg, "conjectures") && eta != nullptr) {
    guarded(rows, "conjectures", "conj_2_1", pv, [&] { return probe_conjecture_2_1(ctx, *eta); });
    guarded_one(rows, "conjectures", "eq_2_12", pv, [&] { return probe_eq_2_12(ctx, *eta); });
    guarded(rows, "conjectures", "conj_5_1", pv, [&] { return probe_conjecture_5_1(ctx); });
    guarded(rows, "conjectures", "conj_5_2", pv, [&] { return probe_conjecture_5_2(ctx); });
    guarded(rows, "conjectures", "conj_5_3", pv, [&] { return probe_conjecture_5_3(ctx); });
    guarded(rows, "conjectures", "conj_5_z", pv, [&] { return probe_Z_conjectures(ctx); });
  }
  if (suite_selected(cfg, "etaq-oracle") && eta != nullptr) {
    guarded_one(rows, "etaq-oracle", "etaq_eichler", pv, [&] { return check_etaq_eichler(ctx, *eta); });
  }
  return rows;
}

}  // namespace

RunReport run_suites(const RunConfig& cfg) {
  RunReport rep;
  const auto primes = primes_in(cfg.prime_lo, cfg.prime_hi);

  std::unique_ptr<EtaTables> eta;
  if (needs_eta(cfg) && !primes.empty()) {
    eta = std::make_unique<EtaTables>(build_eta_tables(std::max<u64>(cfg.prime_hi, 16)));
  }

  std::vector<std::vector<RunReport::Row>> per_prime(primes.size());
  const int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(primes.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < primes.size(); ++i) per_prime[i] = run_prime(primes[i], cfg, eta.get());
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
          per_prime[i] = run_prime(primes[i], cfg, eta.get());
      });
    }
    for (auto& t : pool) t.join();
  }

  if (suite_selected(cfg, "section3")) {
    for (auto& res : check_section3_global(300, 200)) rep.rows.push_back({"section3", res});
  }
  for (auto& v : per_prime)
    for (auto& row : v) rep.rows.push_back(std::move(row));

  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) {
    if (a.result.p != b.result.p) return a.result.p < b.result.p;
    if (a.result.check_id != b.result.check_id) return a.result.check_id < b.result.check_id;
    return a.suite < b.suite;
  });

  // self-audit over the assembled report
  {
    std::vector<CheckResult> all;
    all.reserve(rep.rows.size());
    for (const auto& r : rep.rows) all.push_back(r.result);
    for (auto& v : self_audit(all)) rep.rows.push_back({"self-audit", v});
  }

  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (row.result.status != Status::fail) continue;
    if (row.suite == "conjectures")
      rep.findings.push_back(i);
    else
      rep.theorem_fail = true;
  }
  return rep;
}

namespace {

nlohmann::ordered_json row_json(const RunReport::Row& row) {
  nlohmann::ordered_json j;
  j["check_id"] = row.result.check_id;
  j["suite"] = row.suite;
  j["p"] = row.result.p;
  j["status"] = status_name(row.result.status);
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : row.result.params) j["params"][k] = v;
  j["witness"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : row.result.witness) j["witness"][k] = v;
  return j;
}

std::string flatten_map(const std::map<std::string, std::string>& m) {
  std::string s;
  for (const auto& [k, v] : m) {
    if (!s.empty()) s += ";";
    s += k + "=" + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string report_emit(const RunReport& rep, const RunConfig& cfg) {
  if (cfg.format == "csv") {
    std::string out = "suite,check_id,p,status,params,witness\n";
    for (const auto& row : rep.rows) {
      out += row.suite + "," + row.result.check_id + "," + std::to_string(row.result.p) + "," +
             status_name(row.result.status) + "," + csv_field(flatten_map(row.result.params)) +
             "," + csv_field(flatten_map(row.result.witness)) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["meta"]["range"]["lo"] = cfg.prime_lo;
  j["meta"]["range"]["hi"] = cfg.prime_hi;
  j["meta"]["seed"] = cfg.seed;
  j["meta"]["samples"] = cfg.samples;
  j["meta"]["suites"] = cfg.suites;
  j["meta"]["thm31_bound"] = cfg.thm31_bound;
  j["meta"]["versions"]["engine"] = kEngineVersion;
  j["meta"]["versions"]["report"] = kReportVersion;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::map<std::string, std::array<u64, 3>> counts;
  for (const auto& row : rep.rows) {
    auto& c = counts[row.suite];
    c[static_cast<int>(row.result.status)]++;
  }
  std::array<u64, 3> total{0, 0, 0};
  for (const auto& s : cfg.suites) {
    auto c = counts.count(s) ? counts[s] : std::array<u64, 3>{0, 0, 0};
    summary[s] = {{"pass", c[0]}, {"fail", c[1]}, {"skip", c[2]}};
    for (int i = 0; i < 3; ++i) total[i] += c[i];
  }
  if (counts.count("self-audit")) {
    auto c = counts["self-audit"];
    summary["self-audit"] = {{"pass", c[0]}, {"fail", c[1]}, {"skip", c[2]}};
    for (int i = 0; i < 3; ++i) total[i] += c[i];
  }
  summary["total"] = {{"pass", total[0]}, {"fail", total[1]}, {"skip", total[2]}};
  j["summary"] = summary;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) j["results"].push_back(row_json(row));
  j["findings"] = nlohmann::ordered_json::array();
  for (size_t idx : rep.findings) j["findings"].push_back(row_json(rep.rows[idx]));
  return j.dump(2) + "\n";
}

int run(const RunConfig& cfg) {
  if (cfg.prime_lo < 5) {
    std::cerr << "error: prime range must start at 5 or above\n";
    return 2;
  }
  if (cfg.format != "json" && cfg.format != "csv") {
    std::cerr << "error: format must be json or csv\n";
    return 2;
  }
  for (const auto& s : cfg.suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      std::cerr << "error: unknown suite '" << s << "'\n";
      return 2;
    }
  }
  const auto primes = primes_in(cfg.prime_lo, cfg.prime_hi);
  if (primes.empty()) std::cerr << "warning: empty prime range, emitting empty report\n";

  RunReport rep = run_suites(cfg);
  std::string payload = report_emit(rep, cfg);
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file: " << cfg.out_path << "\n";
      return 3;
    }
    f << payload;
    if (!f.good()) {
      std::cerr << "error: failed writing report to " << cfg.out_path << "\n";
      return 3;
    }
  }
  return rep.theorem_fail ? 1 : 0;
}

}  // namespace conglab
