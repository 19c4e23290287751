#include "cospec/census.hpp"

#include "cospec/mate.hpp"
#include "cospec/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cospec {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// dn = 2^k * odd; express its factorization through the already factored odd
// part of det W (the odd part of dn divides it). Returns the certified prime
// factors and whatever remainder the classification never had to factor.
std::pair<std::vector<std::pair<std::string, unsigned>>, Int> dn_factor_list(
    const Int& dn, const Factorization& det_odd_factors) {
  std::vector<std::pair<std::string, unsigned>> out;
  if (dn == 0) return {out, Int(1)};
  Int rest = abs(dn);
  const unsigned two = static_cast<unsigned>(mpz_scan1(rest.get_mpz_t(), 0));
  if (two > 0) {
    out.emplace_back("2", two);
    rest >>= two;
  }
  for (const auto& [prime, mult] : det_odd_factors.factors) {
    (void)mult;
    const unsigned k = static_cast<unsigned>(
        mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
    if (k > 0) out.emplace_back(prime.get_str(), k);
  }
  return {out, rest};
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * index);
}

CensusRecord analyze_graph(const Graph& g) {
  CensusRecord rec;
  rec.n = g.order();
  rec.graph6 = write_graph6(g);

  const WalkMatrixBundle bundle = build_walk_matrix(g);
  const FamilyClassification cls = classify(g, bundle);
  rec.verdict = to_string(cls.verdict);
  if (cls.verdict != FamilyVerdict::NotControllable) {
    const Int dn = bundle.snf.d(bundle.snf.d.size() - 1);
    rec.dn = dn.get_str();
    auto [factors, rest] = dn_factor_list(dn, cls.det_odd_factors);
    rec.dn_factorization = std::move(factors);
    if (rest != 1) rec.dn_unfactored = rest.get_str();
    rec.factorization_complete = rec.dn_unfactored.empty();
  }
  if (cls.verdict != FamilyVerdict::FamilyMember) return rec;

  rec.p = cls.p;
  rec.b = cls.b.get_str();

  const ModVector v = kernel_vector(bundle, cls.p);
  int support = 0;
  for (Eigen::Index i = 0; i < v.entries.size(); ++i)
    if (v.entries(i) != 0) ++support;
  rec.nonzero_support = support;

  const MateResult result = find_mate_from_kernel(g, v);
  rec.rep_census = result.rep_census;
  if (!result.enumerated) {
    rec.mate_outcome = "dgs_gate";
  } else if (result.verdict == MateResult::Verdict::Dgs) {
    rec.mate_outcome = "dgs_enumerated";
  } else {
    rec.mate_outcome = "mate";
    rec.mate_graph6 = write_graph6(*result.mate);
    rec.certificate_passed = certify_mate(g, result).passed;
  }
  return rec;
}

CensusSummary census_run(int n, std::uint64_t samples, std::uint64_t seed,
                         int workers, const std::string& out_path) {
  if (samples < 1) throw std::invalid_argument("census_run: samples must be >= 1");
  if (workers < 1) workers = 1;

  const auto start = std::chrono::steady_clock::now();

  std::vector<CensusRecord> records(samples);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= samples) return;
      const Graph g = random_graph(n, sample_seed(seed, i));
      CensusRecord rec;
      try {
        rec = analyze_graph(g);
      } catch (const std::exception& e) {
        rec.n = n;
        rec.graph6 = write_graph6(g);
        rec.verdict = "error";
        rec.error = e.what();
      }
      rec.index = i;
      rec.seed = seed;
      records[i] = std::move(rec);
    }
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("census_run: cannot open output path " + out_path);

  CensusSummary summary;
  summary.n = n;
  summary.samples = samples;
  summary.seed = seed;
  summary.workers = workers;
  for (const auto& rec : records) {
    out << record_to_json_line(rec) << '\n';
    if (rec.verdict == "family_fn") {
      ++summary.count_fn;
      if (rec.mate_outcome == "mate") ++summary.count_non_dgs;
    } else if (rec.verdict == "unclassifiable") {
      ++summary.count_unclassifiable;
    } else if (rec.verdict == "error") {
      ++summary.count_errors;
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("census_run: write failed for " + out_path);

  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string record_to_json_line(const CensusRecord& r) {
  ordered_json j;
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["graph6"] = r.graph6;
  j["verdict"] = r.verdict;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.dn.empty()) {
    j["dn"] = r.dn;
    ordered_json facs = ordered_json::array();
    for (const auto& [prime, mult] : r.dn_factorization)
      facs.push_back(ordered_json::array({prime, mult}));
    j["dn_factorization"] = facs;
    if (!r.dn_unfactored.empty()) j["dn_unfactored"] = r.dn_unfactored;
    j["factorization_complete"] = r.factorization_complete;
  }
  if (r.p != 0) {
    j["p"] = r.p;
    j["b"] = r.b;
    j["nonzero_support"] = r.nonzero_support;
    j["mate_outcome"] = r.mate_outcome;
    if (!r.rep_census.empty()) j["rep_census"] = r.rep_census;
    if (!r.mate_graph6.empty()) {
      j["mate_graph6"] = r.mate_graph6;
      j["certificate_passed"] = r.certificate_passed;
    }
  }
  return j.dump();
}

CensusRecord record_from_json_line(const std::string& line) {
  const ordered_json j = ordered_json::parse(line);
  CensusRecord r;
  r.index = j.value("index", std::uint64_t{0});
  r.seed = j.value("seed", std::uint64_t{0});
  r.n = j.value("n", 0);
  r.graph6 = j.value("graph6", "");
  r.verdict = j.value("verdict", "");
  r.error = j.value("error", "");
  r.dn = j.value("dn", "");
  if (j.contains("dn_factorization"))
    for (const auto& pair : j["dn_factorization"])
      r.dn_factorization.emplace_back(pair.at(0).get<std::string>(),
                                      pair.at(1).get<unsigned>());
  r.dn_unfactored = j.value("dn_unfactored", "");
  r.factorization_complete = j.value("factorization_complete", true);
  r.p = j.value("p", std::int64_t{0});
  r.b = j.value("b", "");
  r.nonzero_support = j.value("nonzero_support", -1);
  r.mate_outcome = j.value("mate_outcome", "");
  if (j.contains("rep_census"))
    r.rep_census = j["rep_census"].get<std::vector<std::int64_t>>();
  r.mate_graph6 = j.value("mate_graph6", "");
  r.certificate_passed = j.value("certificate_passed", false);
  return r;
}

std::string summary_to_json(const CensusSummary& s) {
  ordered_json j;
  j["n"] = s.n;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["workers"] = s.workers;
  j["count_fn"] = s.count_fn;
  j["count_non_dgs"] = s.count_non_dgs;
  j["count_unclassifiable"] = s.count_unclassifiable;
  j["count_errors"] = s.count_errors;
  j["elapsed_seconds"] = s.elapsed_seconds;
  j["model"] = {{"edge_probability", "1/2"},
                {"labeled", true},
                {"deduplicated", false},
                {"rng", "mt19937_64 seeded per sample via splitmix64(seed, index)"}};
  return j.dump(2);
}

std::string summary_csv_header() {
  return "n,samples,seed,count_fn,count_non_dgs,count_unclassifiable,count_errors,elapsed_seconds";
}

std::string summary_to_csv_row(const CensusSummary& s) {
  std::ostringstream out;
  out << s.n << ',' << s.samples << ',' << s.seed << ',' << s.count_fn << ','
      << s.count_non_dgs << ',' << s.count_unclassifiable << ',' << s.count_errors
      << ',' << s.elapsed_seconds;
  return out.str();
}

ProbeReport conjecture_probe(const std::vector<CensusRecord>& records) {
  ProbeReport report;
  std::map<std::pair<std::int64_t, int>, ProbeRow> rows;
  for (const auto& rec : records) {
    if (rec.verdict != "family_fn") continue;
    if (rec.mate_outcome != "mate" && rec.mate_outcome != "dgs_enumerated") continue;
    ++report.checked;
    auto& row = rows[{rec.p, rec.nonzero_support}];
    row.p = rec.p;
    row.support = rec.nonzero_support;
    const bool mate = rec.mate_outcome == "mate";
    if (mate)
      ++row.mates;
    else
      ++row.dgs_enumerated;
    const bool small_violation = rec.nonzero_support <= 8 && !mate;
    const bool large_violation = rec.nonzero_support >= 2 * rec.p + 1 && mate;
    if (small_violation || large_violation)
      report.counterexamples.push_back(rec.graph6);
  }
  for (auto& [key, row] : rows) report.rows.push_back(row);
  return report;
}

std::string probe_to_json(const ProbeReport& report) {
  ordered_json j;
  j["checked"] = report.checked;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["p"] = row.p;
    r["support"] = row.support;
    r["mates"] = row.mates;
    r["dgs_enumerated"] = row.dgs_enumerated;
    r["small_regime"] = row.support <= 8;
    r["large_regime"] = row.support >= 2 * row.p + 1;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["counterexamples"] = report.counterexamples;
  return j.dump(2);
}

std::vector<CensusRecord> read_records(std::istream& in) {
  std::vector<CensusRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json_line(line));
  }
  return records;
}

}  // namespace cospec
