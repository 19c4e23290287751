// Command-line surface: classify, mate, verify, census, probe.

#include <CLI11.hpp>
#include <json.hpp>

#include "cospec/census.hpp"
#include "cospec/mate.hpp"
#include "cospec/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace cospec;

constexpr int kExitOk = 0;
constexpr int kExitUnclassifiable = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// First byte decides the format: graph6 bytes start at '?' (63), adjacency
// text starts with a digit.
Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::runtime_error(path + ": empty input");
  if (static_cast<unsigned char>(text[first]) >= 63) {
    std::size_t end = text.find_first_of(" \t\r\n", first);
    if (end == std::string::npos) end = text.size();
    return parse_graph6(std::string_view(text).substr(first, end - first));
  }
  return parse_adjacency_text(text);
}

ordered_json factorization_json(const std::vector<std::pair<std::string, unsigned>>& facs) {
  ordered_json out = ordered_json::array();
  for (const auto& [prime, mult] : facs) out.push_back(ordered_json::array({prime, mult}));
  return out;
}

ordered_json poly_json(const std::vector<Int>& coeffs) {
  ordered_json out = ordered_json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

ordered_json classification_json(const Graph& g) {
  const CensusRecord rec = analyze_graph(g);
  ordered_json j;
  j["n"] = rec.n;
  j["graph6"] = rec.graph6;
  j["verdict"] = rec.verdict;
  if (!rec.dn.empty()) {
    j["dn"] = rec.dn;
    j["dn_factorization"] = factorization_json(rec.dn_factorization);
    j["factorization_complete"] = rec.factorization_complete;
  }
  if (rec.p != 0) {
    j["p"] = rec.p;
    j["b"] = rec.b;
    j["nonzero_support"] = rec.nonzero_support;
  }
  return j;
}

ordered_json certificate_json(const CospectralCertificate& cert) {
  ordered_json j;
  j["passed"] = cert.passed;
  if (!cert.passed) j["failed_check"] = cert.failed_check;
  j["cospectral"] = cert.charpoly_g == cert.charpoly_h &&
                    cert.charpoly_gc == cert.charpoly_hc;
  j["level"] = cert.q_level.get_str();
  if (cert.q_num.size() > 0) {
    // level * Q; entries are bounded by the level, so they stay small.
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < cert.q_num.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index k = 0; k < cert.q_num.cols(); ++k)
        row.push_back(static_cast<long>(cert.q_num(i, k).get_si()));
      rows.push_back(row);
    }
    j["q_num"] = rows;
  }
  j["charpoly"] = poly_json(cert.charpoly_g);
  j["charpoly_complement"] = poly_json(cert.charpoly_gc);
  return j;
}

int run_classify(const std::string& file) {
  const Graph g = load_graph(file);
  const ordered_json j = classification_json(g);
  std::cout << j.dump(2) << '\n';
  return j["verdict"] == "unclassifiable" ? kExitUnclassifiable : kExitOk;
}

int run_mate(const std::string& file, bool sanity) {
  const Graph g = load_graph(file);
  const WalkMatrixBundle bundle = build_walk_matrix(g);
  const FamilyClassification cls = classify(g, bundle);

  ordered_json j;
  j["n"] = g.order();
  j["graph6"] = write_graph6(g);
  j["classification"] = to_string(cls.verdict);

  switch (cls.verdict) {
    case FamilyVerdict::Unclassifiable:
      j["verdict"] = "unclassifiable";
      std::cout << j.dump(2) << '\n';
      return kExitUnclassifiable;
    case FamilyVerdict::OddSquareFreeDgs:
      j["verdict"] = "dgs";
      j["reason"] = "odd_square_free_determinant";
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    case FamilyVerdict::NotControllable:
    case FamilyVerdict::Other:
      j["verdict"] = "not_applicable";
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    case FamilyVerdict::FamilyMember:
      break;
  }

  j["p"] = cls.p;
  const MateResult result = find_mate(g, cls, sanity);
  j["rep_census"] = result.rep_census;
  if (result.verdict == MateResult::Verdict::Dgs) {
    j["verdict"] = "dgs";
    j["reason"] = result.enumerated ? "insufficient_representatives" : "kernel_norm_nonzero";
  } else {
    j["verdict"] = "mate";
    j["mate_graph6"] = write_graph6(*result.mate);
    j["certificate"] = certificate_json(certify_mate(g, result));
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const std::string& file_g, const std::string& file_h) {
  const Graph g = load_graph(file_g);
  const Graph h = load_graph(file_h);
  const CospectralCertificate cert = certify_pair(g, h);
  ordered_json j = certificate_json(cert);
  j["n"] = g.order();
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_census(int n, std::uint64_t samples, std::uint64_t seed, int workers,
               const std::string& out, const std::string& summary_out,
               const std::string& csv_out) {
  const CensusSummary summary = census_run(n, samples, seed, workers, out);
  const std::string json = summary_to_json(summary);
  if (summary_out.empty()) {
    std::cout << json << '\n';
  } else {
    std::ofstream f(summary_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + summary_out);
    f << json << '\n';
  }
  if (!csv_out.empty()) {
    const bool fresh = !std::ifstream(csv_out).good();
    std::ofstream f(csv_out, std::ios::binary | std::ios::app);
    if (!f) throw std::runtime_error("cannot open " + csv_out);
    if (fresh) f << summary_csv_header() << '\n';
    f << summary_to_csv_row(summary) << '\n';
  }
  return kExitOk;
}

int run_probe(const std::string& records_path) {
  std::ifstream in(records_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + records_path);
  const auto records = read_records(in);
  std::cout << probe_to_json(conjecture_probe(records)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized-spectrum toolkit: classify graphs by walk-matrix "
               "arithmetic, find and certify generalized cospectral mates, and "
               "run random-graph censuses."};
  app.require_subcommand(1);

  std::string file, file_h, out, summary_out, csv_out, records_path;
  bool sanity = false;
  int n = 10;
  std::uint64_t samples = 10000, seed = 0;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph");
  classify_cmd->add_option("file", file, "graph6 or adjacency-matrix file")->required();

  auto* mate_cmd = app.add_subcommand("mate", "Decide DGS or construct the unique mate");
  mate_cmd->add_option("file", file, "graph6 or adjacency-matrix file")->required();
  mate_cmd->add_flag("--sanity", sanity,
                     "enumerate all multipliers instead of exiting early");

  auto* verify_cmd = app.add_subcommand("verify", "Certify a candidate cospectral pair");
  verify_cmd->add_option("file_g", file, "first graph")->required();
  verify_cmd->add_option("file_h", file_h, "second graph")->required();

  auto* census_cmd = app.add_subcommand("census", "Random-graph census");
  census_cmd->add_option("--n", n, "vertex count")->required();
  census_cmd->add_option("--samples", samples, "number of random graphs");
  census_cmd->add_option("--seed", seed, "master seed");
  census_cmd->add_option("--workers", workers, "worker threads");
  census_cmd->add_option("--out", out, "records output path (JSON lines)")->required();
  census_cmd->add_option("--summary", summary_out, "summary output path (default stdout)");
  census_cmd->add_option("--csv", csv_out, "append summary row to a CSV file");

  auto* probe_cmd = app.add_subcommand("probe", "Cross-tabulate census records against "
                                                "the support-size conjecture");
  probe_cmd->add_option("records", records_path, "census records file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return run_classify(file);
    if (*mate_cmd) return run_mate(file, sanity);
    if (*verify_cmd) return run_verify(file, file_h);
    if (*census_cmd) return run_census(n, samples, seed, workers, out, summary_out, csv_out);
    if (*probe_cmd) return run_probe(records_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
