#ifndef COSPEC_CENSUS_HPP
#define COSPEC_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cospec/walk.hpp"

namespace cospec {

/// One line of a census run. Everything beyond graph6 is re-derivable from
/// the graph itself; the record caches it for tabulation.
struct CensusRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;  // master census seed
  int n = 0;
  std::string graph6;
  std::string verdict;  // family verdict string
  // Family members only:
  std::int64_t p = 0;
  std::string b;
  std::string dn;
  std::vector<std::pair<std::string, unsigned>> dn_factorization;  // certified primes
  std::string dn_unfactored;  // composite remainder, empty when fully factored
  bool factorization_complete = true;
  std::string mate_outcome;  // "mate" | "dgs_gate" | "dgs_enumerated" | ""
  std::vector<std::int64_t> rep_census;
  int nonzero_support = -1;
  std::string mate_graph6;
  bool certificate_passed = false;
  std::string error;  // nonempty when the pipeline failed on this sample
};

struct CensusSummary {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  std::uint64_t count_fn = 0;
  std::uint64_t count_non_dgs = 0;
  std::uint64_t count_unclassifiable = 0;
  std::uint64_t count_errors = 0;
  double elapsed_seconds = 0.0;
};

/// Deterministic per-sample seed stream: depends only on (seed, index).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Classify one graph and chase the mate when it is a family member; fills
/// every record field except index/seed.
CensusRecord analyze_graph(const Graph& g);

/// Run the census: `samples` random graphs on n vertices, classification and
/// mate search for each, one JSON record per line written to out_path.
/// Output is a function of (n, samples, seed) alone, independent of workers.
CensusSummary census_run(int n, std::uint64_t samples, std::uint64_t seed,
                         int workers, const std::string& out_path);

std::string record_to_json_line(const CensusRecord& r);
CensusRecord record_from_json_line(const std::string& line);
std::string summary_to_json(const CensusSummary& s);
std::string summary_to_csv_row(const CensusSummary& s);
std::string summary_csv_header();

/// Cross-tabulation of kernel support against mate outcome for the records
/// that reached enumeration, with the two conjectured regimes flagged:
/// support <= 8 should always yield a mate, support >= 2p+1 never.
struct ProbeRow {
  std::int64_t p = 0;
  int support = 0;
  std::uint64_t mates = 0;
  std::uint64_t dgs_enumerated = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;         // sorted by (p, support)
  std::uint64_t checked = 0;          // records that reached enumeration
  std::vector<std::string> counterexamples;  // graph6 of any violating record
};

ProbeReport conjecture_probe(const std::vector<CensusRecord>& records);
std::string probe_to_json(const ProbeReport& report);

std::vector<CensusRecord> read_records(std::istream& in);

}  // namespace cospec

#endif  // COSPEC_CENSUS_HPP
