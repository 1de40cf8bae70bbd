#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trn/packing.hpp"
#include "trn/tournament.hpp"

namespace trn {

/// Where a campaign's instances come from.
struct SourceSpec {
  enum class Kind {
    random,             // random_tournament over an n range
    random_min_outdeg,  // random_min_outdegree over an n range
    rotational,         // one circulant instance
    paley,              // one quadratic-residue instance
    enumerate_all,      // every labeled tournament on n vertices
    enumerate_regular,  // every labeled regular tournament on n vertices
    import_file,        // records read from a file
  };

  Kind kind = Kind::random;
  int n_lo = 0;
  int n_hi = 0;          // inclusive; random kinds cycle n over [n_lo, n_hi]
  int d = 0;             // random_min_outdeg only
  long count = 1;        // random kinds: number of instances
  std::uint64_t seed = 0;
  std::vector<int> offsets;  // rotational only
  std::string path;          // import_file only
};

/// Per-instance check. Packing predicates produce witness / exhausted-none
/// verdicts; reduce_strong checks that the critical core with minimum
/// outdegree r is strongly connected and produces sample-pass / refuted.
struct Predicate {
  enum class Kind { pack, reduce_strong };

  Kind kind = Kind::pack;
  PackingSpec spec;           // pack
  int r = 0;                  // reduce_strong
  int min_out_degree = 0;     // skip instances below this minimum outdegree
};

struct StopRule {
  enum class Kind { exhaust, sample, first_counterexample };

  Kind kind = Kind::exhaust;
  long sample = 0;  // sample: stop after this many checked (non-skipped) instances
};

struct CampaignConfig {
  std::string name;
  SourceSpec source;
  Predicate predicate;
  StopRule stop;
  bool expect_witness = true;   // false: expect none (sharpness campaigns)
  bool check_below_floor = false;  // check sub-floor instances instead of skipping
  int jobs = 0;                 // 0: resolve from TRN_JOBS, else 1
  std::string out_path;         // empty: caller decides
};

/// Parses the plain-text campaign schema: one "key = value" per line,
/// '#' comments. Keys: name, source, predicate, stop, expect,
/// check-below-floor, jobs, out.
CampaignConfig parse_campaign_config(std::istream& in);
CampaignConfig parse_campaign_config_text(const std::string& text);

struct CampaignSummary {
  long checked = 0;
  long witnesses = 0;
  long exhausted_none = 0;
  long sample_pass = 0;
  long refuted = 0;
  long skipped = 0;
  bool ok = false;
  long elapsed_ms = 0;
};

/// Runs the campaign, writing one JSON object per line to out: a certificate
/// or skip record per instance, then a summary. Everything except the
/// summary's elapsed_ms is byte-deterministic for a fixed config, including
/// across different job counts (results are re-sequenced to source order).
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out);

/// The fixed sharpness micro-campaign: the 11-vertex quadratic-residue
/// tournament (minimum outdegree 5, verified) against k=3 cycles with 3
/// distinct lengths; expected verdict exhausted-none. Also records the best
/// achievable distinct count. Returns true when the expectation holds.
bool certify_sharpness(std::ostream& out);

struct RevalidationReport {
  long certificates = 0;
  long witnesses_checked = 0;
  long failures = 0;
  bool ok = false;
  std::vector<std::string> messages;
};

/// Re-checks every witness in a certificate stream against its embedded
/// instance: cycle validity, disjointness, spec satisfaction, and the
/// recorded minimum-outdegree filter. Exhaustive verdicts are checked for
/// internal consistency only; the search is not re-run.
RevalidationReport revalidate_stream(std::istream& in);

}  // namespace trn
