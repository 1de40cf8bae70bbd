#include "trn/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "trn/error.hpp"
#include "trn/gen.hpp"
#include "trn/io.hpp"
#include "trn/structure.hpp"
#include "trn/version.hpp"

namespace trn {

using ojson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Config parsing

[[noreturn]] void config_fail(long line, const std::string& what) {
  raise(Errc::parse_error, "config line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& s, long line) {
  if (s.empty()) config_fail(line, "expected a number");
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) config_fail(line, "bad number '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, long line) {
  if (s.empty()) config_fail(line, "expected a number");
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 0);
  if (end != s.c_str() + s.size()) config_fail(line, "bad number '" + s + "'");
  return v;
}

// "5" -> (5, 5); "13..20" -> (13, 20).
std::pair<int, int> parse_range(const std::string& s, long line) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(s, line);
    return {static_cast<int>(v), static_cast<int>(v)};
  }
  const long lo = parse_long(s.substr(0, dots), line);
  const long hi = parse_long(s.substr(dots + 2), line);
  if (hi < lo) config_fail(line, "empty range '" + s + "'");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<int> parse_int_list(const std::string& s, long line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(static_cast<int>(parse_long(s.substr(pos, comma - pos), line)));
    pos = comma + 1;
  }
  if (out.empty()) config_fail(line, "expected a comma-separated list");
  return out;
}

// Splits "k=v" tokens after the head word into a key/value map, rejecting
// repeats and bare words.
std::vector<std::pair<std::string, std::string>> keyed_tokens(
    const std::vector<std::string>& toks, long line) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const std::size_t eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0) {
      config_fail(line, "expected key=value, got '" + toks[i] + "'");
    }
    const std::string key = toks[i].substr(0, eq);
    for (const auto& [k, v] : out) {
      if (k == key) config_fail(line, "repeated key '" + key + "'");
    }
    out.emplace_back(key, toks[i].substr(eq + 1));
  }
  return out;
}

SourceSpec parse_source(const std::string& value, long line) {
  const std::vector<std::string> toks = split_ws(value);
  if (toks.empty()) config_fail(line, "empty source");
  SourceSpec src;
  const std::string& head = toks[0];
  bool saw_n = false, saw_d = false, saw_path = false, saw_offsets = false;
  if (head == "random") {
    src.kind = SourceSpec::Kind::random;
  } else if (head == "random-min-outdeg") {
    src.kind = SourceSpec::Kind::random_min_outdeg;
  } else if (head == "rotational") {
    src.kind = SourceSpec::Kind::rotational;
  } else if (head == "paley") {
    src.kind = SourceSpec::Kind::paley;
  } else if (head == "enumerate-all") {
    src.kind = SourceSpec::Kind::enumerate_all;
  } else if (head == "enumerate-regular") {
    src.kind = SourceSpec::Kind::enumerate_regular;
  } else if (head == "import") {
    src.kind = SourceSpec::Kind::import_file;
  } else {
    config_fail(line, "unknown source '" + head + "'");
  }
  for (const auto& [key, val] : keyed_tokens(toks, line)) {
    if (key == "n" || (key == "p" && src.kind == SourceSpec::Kind::paley)) {
      std::tie(src.n_lo, src.n_hi) = parse_range(val, line);
      saw_n = true;
    } else if (key == "d") {
      src.d = static_cast<int>(parse_long(val, line));
      saw_d = true;
    } else if (key == "count") {
      src.count = parse_long(val, line);
      if (src.count < 1) config_fail(line, "count must be positive");
    } else if (key == "seed") {
      src.seed = parse_u64(val, line);
    } else if (key == "offsets") {
      src.offsets = parse_int_list(val, line);
      saw_offsets = true;
    } else if (key == "path") {
      src.path = val;
      saw_path = true;
    } else {
      config_fail(line, "unknown source key '" + key + "'");
    }
  }
  const bool random_kind = src.kind == SourceSpec::Kind::random ||
                           src.kind == SourceSpec::Kind::random_min_outdeg;
  if (!random_kind && src.n_lo != src.n_hi) config_fail(line, "only random sources take a range");
  switch (src.kind) {
    case SourceSpec::Kind::random:
      if (!saw_n) config_fail(line, "random needs n");
      break;
    case SourceSpec::Kind::random_min_outdeg:
      if (!saw_n || !saw_d) config_fail(line, "random-min-outdeg needs n and d");
      break;
    case SourceSpec::Kind::rotational:
      if (!saw_n || !saw_offsets) config_fail(line, "rotational needs n and offsets");
      break;
    case SourceSpec::Kind::paley:
      if (!saw_n) config_fail(line, "paley needs p");
      break;
    case SourceSpec::Kind::enumerate_all:
    case SourceSpec::Kind::enumerate_regular:
      if (!saw_n) config_fail(line, "enumeration needs n");
      break;
    case SourceSpec::Kind::import_file:
      if (!saw_path || src.path.empty()) config_fail(line, "import needs path");
      break;
  }
  return src;
}

Predicate parse_predicate(const std::string& value, long line) {
  const std::vector<std::string> toks = split_ws(value);
  if (toks.empty()) config_fail(line, "empty predicate");
  Predicate pred;
  const std::string& head = toks[0];
  int k = 0, distinct = 0;
  std::vector<int> lengths;
  bool saw_k = false, saw_distinct = false, saw_lengths = false, saw_r = false;
  for (const auto& [key, val] : keyed_tokens(toks, line)) {
    if (key == "k") {
      k = static_cast<int>(parse_long(val, line));
      saw_k = true;
    } else if (key == "distinct") {
      distinct = static_cast<int>(parse_long(val, line));
      saw_distinct = true;
    } else if (key == "lengths") {
      lengths = parse_int_list(val, line);
      saw_lengths = true;
    } else if (key == "r") {
      pred.r = static_cast<int>(parse_long(val, line));
      saw_r = true;
    } else if (key == "min-outdeg") {
      pred.min_out_degree = static_cast<int>(parse_long(val, line));
      if (pred.min_out_degree < 0) config_fail(line, "min-outdeg must be nonnegative");
    } else {
      config_fail(line, "unknown predicate key '" + key + "'");
    }
  }
  if (head == "pack") {
    pred.kind = Predicate::Kind::pack;
    if (saw_r) config_fail(line, "pack takes no r");
    if (saw_lengths) {
      if (saw_k || saw_distinct) config_fail(line, "lengths excludes k and distinct");
      pred.spec = PackingSpec::exact(std::move(lengths));
    } else {
      if (!saw_k || !saw_distinct) config_fail(line, "pack needs k and distinct, or lengths");
      pred.spec = PackingSpec::distinct(k, distinct);
    }
  } else if (head == "reduce-strong") {
    pred.kind = Predicate::Kind::reduce_strong;
    if (saw_k || saw_distinct || saw_lengths) config_fail(line, "reduce-strong takes only r");
    if (!saw_r) config_fail(line, "reduce-strong needs r");
    if (pred.r < 1) config_fail(line, "r must be at least 1");
  } else {
    config_fail(line, "unknown predicate '" + head + "'");
  }
  return pred;
}

StopRule parse_stop(const std::string& value, long line) {
  const std::vector<std::string> toks = split_ws(value);
  if (toks.empty()) config_fail(line, "empty stop rule");
  StopRule stop;
  if (toks[0] == "exhaust" && toks.size() == 1) {
    stop.kind = StopRule::Kind::exhaust;
  } else if (toks[0] == "first-counterexample" && toks.size() == 1) {
    stop.kind = StopRule::Kind::first_counterexample;
  } else if (toks[0] == "sample" && toks.size() == 2) {
    stop.kind = StopRule::Kind::sample;
    stop.sample = parse_long(toks[1], line);
    if (stop.sample < 1) config_fail(line, "sample count must be positive");
  } else {
    config_fail(line, "bad stop rule '" + value + "'");
  }
  return stop;
}

}  // namespace

CampaignConfig parse_campaign_config(std::istream& in) {
  CampaignConfig cfg;
  cfg.name = "campaign";
  bool saw_source = false, saw_predicate = false;
  std::vector<std::string> seen_keys;
  std::string raw;
  long lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) config_fail(lineno, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) config_fail(lineno, "missing key");
    for (const std::string& k : seen_keys) {
      if (k == key) config_fail(lineno, "duplicate key '" + key + "'");
    }
    seen_keys.push_back(key);
    if (key == "name") {
      if (value.empty()) config_fail(lineno, "empty name");
      cfg.name = value;
    } else if (key == "source") {
      cfg.source = parse_source(value, lineno);
      saw_source = true;
    } else if (key == "predicate") {
      cfg.predicate = parse_predicate(value, lineno);
      saw_predicate = true;
    } else if (key == "stop") {
      cfg.stop = parse_stop(value, lineno);
    } else if (key == "expect") {
      if (value == "witness") {
        cfg.expect_witness = true;
      } else if (value == "none") {
        cfg.expect_witness = false;
      } else {
        config_fail(lineno, "expect must be witness or none");
      }
    } else if (key == "check-below-floor") {
      if (value == "true") {
        cfg.check_below_floor = true;
      } else if (value == "false") {
        cfg.check_below_floor = false;
      } else {
        config_fail(lineno, "check-below-floor must be true or false");
      }
    } else if (key == "jobs") {
      const long j = parse_long(value, lineno);
      if (j < 0) config_fail(lineno, "jobs must be nonnegative");
      cfg.jobs = static_cast<int>(j);
    } else if (key == "out") {
      cfg.out_path = value;
    } else {
      config_fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!saw_source) raise(Errc::parse_error, "config: missing source");
  if (!saw_predicate) raise(Errc::parse_error, "config: missing predicate");
  return cfg;
}

CampaignConfig parse_campaign_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_campaign_config(in);
}

// ---------------------------------------------------------------------------
// Campaign execution

namespace {

int resolve_jobs(int requested) {
  if (requested > 0) return std::min(requested, 256);
  if (const char* env = std::getenv("TRN_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
  }
  return 1;
}

int effective_min_degree(const Predicate& p) {
  // A reduction claim presupposes the degree hypothesis, so instances below
  // r are skipped just like ones below an explicit filter.
  if (p.kind == Predicate::Kind::reduce_strong) return std::max(p.min_out_degree, p.r);
  return p.min_out_degree;
}

ojson predicate_to_json(const Predicate& p) {
  ojson j;
  if (p.kind == Predicate::Kind::pack) {
    j["kind"] = "pack";
    if (p.spec.mode == PackingSpec::Mode::min_distinct) {
      j["mode"] = "min-distinct";
      j["k"] = p.spec.k;
      j["distinct"] = p.spec.min_distinct;
    } else {
      j["mode"] = "exact";
      j["lengths"] = p.spec.lengths;
    }
  } else {
    j["kind"] = "reduce-strong";
    j["r"] = p.r;
  }
  j["min_out_degree"] = p.min_out_degree;
  return j;
}

Predicate predicate_from_json(const ojson& j) {
  Predicate p;
  const std::string kind = j.at("kind").get<std::string>();
  p.min_out_degree = j.at("min_out_degree").get<int>();
  if (kind == "pack") {
    p.kind = Predicate::Kind::pack;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "min-distinct") {
      p.spec = PackingSpec::distinct(j.at("k").get<int>(), j.at("distinct").get<int>());
    } else if (mode == "exact") {
      p.spec = PackingSpec::exact(j.at("lengths").get<std::vector<int>>());
    } else {
      raise(Errc::parse_error, "unknown packing mode '" + mode + "'");
    }
  } else if (kind == "reduce-strong") {
    p.kind = Predicate::Kind::reduce_strong;
    p.r = j.at("r").get<int>();
  } else {
    raise(Errc::parse_error, "unknown predicate kind '" + kind + "'");
  }
  return p;
}

ojson toolchain_json() {
  ojson j;
  j["version"] = std::string(kVersion);
  j["prng"] = std::string(kPrngName);
  return j;
}

enum class Verdict { witness, exhausted_none, sample_pass, refuted };

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::witness: return "witness";
    case Verdict::exhausted_none: return "exhausted-none";
    case Verdict::sample_pass: return "sample-pass";
    case Verdict::refuted: return "refuted";
  }
  return "?";
}

bool verdict_unexpected(Verdict v, bool expect_witness) {
  if (v == Verdict::refuted) return true;
  return expect_witness ? v == Verdict::exhausted_none : v == Verdict::witness;
}

struct Pipeline {
  const CampaignConfig* cfg = nullptr;
  ojson pred_json;
  ojson tool_json;
  int min_deg = 0;
  int floor = 0;
  bool is_pack = true;

  std::mutex mu;
  std::condition_variable cv_space;  // producer waits for a free slot
  std::condition_variable cv_work;   // workers wait for a ready slot
  std::condition_variable cv_done;   // writer waits for the next slot
  struct Slot {
    int state = 0;  // 0 empty, 1 ready, 2 claimed, 3 done
    long index = 0;
    std::optional<Tournament> t;
    const char* skip = nullptr;
    ojson prov;
    std::string line;
    Verdict verdict = Verdict::witness;
    bool is_skip = false;
  };
  std::vector<Slot> ring;
  long produced = 0;
  long claimed = 0;
  long written = 0;
  bool producing_done = false;
  bool stop = false;     // writer decided the stream is complete
  bool aborted = false;  // a thread failed; bail out everywhere
  std::exception_ptr error;

  // Producer side: queue one instance. Returns false when the source should
  // stop iterating.
  bool push(Tournament&& t, ojson prov) {
    const char* skip = nullptr;
    if (is_pack && !cfg->check_below_floor && t.size() < floor) {
      skip = "below-floor";
    } else if (min_deg > 0 && (t.size() == 0 || t.min_out_degree() < min_deg)) {
      skip = "below-min-outdegree";
    }
    const bool counted = skip == nullptr;
    {
      std::unique_lock lk(mu);
      cv_space.wait(lk, [&] {
        return stop || aborted || produced - written < static_cast<long>(ring.size());
      });
      if (stop || aborted) return false;
      Slot& s = ring[static_cast<std::size_t>(produced % static_cast<long>(ring.size()))];
      s.state = 1;
      s.index = produced;
      s.t = std::move(t);
      s.skip = skip;
      s.prov = std::move(prov);
      ++produced;
    }
    cv_work.notify_one();
    if (counted && cfg->stop.kind == StopRule::Kind::sample && ++enqueued_checked >= cfg->stop.sample) {
      return false;
    }
    return true;
  }

  long enqueued_checked = 0;

  void produce() {
    const SourceSpec& src = cfg->source;
    switch (src.kind) {
      case SourceSpec::Kind::random:
      case SourceSpec::Kind::random_min_outdeg: {
        const bool with_d = src.kind == SourceSpec::Kind::random_min_outdeg;
        const int span = src.n_hi - src.n_lo + 1;
        for (long i = 0; i < src.count; ++i) {
          const int n = src.n_lo + static_cast<int>(i % span);
          const std::uint64_t s = derive_seed(src.seed, static_cast<std::uint64_t>(i));
          ojson prov;
          prov["generator"] = with_d ? "random-min-outdeg" : "random";
          prov["n"] = n;
          if (with_d) prov["d"] = src.d;
          prov["seed"] = s;
          Tournament t = with_d ? random_min_outdegree(n, src.d, s) : random_tournament(n, s);
          if (!push(std::move(t), std::move(prov))) return;
        }
        return;
      }
      case SourceSpec::Kind::rotational: {
        ojson prov;
        prov["generator"] = "rotational";
        prov["n"] = src.n_lo;
        prov["offsets"] = src.offsets;
        RotationSpec spec;
        spec.n = src.n_lo;
        spec.offsets = src.offsets;
        push(rotational(spec), std::move(prov));
        return;
      }
      case SourceSpec::Kind::paley: {
        ojson prov;
        prov["generator"] = "paley";
        prov["p"] = src.n_lo;
        push(paley(src.n_lo), std::move(prov));
        return;
      }
      case SourceSpec::Kind::enumerate_all: {
        long counter = 0;
        enumerate_all(src.n_lo, [&](const Tournament& t) {
          ojson prov;
          prov["generator"] = "enumerate-all";
          prov["n"] = src.n_lo;
          prov["counter"] = counter++;
          return push(Tournament(t), std::move(prov));
        });
        return;
      }
      case SourceSpec::Kind::enumerate_regular: {
        long ordinal = 0;
        enumerate_regular(src.n_lo, [&](const Tournament& t) {
          ojson prov;
          prov["generator"] = "enumerate-regular";
          prov["n"] = src.n_lo;
          prov["ordinal"] = ordinal++;
          return push(Tournament(t), std::move(prov));
        });
        return;
      }
      case SourceSpec::Kind::import_file: {
        std::ifstream in(src.path, std::ios::binary);
        if (!in) raise(Errc::source_unavailable, "cannot open '" + src.path + "'");
        TournamentReader reader(in);
        for (;;) {
          const long record = reader.index();
          std::optional<Tournament> t = reader.next();
          if (!t) return;
          ojson prov;
          prov["file"] = src.path;
          prov["record"] = record;
          if (!push(std::move(*t), std::move(prov))) return;
        }
      }
    }
  }

  void producer_main() {
    try {
      produce();
    } catch (...) {
      std::lock_guard lk(mu);
      if (!error) error = std::current_exception();
      aborted = true;
    }
    {
      std::lock_guard lk(mu);
      producing_done = true;
    }
    cv_work.notify_all();
    cv_done.notify_all();
    cv_space.notify_all();
  }

  std::string make_line(long index, const Tournament& t, const char* skip, const ojson& prov,
                        Verdict* verdict_out) {
    ojson rec;
    rec["v"] = 1;
    rec["kind"] = skip ? "skip" : "certificate";
    rec["claim"] = cfg->name;
    rec["index"] = index;
    ojson inst;
    inst["n"] = t.size();
    inst["format"] = "digraph6";
    inst["data"] = encode_digraph6(t);
    inst["provenance"] = prov;
    rec["instance"] = std::move(inst);
    rec["predicate"] = pred_json;
    if (skip) {
      rec["reason"] = skip;
      rec["toolchain"] = tool_json;
      return rec.dump();
    }
    Verdict v;
    std::optional<CyclePacking> witness;
    if (cfg->predicate.kind == Predicate::Kind::pack) {
      witness = find_packing(t, cfg->predicate.spec);
      v = witness ? Verdict::witness : Verdict::exhausted_none;
    } else {
      v = critical_core_is_strong(t, cfg->predicate.r) ? Verdict::sample_pass : Verdict::refuted;
    }
    rec["verdict"] = verdict_name(v);
    if (witness) {
      ojson cycles = ojson::array();
      for (const Cycle& c : witness->cycles) cycles.push_back(c.verts);
      rec["witness"] = ojson{{"cycles", std::move(cycles)}};
    }
    rec["toolchain"] = tool_json;
    *verdict_out = v;
    return rec.dump();
  }

  void worker_main() {
    try {
      for (;;) {
        long idx = 0;
        std::optional<Tournament> t;
        const char* skip = nullptr;
        ojson prov;
        {
          std::unique_lock lk(mu);
          cv_work.wait(lk, [&] { return stop || aborted || claimed < produced || producing_done; });
          if (stop || aborted) return;
          if (claimed == produced) {
            if (producing_done) return;
            continue;
          }
          idx = claimed++;
          Slot& s = ring[static_cast<std::size_t>(idx % static_cast<long>(ring.size()))];
          s.state = 2;
          t = std::move(s.t);
          skip = s.skip;
          prov = std::move(s.prov);
        }
        Verdict v = Verdict::witness;
        std::string line = make_line(idx, *t, skip, prov, &v);
        {
          std::lock_guard lk(mu);
          Slot& s = ring[static_cast<std::size_t>(idx % static_cast<long>(ring.size()))];
          s.line = std::move(line);
          s.verdict = v;
          s.is_skip = skip != nullptr;
          s.state = 3;
        }
        cv_done.notify_all();
      }
    } catch (...) {
      {
        std::lock_guard lk(mu);
        if (!error) error = std::current_exception();
        aborted = true;
      }
      cv_work.notify_all();
      cv_done.notify_all();
      cv_space.notify_all();
    }
  }
};

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const int jobs = resolve_jobs(config.jobs);

  Pipeline p;
  p.cfg = &config;
  p.pred_json = predicate_to_json(config.predicate);
  p.tool_json = toolchain_json();
  p.is_pack = config.predicate.kind == Predicate::Kind::pack;
  if (p.is_pack) {
    config.predicate.spec.validate();
    p.floor = feasibility_floor(config.predicate.spec);
  } else if (config.predicate.r < 1) {
    raise(Errc::arg_out_of_range, "reduction requirement must be at least 1");
  }
  p.min_deg = effective_min_degree(config.predicate);
  p.ring.resize(static_cast<std::size_t>(std::max(8, 4 * jobs)));

  std::vector<std::thread> threads;
  threads.emplace_back([&p] { p.producer_main(); });
  for (int i = 0; i < jobs; ++i) threads.emplace_back([&p] { p.worker_main(); });

  CampaignSummary sum;
  const long W = static_cast<long>(p.ring.size());
  for (;;) {
    std::string line;
    Verdict v = Verdict::witness;
    bool is_skip = false;
    {
      std::unique_lock lk(p.mu);
      p.cv_done.wait(lk, [&] {
        return p.aborted || p.ring[static_cast<std::size_t>(p.written % W)].state == 3 ||
               (p.producing_done && p.written == p.produced);
      });
      if (p.aborted) break;
      Pipeline::Slot& s = p.ring[static_cast<std::size_t>(p.written % W)];
      if (s.state != 3) break;  // producing_done && written == produced
      line = std::move(s.line);
      v = s.verdict;
      is_skip = s.is_skip;
      s.state = 0;
      s.t.reset();
      s.prov = ojson();
      ++p.written;
    }
    p.cv_space.notify_one();
    out << line << '\n';
    if (is_skip) {
      ++sum.skipped;
    } else {
      ++sum.checked;
      switch (v) {
        case Verdict::witness: ++sum.witnesses; break;
        case Verdict::exhausted_none: ++sum.exhausted_none; break;
        case Verdict::sample_pass: ++sum.sample_pass; break;
        case Verdict::refuted: ++sum.refuted; break;
      }
      if (config.stop.kind == StopRule::Kind::first_counterexample &&
          verdict_unexpected(v, config.expect_witness)) {
        {
          std::lock_guard lk(p.mu);
          p.stop = true;
        }
        p.cv_space.notify_all();
        p.cv_work.notify_all();
        break;
      }
    }
  }
  for (std::thread& th : threads) th.join();
  if (p.error) std::rethrow_exception(p.error);

  sum.ok = sum.refuted == 0 && (config.expect_witness ? sum.exhausted_none == 0 : sum.witnesses == 0);
  sum.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
  ojson s;
  s["v"] = 1;
  s["kind"] = "summary";
  s["claim"] = config.name;
  s["expect"] = config.expect_witness ? "witness" : "none";
  s["seed"] = config.source.seed;
  s["checked"] = sum.checked;
  s["witnesses"] = sum.witnesses;
  s["exhausted_none"] = sum.exhausted_none;
  s["sample_pass"] = sum.sample_pass;
  s["refuted"] = sum.refuted;
  s["skipped"] = sum.skipped;
  s["ok"] = sum.ok;
  s["elapsed_ms"] = sum.elapsed_ms;
  s["toolchain"] = p.tool_json;
  out << s.dump() << '\n';
  return sum;
}

bool certify_sharpness(std::ostream& out) {
  CampaignConfig cfg;
  cfg.name = "h-star-3-3-sharpness";
  cfg.source.kind = SourceSpec::Kind::paley;
  cfg.source.n_lo = cfg.source.n_hi = 11;
  cfg.predicate.kind = Predicate::Kind::pack;
  cfg.predicate.spec = PackingSpec::distinct(3, 3);
  cfg.stop.kind = StopRule::Kind::exhaust;
  cfg.expect_witness = false;
  // The whole point is an instance below the floor: 11 vertices cannot hold
  // 3 + 4 + 5, and the certificate shows the exhaustive search agreeing.
  cfg.check_below_floor = true;
  cfg.jobs = 1;
  const CampaignSummary sum = run_campaign(cfg, out);

  const Tournament t = paley(11);
  const int min_deg = t.min_out_degree();
  const int best = max_packable(t, 3);
  const bool ok = sum.ok && sum.exhausted_none == 1 && min_deg == 5 && best == 2;
  ojson rec;
  rec["v"] = 1;
  rec["kind"] = "sharpness";
  rec["claim"] = cfg.name;
  rec["min_out_degree"] = min_deg;
  rec["required_distinct"] = 3;
  rec["max_distinct"] = best;
  rec["ok"] = ok;
  rec["toolchain"] = toolchain_json();
  out << rec.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------------------
// Revalidation

namespace {

struct Tally {
  long witnesses = 0;
  long exhausted_none = 0;
  long sample_pass = 0;
  long refuted = 0;
  long skipped = 0;
};

void fail(RevalidationReport& rep, long line, const std::string& what) {
  ++rep.failures;
  if (rep.messages.size() < 50) {
    rep.messages.push_back("line " + std::to_string(line) + ": " + what);
  }
}

Tournament instance_tournament(const ojson& rec) {
  const ojson& inst = rec.at("instance");
  if (inst.at("format").get<std::string>() != "digraph6") {
    raise(Errc::parse_error, "unknown instance format");
  }
  Tournament t = decode_digraph6(inst.at("data").get<std::string>());
  if (t.size() != inst.at("n").get<int>()) {
    raise(Errc::parse_error, "instance order disagrees with its encoding");
  }
  return t;
}

}  // namespace

RevalidationReport revalidate_stream(std::istream& in) {
  RevalidationReport rep;
  Tally tally;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    ojson rec;
    try {
      rec = ojson::parse(line);
    } catch (const std::exception& e) {
      fail(rep, lineno, std::string("unparseable record: ") + e.what());
      continue;
    }
    try {
      if (rec.at("v").get<int>() != 1) {
        fail(rep, lineno, "unknown schema version");
        continue;
      }
      const std::string kind = rec.at("kind").get<std::string>();
      if (kind == "certificate") {
        ++rep.certificates;
        const Tournament t = instance_tournament(rec);
        const Predicate pred = predicate_from_json(rec.at("predicate"));
        const int min_deg = effective_min_degree(pred);
        if (min_deg > 0 && (t.size() == 0 || t.min_out_degree() < min_deg)) {
          fail(rep, lineno, "instance is below the predicate's degree filter");
        }
        const std::string verdict = rec.at("verdict").get<std::string>();
        const bool has_witness = rec.contains("witness");
        if (verdict == "witness") {
          if (!has_witness) {
            fail(rep, lineno, "witness verdict without a witness");
            continue;
          }
          if (pred.kind != Predicate::Kind::pack) {
            fail(rep, lineno, "witness verdict on a non-packing predicate");
            continue;
          }
          CyclePacking packing;
          for (const ojson& cyc : rec.at("witness").at("cycles")) {
            packing.cycles.push_back(Cycle{cyc.get<std::vector<int>>()});
          }
          if (!packing_satisfies(t, packing, pred.spec)) {
            fail(rep, lineno, "witness does not satisfy the packing claim");
          } else {
            ++rep.witnesses_checked;
            ++tally.witnesses;
          }
        } else if (verdict == "exhausted-none" || verdict == "sample-pass" ||
                   verdict == "refuted") {
          if (has_witness) {
            fail(rep, lineno, "witness attached to verdict " + verdict);
            continue;
          }
          if (verdict == "exhausted-none") {
            if (pred.kind != Predicate::Kind::pack) {
              fail(rep, lineno, "exhausted-none on a non-packing predicate");
              continue;
            }
            ++tally.exhausted_none;
          } else if (verdict == "sample-pass") {
            ++tally.sample_pass;
          } else {
            ++tally.refuted;
          }
        } else {
          fail(rep, lineno, "unknown verdict '" + verdict + "'");
        }
      } else if (kind == "skip") {
        const Tournament t = instance_tournament(rec);
        const Predicate pred = predicate_from_json(rec.at("predicate"));
        const std::string reason = rec.at("reason").get<std::string>();
        if (reason == "below-floor") {
          if (pred.kind != Predicate::Kind::pack ||
              t.size() >= feasibility_floor(pred.spec)) {
            fail(rep, lineno, "below-floor skip on an instance at or above the floor");
          } else {
            ++tally.skipped;
          }
        } else if (reason == "below-min-outdegree") {
          const int min_deg = effective_min_degree(pred);
          if (min_deg > 0 && t.size() > 0 && t.min_out_degree() >= min_deg) {
            fail(rep, lineno, "below-min-outdegree skip on an unfiltered instance");
          } else {
            ++tally.skipped;
          }
        } else {
          fail(rep, lineno, "unknown skip reason '" + reason + "'");
        }
      } else if (kind == "summary") {
        const long checked = rec.at("checked").get<long>();
        const long expect_checked =
            tally.witnesses + tally.exhausted_none + tally.sample_pass + tally.refuted;
        if (checked != expect_checked) {
          fail(rep, lineno, "summary checked count disagrees with the stream");
        }
        if (rec.at("witnesses").get<long>() != tally.witnesses ||
            rec.at("exhausted_none").get<long>() != tally.exhausted_none ||
            rec.at("sample_pass").get<long>() != tally.sample_pass ||
            rec.at("refuted").get<long>() != tally.refuted ||
            rec.at("skipped").get<long>() != tally.skipped) {
          fail(rep, lineno, "summary verdict counts disagree with the stream");
        }
        const std::string expect = rec.at("expect").get<std::string>();
        const bool expect_witness = expect == "witness";
        if (!expect_witness && expect != "none") {
          fail(rep, lineno, "unknown expectation '" + expect + "'");
        } else {
          const bool want_ok =
              tally.refuted == 0 &&
              (expect_witness ? tally.exhausted_none == 0 : tally.witnesses == 0);
          if (rec.at("ok").get<bool>() != want_ok) {
            fail(rep, lineno, "summary ok flag disagrees with the stream");
          }
        }
        tally = Tally{};
      } else if (kind == "sharpness") {
        const bool ok = rec.at("ok").get<bool>();
        const int max_distinct = rec.at("max_distinct").get<int>();
        const int required = rec.at("required_distinct").get<int>();
        if (ok && max_distinct >= required) {
          fail(rep, lineno, "sharpness claims ok yet the requirement was met");
        }
      } else {
        fail(rep, lineno, "unknown record kind '" + kind + "'");
      }
    } catch (const std::exception& e) {
      fail(rep, lineno, std::string("malformed record: ") + e.what());
    }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

}  // namespace trn
