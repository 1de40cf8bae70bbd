#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trn/bounds.hpp"
#include "trn/campaign.hpp"
#include "trn/cycles.hpp"
#include "trn/error.hpp"
#include "trn/gen.hpp"
#include "trn/io.hpp"
#include "trn/packing.hpp"
#include "trn/structure.hpp"
#include "trn/version.hpp"

namespace {

using ojson = nlohmann::ordered_json;

// "-" means the standard stream; anything else is a file path.
struct Input {
  std::ifstream file;
  std::istream& stream;

  explicit Input(const std::string& path)
      : file(path == "-" ? std::ifstream() : std::ifstream(path, std::ios::binary)),
        stream(path == "-" ? std::cin : file) {
    if (path != "-" && !file) trn::raise(trn::Errc::source_unavailable, "cannot open '" + path + "'");
  }
};

struct Output {
  std::ofstream file;
  std::ostream& stream;

  explicit Output(const std::string& path)
      : file(path.empty() ? std::ofstream() : std::ofstream(path, std::ios::binary)),
        stream(path.empty() ? std::cout : file) {
    if (!path.empty() && !file) {
      trn::raise(trn::Errc::source_unavailable, "cannot open '" + path + "' for writing");
    }
  }
};

struct GenArgs {
  std::string kind;
  int n = 0;
  int d = 0;
  long count = 1;
  std::uint64_t seed = 0;
  std::vector<int> offsets;
  std::string format = "digraph6";
  std::string out;
};

int run_gen(const GenArgs& a) {
  Output out(a.out);
  const auto emit = [&](const trn::Tournament& t) {
    if (a.format == "trn") {
      out.stream << trn::encode_trn(t);
    } else {
      out.stream << trn::encode_digraph6(t) << '\n';
    }
    return true;
  };
  if (a.kind == "random") {
    for (long i = 0; i < a.count; ++i) {
      emit(trn::random_tournament(a.n, trn::derive_seed(a.seed, static_cast<std::uint64_t>(i))));
    }
  } else if (a.kind == "regular-min-outdeg") {
    for (long i = 0; i < a.count; ++i) {
      emit(trn::random_min_outdegree(a.n, a.d,
                                     trn::derive_seed(a.seed, static_cast<std::uint64_t>(i))));
    }
  } else if (a.kind == "rotational") {
    trn::RotationSpec spec;
    spec.n = a.n;
    spec.offsets = a.offsets;
    emit(trn::rotational(spec));
  } else if (a.kind == "paley") {
    emit(trn::paley(a.n));
  } else if (a.kind == "enumerate-all") {
    trn::enumerate_all(a.n, emit);
  } else if (a.kind == "enumerate-regular") {
    trn::enumerate_regular(a.n, emit);
  }
  return 0;
}

int run_components(const std::string& input) {
  Input in(input);
  trn::TournamentReader reader(in.stream);
  for (;;) {
    const long index = reader.index();
    std::optional<trn::Tournament> t = reader.next();
    if (!t) break;
    const trn::StrongDecomposition dec = trn::condense(*t);
    ojson rec;
    rec["index"] = index;
    rec["n"] = t->size();
    rec["strong"] = dec.components.size() == 1;
    ojson comps = ojson::array();
    for (const trn::VertexSet& c : dec.components) comps.push_back(c.to_vector());
    rec["components"] = std::move(comps);
    std::cout << rec.dump() << '\n';
  }
  return 0;
}

int run_moon(const std::string& input, int vertex, int length) {
  Input in(input);
  trn::TournamentReader reader(in.stream);
  for (;;) {
    const long index = reader.index();
    std::optional<trn::Tournament> t = reader.next();
    if (!t) break;
    const trn::Cycle c = trn::moon_cycle(*t, vertex, length);
    ojson rec;
    rec["index"] = index;
    rec["vertex"] = vertex;
    rec["length"] = length;
    rec["cycle"] = c.verts;
    std::cout << rec.dump() << '\n';
  }
  return 0;
}

int run_pack(const std::string& input, int k, int distinct, const std::vector<int>& lengths) {
  trn::PackingSpec spec = lengths.empty() ? trn::PackingSpec::distinct(k, distinct)
                                          : trn::PackingSpec::exact(lengths);
  Input in(input);
  trn::TournamentReader reader(in.stream);
  bool all_found = true;
  for (;;) {
    const long index = reader.index();
    std::optional<trn::Tournament> t = reader.next();
    if (!t) break;
    const std::optional<trn::CyclePacking> packing = trn::find_packing(*t, spec);
    ojson rec;
    rec["index"] = index;
    rec["n"] = t->size();
    rec["found"] = packing.has_value();
    if (packing) {
      ojson cycles = ojson::array();
      for (const trn::Cycle& c : packing->cycles) cycles.push_back(c.verts);
      rec["witness"] = ojson{{"cycles", std::move(cycles)}};
    } else {
      all_found = false;
    }
    std::cout << rec.dump() << '\n';
  }
  return all_found ? 0 : 1;
}

int run_reduce(const std::string& input, int r) {
  Input in(input);
  trn::TournamentReader reader(in.stream);
  for (;;) {
    const long index = reader.index();
    std::optional<trn::Tournament> t = reader.next();
    if (!t) break;
    const trn::CriticalCore core = trn::outdegree_critical_reduce(*t, r);
    ojson rec;
    rec["index"] = index;
    rec["n"] = t->size();
    rec["core_n"] = core.core.size();
    rec["vertices"] = core.vertices;
    rec["min_out_degree"] = core.min_out_degree;
    rec["strong"] = trn::is_strongly_connected(core.core);
    std::cout << rec.dump() << '\n';
  }
  return 0;
}

const char* status_name(trn::BoundEntry::Status s) {
  switch (s) {
    case trn::BoundEntry::Status::exact: return "exact";
    case trn::BoundEntry::Status::bounded: return "bounded";
    case trn::BoundEntry::Status::conjectured: return "conjectured";
  }
  return "?";
}

ojson entry_json(const trn::BoundEntry& e) {
  ojson j;
  j["fn"] = trn::bound_fn_name(e.fn);
  j["k"] = e.k;
  j["l"] = e.l;
  j["lower"] = e.lower.str();
  j["lower_num"] = e.lower.num;
  j["lower_den"] = e.lower.den;
  if (e.upper) {
    j["upper"] = *e.upper;
  } else {
    j["upper"] = nullptr;
  }
  j["status"] = status_name(e.status);
  j["lower_source"] = e.lower_source;
  j["upper_source"] = e.upper_source;
  return j;
}

void entry_row(std::ostream& out, const trn::BoundEntry& e) {
  std::ostringstream upper;
  if (e.upper) {
    upper << *e.upper;
  } else {
    upper << "-";
  }
  out << std::left << std::setw(7) << trn::bound_fn_name(e.fn) << std::right << std::setw(3)
      << e.k << std::setw(3) << e.l << std::setw(8) << e.lower.str() << std::setw(7)
      << upper.str() << "  " << std::left << std::setw(12) << status_name(e.status)
      << e.lower_source << (e.upper_source.empty() ? "" : " | " + e.upper_source) << '\n';
}

int run_bounds(const std::string& fn_name, int k, int l, int max_k, bool as_json) {
  std::vector<trn::BoundEntry> entries;
  if (!fn_name.empty() && k > 0) {
    trn::BoundFn fn;
    if (fn_name == "f") {
      fn = trn::BoundFn::f;
    } else if (fn_name == "g") {
      fn = trn::BoundFn::g;
    } else if (fn_name == "h") {
      fn = trn::BoundFn::h;
    } else {
      fn = trn::BoundFn::h_star;
    }
    entries.push_back(trn::known_bounds(fn, k, l));
  } else {
    for (int kk = 1; kk <= max_k; ++kk) entries.push_back(trn::known_bounds(trn::BoundFn::f, kk));
    for (int kk = 1; kk <= max_k; ++kk) entries.push_back(trn::known_bounds(trn::BoundFn::g, kk));
    for (int kk = 1; kk <= max_k; ++kk) {
      for (int ll = 1; ll <= kk; ++ll) {
        entries.push_back(trn::known_bounds(trn::BoundFn::h_star, kk, ll));
      }
    }
  }
  if (as_json) {
    for (const trn::BoundEntry& e : entries) std::cout << entry_json(e).dump() << '\n';
  } else {
    std::cout << std::left << std::setw(7) << "fn" << std::right << std::setw(3) << "k"
              << std::setw(3) << "l" << std::setw(8) << "lower" << std::setw(7) << "upper"
              << "  " << std::left << std::setw(12) << "status"
              << "source" << '\n';
    for (const trn::BoundEntry& e : entries) entry_row(std::cout, e);
  }
  return 0;
}

int run_verify(const std::string& config_path, int jobs, const std::string& out_path) {
  std::ifstream cfg_in(config_path);
  if (!cfg_in) trn::raise(trn::Errc::source_unavailable, "cannot open '" + config_path + "'");
  trn::CampaignConfig cfg = trn::parse_campaign_config(cfg_in);
  if (jobs > 0) cfg.jobs = jobs;
  const std::string out_file = !out_path.empty() ? out_path : cfg.out_path;
  Output out(out_file);
  const trn::CampaignSummary sum = trn::run_campaign(cfg, out.stream);
  std::cerr << "campaign '" << cfg.name << "': checked " << sum.checked << ", witnesses "
            << sum.witnesses << ", exhausted-none " << sum.exhausted_none << ", sample-pass "
            << sum.sample_pass << ", refuted " << sum.refuted << ", skipped " << sum.skipped
            << ", " << (sum.ok ? "ok" : "NOT ok") << " (" << sum.elapsed_ms << " ms)\n";
  return sum.ok ? 0 : 1;
}

int run_certify_sharpness(const std::string& out_path) {
  Output out(out_path);
  const bool ok = trn::certify_sharpness(out.stream);
  std::cerr << "sharpness certificate: " << (ok ? "ok" : "NOT ok") << '\n';
  return ok ? 0 : 1;
}

int run_revalidate(const std::string& input) {
  Input in(input);
  const trn::RevalidationReport rep = trn::revalidate_stream(in.stream);
  ojson j;
  j["certificates"] = rep.certificates;
  j["witnesses_checked"] = rep.witnesses_checked;
  j["failures"] = rep.failures;
  j["ok"] = rep.ok;
  j["messages"] = rep.messages;
  std::cout << j.dump() << '\n';
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament cycle-packing toolkit"};
  app.set_version_flag("--version", std::string(trn::kVersion));
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate tournaments");
  gen->add_option("--kind", gen_args.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"random", "regular-min-outdeg", "rotational", "paley",
                             "enumerate-all", "enumerate-regular"}));
  gen->add_option("--n", gen_args.n, "Order (for paley: the prime p)")->required();
  gen->add_option("--d", gen_args.d, "Minimum outdegree (regular-min-outdeg)");
  gen->add_option("--count", gen_args.count, "Number of instances (random kinds)");
  gen->add_option("--seed", gen_args.seed, "Master seed (random kinds)");
  gen->add_option("--offsets", gen_args.offsets, "Rotational offsets")->delimiter(',');
  gen->add_option("--format", gen_args.format, "Output format")
      ->check(CLI::IsMember({"digraph6", "trn"}));
  gen->add_option("--out", gen_args.out, "Output file (default standard output)");

  std::string comp_input;
  CLI::App* components = app.add_subcommand("components", "Strong components in dominance order");
  components->add_option("input", comp_input, "TRN or digraph6 file, '-' for standard input")
      ->required();

  std::string moon_input;
  int moon_vertex = 0;
  int moon_length = 3;
  CLI::App* moon = app.add_subcommand("moon", "Cycle of a given length through a given vertex");
  moon->add_option("input", moon_input, "TRN or digraph6 file, '-' for standard input")->required();
  moon->add_option("--vertex", moon_vertex, "Vertex the cycle must pass through")->required();
  moon->add_option("--length", moon_length, "Cycle length")->required();

  std::string pack_input;
  int pack_k = 0;
  int pack_distinct = 0;
  std::vector<int> pack_lengths;
  CLI::App* pack = app.add_subcommand("pack", "Vertex-disjoint cycle packing");
  pack->add_option("input", pack_input, "TRN or digraph6 file, '-' for standard input")->required();
  pack->add_option("--k", pack_k, "Number of cycles");
  pack->add_option("--distinct", pack_distinct, "Minimum number of different lengths");
  pack->add_option("--lengths", pack_lengths, "Exact cycle lengths (excludes --k/--distinct)")
      ->delimiter(',');

  std::string reduce_input;
  int reduce_r = 0;
  CLI::App* reduce = app.add_subcommand("reduce", "Outdegree-critical core");
  reduce->add_option("input", reduce_input, "TRN or digraph6 file, '-' for standard input")
      ->required();
  reduce->add_option("--r", reduce_r, "Required minimum outdegree")->required();

  std::string verify_config;
  int verify_jobs = 0;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run a campaign from a config file");
  verify->add_option("--config", verify_config, "Campaign config file")->required();
  verify->add_option("--jobs", verify_jobs, "Worker count (overrides config and TRN_JOBS)");
  verify->add_option("--out", verify_out, "Certificate output file (overrides config)");

  std::string bounds_fn;
  int bounds_k = 0;
  int bounds_l = 0;
  int bounds_max_k = 8;
  bool bounds_json = false;
  CLI::App* bounds = app.add_subcommand("bounds", "Known threshold values and bounds");
  bounds->add_option("--fn", bounds_fn, "One of f, g, h, h_star")
      ->check(CLI::IsMember({"f", "g", "h", "h_star"}));
  bounds->add_option("--k", bounds_k, "Number of cycles");
  bounds->add_option("--l", bounds_l, "Number of distinct lengths");
  bounds->add_option("--max-k", bounds_max_k, "Table size when no --fn/--k given");
  bounds->add_flag("--json", bounds_json, "JSON lines instead of a table");

  std::string sharp_out;
  CLI::App* sharp = app.add_subcommand("certify-sharpness", "Certify the 3-cycle sharpness example");
  sharp->add_option("--out", sharp_out, "Certificate output file (default standard output)");

  std::string reval_input;
  CLI::App* reval = app.add_subcommand("revalidate", "Re-check a certificate stream");
  reval->add_option("input", reval_input, "JSONL certificate file, '-' for standard input")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (components->parsed()) return run_components(comp_input);
    if (moon->parsed()) return run_moon(moon_input, moon_vertex, moon_length);
    if (pack->parsed()) {
      if (pack_lengths.empty() && (pack_k <= 0 || pack_distinct <= 0)) {
        std::cerr << "pack needs --k and --distinct, or --lengths\n";
        return 2;
      }
      if (!pack_lengths.empty() && (pack_k > 0 || pack_distinct > 0)) {
        std::cerr << "--lengths excludes --k and --distinct\n";
        return 2;
      }
      return run_pack(pack_input, pack_k, pack_distinct, pack_lengths);
    }
    if (reduce->parsed()) return run_reduce(reduce_input, reduce_r);
    if (verify->parsed()) return run_verify(verify_config, verify_jobs, verify_out);
    if (bounds->parsed()) {
      if (!bounds_fn.empty() && bounds_k <= 0) {
        std::cerr << "--fn needs --k\n";
        return 2;
      }
      return run_bounds(bounds_fn, bounds_k, bounds_l, bounds_max_k, bounds_json);
    }
    if (sharp->parsed()) return run_certify_sharpness(sharp_out);
    if (reval->parsed()) return run_revalidate(reval_input);
  } catch (const trn::Error& e) {
    std::cerr << "error (" << trn::errc_name(e.code()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
