#pragma once

// Command implementations behind the `dnacodes` executable. Kept in a header
// so tests can drive the commands in-process.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnacodes/bincodes.hpp"
#include "dnacodes/constraints.hpp"
#include "dnacodes/factory.hpp"
#include "dnacodes/io.hpp"
#include "dnacodes/isomap.hpp"
#include "dnacodes/search.hpp"
#include "published_tables.hpp"
#include "report_json.hpp"

namespace dnacodes::cli {

using nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kOutDirVariable = "DNACODES_OUT_DIR";

enum ExitCode : int { kPass = 0, kConstraintFailure = 1, kUsageError = 2 };

/// Relative output paths land under $DNACODES_OUT_DIR when it is set.
inline std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirVariable); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

/// Writes `content` to `path`, or to `out` when `path` is empty.
inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  const auto p = resolve_output(path);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
  f << content;
}

struct Manifest {
  Manifest(std::string cmd, json params, std::optional<std::uint64_t> seed = std::nullopt)
      : command(std::move(cmd)), parameters(std::move(params)), master_seed(seed) {}

  std::string command;
  json parameters = json::object();
  std::optional<std::uint64_t> master_seed;
  std::vector<std::string> outputs;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json to_json() const {
    json m = {{"command", command}, {"tool_version", kToolVersion}, {"parameters", parameters}};
    m["master_seed"] = master_seed ? json(*master_seed) : json(nullptr);
    json outs = json::array();
    for (const auto& o : outputs) outs.push_back(resolve_output_name(o));
    m["outputs"] = outs;
    // Wall time is opt-in so repeated runs stay byte-identical.
    if (timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      m["wall_time_seconds"] = dt.count();
    }
    return m;
  }

  std::vector<std::string> header() const { return {"manifest " + to_json().dump()}; }

 private:
  static std::string resolve_output_name(const std::string& o) {
    std::filesystem::path p(o);
    if (p.is_relative()) {
      if (const char* dir = std::getenv(kOutDirVariable); dir != nullptr && *dir != '\0') return (std::filesystem::path(dir) / p).string();
    }
    return o;
  }
};

inline json envelope(const Manifest& m, json measured, json claims, bool pass) {
  return {{"manifest", m.to_json()}, {"parameters", m.parameters}, {"measured", std::move(measured)},
          {"claims", std::move(claims)}, {"pass", pass}};
}

// ---------------------------------------------------------------- seeds

struct SeedsArgs {
  std::size_t n = 0, ell = 0, gc = 0;
  std::string out;
};

inline int cmd_seeds(const SeedsArgs& a, std::ostream& out) {
  const SeedSetSpec spec{a.n, a.ell, a.gc};
  const auto seeds = enumerate_seed_set(spec);
  Manifest m{"seeds", {{"n", a.n}, {"ell", a.ell}, {"gc", a.gc}}};
  if (!a.out.empty()) m.outputs.push_back(a.out);
  std::ostringstream text;
  auto header = m.header();
  header.push_back("count " + std::to_string(seeds.size()));
  io::write_dna_words(text, seeds, header);
  emit(a.out, text.str(), out);
  return kPass;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::size_t n = 0, ell = 0, gc = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string law = "uniform";
  unsigned workers = detail::default_workers();
  std::string out;
  bool timing = false;
};

inline int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchConfig cfg;
  cfg.trials = a.trials;
  cfg.master_seed = a.seed;
  cfg.subset_law = SubsetLaw::parse(a.law);
  cfg.workers = a.workers;
  Manifest m{"search",
             {{"n", a.n}, {"ell", a.ell}, {"gc", a.gc}, {"trials", a.trials}, {"seed", a.seed}, {"law", cfg.subset_law.str()}},
             a.seed};
  m.timing = a.timing;
  if (!a.out.empty()) m.outputs.push_back(a.out);
  const auto table = random_construction({a.n, a.ell, a.gc}, cfg);
  emit(a.out, envelope(m, report::to_json(table), json::object(), true).dump(2) + "\n", out);
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::optional<std::size_t> d, length, size, gc, ell;
  bool complete = false, complement = false, hairpin = false;
  unsigned workers = detail::default_workers();
  std::string out;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto words = io::read_dna_words(a.file);
  const DnaCode code(words);
  const auto r = verify_code(code, a.d, a.workers);
  Manifest m{"verify", {{"file", a.file}}};
  if (!a.out.empty()) m.outputs.push_back(a.out);
  json claims = json::object();
  bool pass = true;
  auto claim = [&](const std::string& name, json wanted, json got, bool ok) {
    claims[name] = {{"claimed", std::move(wanted)}, {"measured", std::move(got)}, {"pass", ok}};
    pass = pass && ok;
  };
  if (a.d) {
    m.parameters["d"] = *a.d;
    claim("hamming", *a.d, r.min_hamming, r.hamming_ok);
    claim("reverse", *a.d, r.min_reverse, r.reverse_ok);
    claim("reverse_complement", *a.d, r.min_reverse_complement, r.reverse_complement_ok);
    if (a.complement) claim("complement", *a.d, r.min_complement, r.complement_ok);
  } else if (a.complement) {
    claim("complement", r.min_hamming, r.min_complement, r.complement_ok);
  }
  if (a.length) {
    m.parameters["length"] = *a.length;
    claim("length", *a.length, r.length, r.length == *a.length);
  }
  if (a.size) {
    m.parameters["size"] = *a.size;
    claim("size", *a.size, r.size, r.size == *a.size);
  }
  if (a.gc) {
    m.parameters["gc"] = *a.gc;
    claim("gc_content", *a.gc, r.gc_constant ? json(*r.gc_constant) : json(nullptr), r.gc_constant == a.gc);
  }
  if (a.ell) {
    m.parameters["ell"] = *a.ell;
    claim("conflict_free_level", *a.ell, r.conflict_free_level, r.conflict_free_level >= *a.ell);
  }
  if (a.complete) claim("complete_conflict_free", r.length / 2, r.conflict_free_level, r.conflict_free_level == r.length / 2);
  if (a.hairpin) claim("hairpin_free", true, r.hairpin_free, r.hairpin_free);
  emit(a.out, envelope(m, report::to_json(r), claims, pass).dump(2) + "\n", out);
  return pass ? kPass : kConstraintFailure;
}

// ---------------------------------------------------------------- pairs

struct PairsArgs {
  std::size_t ell = 0;
  std::string criterion = "tabulated";
  std::string out;
};

inline PairCriterion parse_criterion(const std::string& s) {
  if (s == "tabulated") return PairCriterion::Tabulated;
  if (s == "printed") return PairCriterion::Printed;
  throw std::invalid_argument("criterion must be tabulated or printed");
}

inline int cmd_pairs(const PairsArgs& a, std::ostream& out) {
  const auto pairs = enumerate_valid_pairs(a.ell, parse_criterion(a.criterion));
  Manifest m{"pairs", {{"ell", a.ell}, {"criterion", a.criterion}}};
  if (!a.out.empty()) m.outputs.push_back(a.out);
  std::ostringstream text;
  io::write_pairs(text, pairs, m.header());
  emit(a.out, text.str(), out);
  return kPass;
}

// ---------------------------------------------------------------- encode

struct EncodeArgs {
  std::string code;
  std::string code_file;
  std::size_t ell = 0;
  std::string pair;
  std::string h0 = "x";
  bool allow_partial = false;
  unsigned workers = detail::default_workers();
  std::string out;
  std::string report;
  bool timing = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BlockPair parse_pair(const std::string& text, std::size_t ell) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects X,Y");
  auto p = BlockPair::parse(text.substr(0, comma), text.substr(comma + 1));
  if (p.ell() != ell) throw UsageError("--pair blocks have length " + std::to_string(p.ell()) + ", expected --ell " + std::to_string(ell));
  return p;
}

inline std::string failed_flags(const PairValidation& v) {
  std::string s;
  auto add = [&](bool ok, const char* name) {
    if (!ok) s += (s.empty() ? "" : ", ") + std::string(name);
  };
  add(v.distance_ok, "distance_ok");
  add(v.gc_balanced, "gc_balanced");
  add(v.conflict_safe, "conflict_safe");
  return s;
}

inline int cmd_encode(const EncodeArgs& a, std::ostream& out) {
  if (a.code.empty() == a.code_file.empty()) throw UsageError("give exactly one of --code or --code-file");
  const BlockPair pair = a.pair.empty() ? default_pair(a.ell) : parse_pair(a.pair, a.ell);
  const BlockRole h0 = parse_role(a.h0);
  const auto flags = validate_pair(pair);
  if (!flags.fully_valid && !a.allow_partial) {
    throw ConstraintError("pair (" + pair.x().str() + "," + pair.y().str() + ") is not fully valid: failed " + failed_flags(flags));
  }

  Manifest m{"encode", {{"ell", a.ell}, {"pair", pair.x().str() + "," + pair.y().str()}, {"h0", role_name(h0)}}};
  m.timing = a.timing;
  if (!a.out.empty()) m.outputs.push_back(a.out);
  if (!a.report.empty()) m.outputs.push_back(a.report);

  std::optional<DnaCodeBuild> build;
  json notes = json::array();
  if (!a.code.empty()) {
    m.parameters["code"] = a.code;
    const auto code = named_code(a.code);
    const auto& g = code.generator();
    const bool rm = a.code.rfind("rm,", 0) == 0;
    if (rm && g) {
      // Reed-Muller names carry r and m; route r < m through the dedicated predictions.
      const std::size_t r = std::stoul(a.code.substr(3, a.code.find(',', 3) - 3));
      const std::size_t mm = std::stoul(a.code.substr(a.code.find(',', 3) + 1));
      if (r < mm && mm <= kReedMullerDnaMaxM) {
        build.emplace(reed_muller_dna(r, mm, pair, h0, a.workers));
      } else {
        notes.push_back(r == mm ? "r = m: the Reed-Muller distance formula is fractional and not checked"
                                : "m > 4: Reed-Muller predictions not checked");
      }
    }
    if (!build) build.emplace(build_dna_code(code, pair, h0, std::nullopt, a.workers));
  } else {
    m.parameters["code_file"] = a.code_file;
    const auto code = BinaryCode::from_words(io::read_binary_words(a.code_file), a.code_file);
    build.emplace(build_dna_code(code, pair, h0, std::nullopt, a.workers));
  }

  const auto& rep = build->report;
  if (!a.out.empty()) {
    std::ostringstream text;
    io::write_dna_words(text, build->code.words(), m.header());
    emit(a.out, text.str(), out);
  }
  json measured = report::to_json(rep);
  if (!notes.empty()) measured["notes"] = notes;
  if (a.out.empty()) measured["codewords"] = report::words(build->code.words());
  const json doc = envelope(m, measured, report::to_json(rep.claims), rep.pass());
  emit(a.report, doc.dump(2) + "\n", out);
  return rep.pass() ? kPass : kConstraintFailure;
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::string which;
  std::size_t n_max = 6;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string law = "uniform:8";
  unsigned workers = detail::default_workers();
  std::string out;
};

inline std::string diff_mark(long computed, int published) {
  if (published < 0) return "n/a";
  if (computed == published) return "=";
  return (computed > published ? "+" : "") + std::to_string(computed - published);
}

inline void render_bounds(const TablesArgs& a, std::ostream& os) {
  if (a.n_max < 2 || a.n_max > 10) throw UsageError("--n-max must be within 2..10");
  SearchConfig cfg;
  cfg.trials = a.trials;
  cfg.master_seed = a.seed;
  cfg.subset_law = SubsetLaw::parse(a.law);
  cfg.workers = a.workers;
  os << "Lower bounds on code size, GC = floor(n/2); trials=" << a.trials << " seed=" << a.seed << " law=" << cfg.subset_law.str()
     << "\n";
  os << "cell format: computed[provenance] published diff; provenance seed = whole seed set (exact), "
        "ext = extremal value (exact), rnd = random search\n";
  for (const auto& row : published::kBoundTable) {
    if (row.n > a.n_max) continue;
    const SeedSetSpec spec{row.n, row.ell, row.n / 2};
    const auto table = random_construction(spec, cfg);
    os << "n=" << std::setw(2) << row.n << " ell=" << row.ell << " |";
    for (std::size_t d = 1; d <= row.n; ++d) {
      long value = static_cast<long>(table.at_distance(d).size);
      std::string tag = "rnd";
      if (d == 1) {
        value = static_cast<long>(table.seed_set_size);
        tag = "seed";
      } else if (d == row.n) {
        value = std::max<long>(value, static_cast<long>(extremal_size(row.n)));
        tag = "ext";
      }
      os << " d" << d << ":" << value << "[" << tag << "] " << (row.size[d - 1] < 0 ? std::string("-") : std::to_string(row.size[d - 1]))
         << " " << diff_mark(value, row.size[d - 1]) << " |";
    }
    os << "\n";
  }
}

template <std::size_t N>
std::set<std::pair<std::string, std::string>> published_set(const std::array<published::PairRow, N>& rows) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& r : rows) s.emplace(std::string(r.x), std::string(r.y));
  return s;
}

inline void render_pairs(std::ostream& os) {
  os << "Block pairs per ell: computed (tabulated distance condition) vs published listing\n";
  const std::array<std::set<std::pair<std::string, std::string>>, 3> published{
      published_set(published::kPairsEll3), published_set(published::kPairsEll4), published_set(published::kPairsEll5)};
  for (std::size_t ell = 3; ell <= 5; ++ell) {
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& p : enumerate_valid_pairs(ell)) got.emplace(p.x().str(), p.y().str());
    const auto printed = enumerate_valid_pairs(ell, PairCriterion::Printed).size();
    const auto& want = published[ell - 3];
    os << "ell=" << ell << " computed=" << got.size() << " published=" << want.size()
       << " set_equal=" << (got == want ? "yes" : "no") << " printed_caption_count=" << printed << "\n";
  }
}

inline void render_params(const TablesArgs& a, std::ostream& os) {
  const std::size_t ell = 3;
  const auto pair = default_pair(ell);
  os << "DNA codes from binary codes, ell=" << ell << ", pair (" << pair.x() << "," << pair.y() << ")\n";
  os << "code | length | M | measured d_H (multiple of ell) | published\n";
  struct Row {
    std::string label, name, published;
  };
  const std::vector<Row> rows{
      {"[5,2,5] repetition", "repetition5", "5l, 2, 3l"},
      {"[7,4,3] Hamming", "hamming74", "7l, 16, 2l"},
      {"R(1,3) Reed-Muller", "rm,1,3", "8l, 256, l (row printed as [8,4,2]; inconsistent with M=256 and with R(1,3) = [8,4,4])"},
      {"[23,12,7] Golay", "golay23", "23l, 4096, 4l"},
  };
  for (const auto& r : rows) {
    const auto build = build_dna_code(named_code(r.name), pair, BlockRole::X, std::nullopt, a.workers);
    const auto& m = build.report.measured;
    os << r.label << " | " << m.length << " (" << m.length / ell << "l) | " << m.size << " | " << m.min_hamming << " ("
       << m.min_hamming / ell << "l" << (m.min_hamming % ell ? "+" : "") << ") | " << r.published << "\n";
  }
  os << "(15,256,5) Nordstrom-Robinson | not constructed (nonlinear code, out of scope) | published 15l, 256, 3l\n";
}

inline int cmd_tables(const TablesArgs& a, std::ostream& out) {
  std::ostringstream os;
  if (a.which == "bounds") {
    render_bounds(a, os);
  } else if (a.which == "pairs") {
    render_pairs(os);
  } else if (a.which == "params") {
    render_params(a, os);
  } else {
    throw UsageError("--which must be bounds, pairs or params");
  }
  emit(a.out, os.str(), out);
  return kPass;
}

// ---------------------------------------------------------------- entry

/// Parses argv and runs one subcommand. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained DNA code construction and verification", "dnacodes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  SeedsArgs seeds;
  auto* s = app.add_subcommand("seeds", "Write the seed set: ell-conflict-free strings with fixed GC content");
  s->add_option("--n", seeds.n, "String length")->required();
  s->add_option("--ell", seeds.ell, "Conflict-free level")->required();
  s->add_option("--gc", seeds.gc, "GC content")->required();
  s->add_option("--out", seeds.out, "Output file (default stdout)");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "Random subset search for code size lower bounds");
  se->add_option("--n", search.n, "String length")->required();
  se->add_option("--ell", search.ell, "Conflict-free level")->required();
  se->add_option("--gc", search.gc, "GC content")->required();
  se->add_option("--trials", search.trials, "Number of random subsets")->capture_default_str();
  se->add_option("--seed", search.seed, "Master seed")->capture_default_str();
  se->add_option("--law", search.law, "Subset size law: uniform, uniform:K or fixed:K")->capture_default_str();
  se->add_option("--workers", search.workers, "Worker threads (does not change results)");
  se->add_option("--out", search.out, "Output JSON file (default stdout)");
  se->add_flag("--timing", search.timing, "Record wall time in the manifest");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Measure the constraints of a DNA code file");
  v->add_option("file", verify.file, "Code file")->required();
  v->add_option("--d", verify.d, "Claimed minimum distance (Hamming, reverse, reverse-complement)");
  v->add_option("--length", verify.length, "Claimed codeword length");
  v->add_option("--size", verify.size, "Claimed number of codewords");
  v->add_option("--gc", verify.gc, "Claimed constant GC content");
  v->add_option("--ell", verify.ell, "Claimed conflict-free level");
  v->add_flag("--complete", verify.complete, "Claim complete conflict freedom");
  v->add_flag("--complement", verify.complement, "Also claim the complement constraint");
  v->add_flag("--hairpin", verify.hairpin, "Claim rc-substring freedom");
  v->add_option("--workers", verify.workers, "Worker threads");
  v->add_option("--out", verify.out, "Output JSON file (default stdout)");

  PairsArgs pairs;
  auto* p = app.add_subcommand("pairs", "Enumerate valid block pairs");
  p->add_option("--ell", pairs.ell, "Block length")->required();
  p->add_option("--criterion", pairs.criterion, "tabulated or printed")->capture_default_str();
  p->add_option("--out", pairs.out, "Output TSV file (default stdout)");

  EncodeArgs encode;
  auto* e = app.add_subcommand("encode", "Encode a binary code into a DNA code and check the predictions");
  e->add_option("--code", encode.code, "Named code: repetitionN, hamming74, golay23, rm,R,M");
  e->add_option("--code-file", encode.code_file, "Binary code file, one 0/1 word per line");
  e->add_option("--ell", encode.ell, "Block length")->required();
  e->add_option("--pair", encode.pair, "Blocks X,Y (default: first valid pair)");
  e->add_option("--h0", encode.h0, "Initial block h(0): x, xc, y or yc")->capture_default_str();
  e->add_flag("--allow-partial", encode.allow_partial, "Accept a pair that is not fully valid");
  e->add_option("--workers", encode.workers, "Worker threads");
  e->add_option("--out", encode.out, "Output DNA code file");
  e->add_option("--report", encode.report, "Output JSON report (default stdout)");
  e->add_flag("--timing", encode.timing, "Record wall time in the manifest");

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "Recompute a reference table and diff it against published values");
  t->add_option("--which", tables.which, "bounds, pairs or params")->required();
  t->add_option("--n-max", tables.n_max, "Largest n for bounds")->capture_default_str();
  t->add_option("--trials", tables.trials, "Trials per bounds row")->capture_default_str();
  t->add_option("--seed", tables.seed, "Master seed")->capture_default_str();
  t->add_option("--law", tables.law, "Subset size law")->capture_default_str();
  t->add_option("--workers", tables.workers, "Worker threads");
  t->add_option("--out", tables.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  }

  try {
    if (*s) return cmd_seeds(seeds, out);
    if (*se) return cmd_search(search, out);
    if (*v) return cmd_verify(verify, out);
    if (*p) return cmd_pairs(pairs, out);
    if (*e) return cmd_encode(encode, out);
    if (*t) return cmd_tables(tables, out);
  } catch (const ConstraintError& ex) {
    err << "error: " << ex.what() << "\n";
    return kConstraintFailure;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  } catch (const RefusedError& ex) {
    err << "refused: " << ex.what() << " (required " << ex.required() << ")\n";
    return kUsageError;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dnacodes"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dnacodes::cli
