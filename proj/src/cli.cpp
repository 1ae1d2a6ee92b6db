#include "tuvote/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tuvote/egalitarian.hpp"
#include "tuvote/formulate.hpp"
#include "tuvote/model.hpp"
#include "tuvote/oracle.hpp"
#include "tuvote/simplex.hpp"
#include "tuvote/structure.hpp"

namespace tuvote::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long micros() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

struct RuleOptions {
  std::string rule = "cc";
  std::size_t k = 1;
  std::string weights = "borda";
  std::string owa = "harmonic";
};

struct Flags {
  bool audit = false;
  bool strict = false;
  bool recognize = false;
  bool no_timings = false;
};

struct LoadedInput {
  std::string path;
  std::string digest;
  ProfileFormat format = ProfileFormat::ranked;
  std::optional<Profile> ranked;
  std::optional<ApprovalProfile> approval;

  std::size_t num_alternatives() const {
    return ranked ? ranked->num_alternatives() : approval->num_alternatives();
  }
  std::size_t num_voters() const { return ranked ? ranked->num_voters() : approval->num_voters(); }
  const std::vector<std::string>& alternatives() const {
    return ranked ? ranked->alternatives() : approval->alternatives();
  }
  // Approval ballots read as dichotomous weak orders when a ranked view is needed.
  Profile as_profile() const { return ranked ? *ranked : approval->to_profile(); }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// Approval files hold one braced set per voter and never a '>'.
ProfileFormat detect_format(std::string_view text) {
  bool braces = text.find('{') != std::string_view::npos;
  bool chains = text.find('>') != std::string_view::npos;
  return braces && !chains ? ProfileFormat::approval : ProfileFormat::ranked;
}

LoadedInput load_profile(const InputOptions& opts) {
  if (opts.path.empty()) throw UsageError("--input is required");
  LoadedInput in;
  in.path = opts.path;
  std::string text = read_file(opts.path);
  in.digest = input_digest(text);
  if (opts.format == "ranked") {
    in.format = ProfileFormat::ranked;
  } else if (opts.format == "approval") {
    in.format = ProfileFormat::approval;
  } else {
    in.format = detect_format(text);
  }
  if (in.format == ProfileFormat::ranked) {
    in.ranked = parse_ranked_profile(text);
  } else {
    in.approval = parse_approval_profile(text);
  }
  return in;
}

std::string format_name(ProfileFormat f) { return f == ProfileFormat::ranked ? "ranked" : "approval"; }

Json input_json(const LoadedInput& in) {
  return Json{{"path", in.path},
              {"digest", "fnv1a64:" + in.digest},
              {"format", format_name(in.format)},
              {"alternatives", in.num_alternatives()},
              {"voters", in.num_voters()}};
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json names_json(const std::vector<std::string>& names, const std::vector<AltIndex>& indices) {
  Json out = Json::array();
  for (auto c : indices) out.push_back(names.at(c));
  return out;
}

Json voters_json(const std::vector<VoterIndex>& voters) {
  Json out = Json::array();
  for (auto i : voters) out.push_back(i + 1);
  return out;
}

ScoringVector make_weights(const std::string& text, std::size_t m) {
  if (text == "borda") return ScoringVector::borda(m);
  if (text == "plurality" || text == "approval") return ScoringVector::plurality(m);
  return ScoringVector(parse_rational_list(text));
}

OwaVector make_owa(const std::string& text, std::size_t k) {
  if (text == "harmonic") return OwaVector::harmonic(k);
  if (text == "constant") return OwaVector::constant(k);
  if (text == "first") return OwaVector::first(k);
  auto values = parse_rational_list(text);
  if (values.size() != k) {
    throw UsageError("--owa lists " + std::to_string(values.size()) + " weights but --k is " + std::to_string(k));
  }
  return OwaVector(std::move(values));
}

RuleSpec make_rule(const RuleOptions& opts, const LoadedInput& in) {
  const std::size_t m = in.num_alternatives();
  if (opts.k < 1 || opts.k > m) {
    throw UsageError("--k must lie in 1.." + std::to_string(m));
  }
  if (opts.rule == "cc") return RuleSpec{CcRule{make_weights(opts.weights, m)}, opts.k};
  if (opts.rule == "pav") {
    if (in.format != ProfileFormat::approval) throw UsageError("--rule pav needs approval input");
    return RuleSpec{PavRule{make_owa(opts.owa, opts.k)}, opts.k};
  }
  if (opts.rule == "owa") return RuleSpec{OwaRule{make_weights(opts.weights, m), make_owa(opts.owa, opts.k)}, opts.k};
  throw UsageError("unknown rule '" + opts.rule + "'");
}

Json rule_json(const RuleSpec& spec) {
  Json out{{"name", spec.name()}, {"k", spec.k}};
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CcRule>) {
          out["weights"] = rationals_json(r.w.values());
        } else if constexpr (std::is_same_v<T, PavRule>) {
          out["owa"] = rationals_json(r.alpha.values());
        } else {
          out["weights"] = rationals_json(r.w.values());
          out["owa"] = rationals_json(r.alpha.values());
        }
      },
      spec.rule);
  return out;
}

Json recognition_json(const LoadedInput& in) {
  Json out;
  if (in.approval) {
    auto axis = is_candidate_interval(*in.approval);
    out["candidate_interval"] = axis ? names_json(in.alternatives(), *axis) : Json();
    return out;
  }
  auto axis = is_single_peaked(*in.ranked);
  out["single_peaked"] = axis ? names_json(in.alternatives(), *axis) : Json();
  if (in.ranked->all_linear()) {
    auto ordering = is_single_crossing(*in.ranked);
    out["single_crossing"] = ordering ? voters_json(*ordering) : Json();
  } else {
    out["single_crossing"] = Json();
    out["single_crossing_note"] = "not tested: some voter has ties";
  }
  return out;
}

Json lp_json(const LPSolution& lp) {
  Json out{{"status", to_string(lp.status)}, {"pivots", lp.pivots}};
  out["objective"] = lp.status == LpStatus::optimal ? Json(to_string(lp.objective)) : Json();
  return out;
}

void add_timings(Json& report, const Flags& flags, Json timings) {
  if (!flags.no_timings) report["timings"] = std::move(timings);
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

int finish(std::ostream& out, const Json& report, const Flags& flags, bool mismatch) {
  emit(out, report);
  return flags.audit && flags.strict && mismatch ? kExitMismatch : kExitOk;
}

// ---- solve ----

int cmd_solve(const InputOptions& io, const RuleOptions& ro, const Flags& flags, const std::string& emit_lp,
              std::ostream& out) {
  LoadedInput in = load_profile(io);
  RuleSpec spec = make_rule(ro, in);

  Json report{{"command", "solve"}, {"input", input_json(in)}, {"rule", rule_json(spec)}};
  Json timings;
  if (flags.recognize) {
    Stopwatch sw;
    report["recognition"] = recognition_json(in);
    timings["recognition_micros"] = sw.micros();
  }

  IPInstance inst = in.approval ? committee_ip(spec, *in.approval) : committee_ip(spec, *in.ranked);
  if (!emit_lp.empty()) write_file(emit_lp, to_lp_format(inst));

  Stopwatch sw;
  SolveReport sr = solve_ip(inst);
  timings["solve_micros"] = sw.micros();

  report["status"] = to_string(sr.final.status);
  Committee committee;
  if (sr.extracted && sr.extracted->committee) {
    committee = *sr.extracted->committee;
    report["objective"] = to_string(sr.extracted->objective);
    report["committee"] = names_json(in.alternatives(), committee);
  } else {
    report["objective"] = Json();
    report["committee"] = Json();
  }
  report["lp_integral"] = sr.lp_integral;
  report["lp"] = lp_json(sr.lp);
  report["branch_nodes"] = sr.branch_nodes;
  report["total_pivots"] = sr.total_pivots;
  report["variables"] = inst.variables.size();
  report["constraints"] = inst.constraints.size();

  bool mismatch = false;
  if (flags.audit) {
    Stopwatch osw;
    Json oracle;
    try {
      OracleResult res = in.approval ? brute_force_committee(spec, *in.approval) : brute_force_committee(spec, *in.ranked);
      bool in_argmax = std::find(res.argmax.begin(), res.argmax.end(), committee) != res.argmax.end();
      bool match = sr.extracted && sr.extracted->objective == res.best_value && in_argmax;
      oracle["value"] = to_string(res.best_value);
      oracle["argmax_size"] = res.argmax.size();
      oracle["committee_in_argmax"] = in_argmax;
      oracle["match"] = match;
      mismatch = !match;
    } catch (const std::length_error& e) {
      oracle["skipped"] = e.what();
    }
    report["oracle"] = std::move(oracle);
    timings["oracle_micros"] = osw.micros();
  }
  add_timings(report, flags, std::move(timings));
  return finish(out, report, flags, mismatch);
}

// ---- young ----

int cmd_young(const InputOptions& io, const std::string& candidate, const Flags& flags, const std::string& emit_lp,
              std::ostream& out) {
  LoadedInput in = load_profile(io);
  Profile profile = in.as_profile();
  if (candidate.empty()) throw UsageError("--candidate is required");
  AltIndex target = profile.index_of(candidate);
  const std::size_t n = profile.num_voters();

  Json report{{"command", "young"}, {"input", input_json(in)}, {"candidate", candidate}};
  Json timings;
  std::optional<VoterOrdering> ordering;
  if (flags.recognize) {
    Stopwatch sw;
    report["recognition"] = recognition_json(in);
    if (profile.all_linear()) ordering = is_single_crossing(profile);
    timings["recognition_micros"] = sw.micros();
  }

  IPInstance inst = young_ip(profile, target);
  if (!emit_lp.empty()) write_file(emit_lp, to_lp_format(inst));
  Stopwatch sw;
  SolveReport sr = solve_ip(inst);
  timings["solve_micros"] = sw.micros();

  const bool feasible = sr.extracted.has_value();
  std::size_t ip_score = 0;
  report["status"] = to_string(sr.final.status);
  if (feasible) {
    const auto& deleted = *sr.extracted->deleted_voters;
    report["ip_objective"] = to_string(sr.extracted->objective);
    report["deleted_voters"] = voters_json(deleted);
    ip_score = n - deleted.size();
    report["score"] = ip_score;
  } else {
    report["ip_objective"] = Json();
    report["deleted_voters"] = Json();
    report["score"] = 0;
    report["note"] = "score undefined; by convention 0";
  }
  report["lp_integral"] = sr.lp_integral;
  report["lp"] = lp_json(sr.lp);
  report["branch_nodes"] = sr.branch_nodes;
  report["total_pivots"] = sr.total_pivots;

  Json warnings = Json::array();
  bool mismatch = false;
  if (flags.audit) {
    Stopwatch osw;
    Json oracle;
    if (n <= kMaxYoungOracleVoters) {
      YoungScore ys = young_score_bruteforce(profile, target);
      bool match = ys.score == ip_score;
      oracle["score"] = ys.score;
      oracle["witness"] = voters_json(ys.witness);
      if (ordering) oracle["median_score"] = young_score_median(profile, *ordering, target);
      oracle["match"] = match;
      mismatch = !match;
      if (!match) {
        std::string deletions = feasible ? to_string(sr.extracted->objective) : "none";
        warnings.push_back("formulation gap: the IP deletes " + deletions + " of " + std::to_string(n) +
                           " voters but exhaustive search gives Young score " + std::to_string(ys.score));
      }
    } else {
      oracle["skipped"] = "more than " + std::to_string(kMaxYoungOracleVoters) + " voters";
    }
    report["oracle"] = std::move(oracle);
    timings["oracle_micros"] = osw.micros();
  }
  report["warnings"] = std::move(warnings);
  add_timings(report, flags, std::move(timings));
  return finish(out, report, flags, mismatch);
}

// ---- egal ----

int cmd_egal(const InputOptions& io, const RuleOptions& ro, const Flags& flags, std::ostream& out) {
  LoadedInput in = load_profile(io);
  RuleSpec spec = make_rule(ro, in);
  if (std::holds_alternative<OwaRule>(spec.rule)) throw UsageError("egal supports --rule cc or pav");

  Json report{{"command", "egal"}, {"input", input_json(in)}, {"rule", rule_json(spec)}};
  Json timings;
  Stopwatch sw;
  EgalitarianResult res = in.approval ? egalitarian_solve(spec, *in.approval) : egalitarian_solve(spec, *in.ranked);
  timings["solve_micros"] = sw.micros();

  report["level"] = to_string(res.level);
  report["committee"] = names_json(in.alternatives(), res.committee);
  Json probes = Json::array();
  bool all_integral = true;
  for (const auto& p : res.probes) {
    probes.push_back({{"level", to_string(p.level)},
                      {"feasible", p.feasible},
                      {"lp_status", to_string(p.lp_status)},
                      {"lp_integral", p.lp_integral},
                      {"branch_nodes", p.branch_nodes}});
    if (p.lp_status == LpStatus::optimal && !p.lp_integral) all_integral = false;
  }
  report["probes"] = std::move(probes);
  report["relaxations_integral"] = all_integral;

  bool mismatch = false;
  if (flags.audit) {
    Stopwatch osw;
    Json oracle;
    try {
      OracleResult o =
          in.approval ? brute_force_egalitarian(spec, *in.approval) : brute_force_egalitarian(spec, *in.ranked);
      bool in_argmax = std::find(o.argmax.begin(), o.argmax.end(), res.committee) != o.argmax.end();
      bool match = o.best_value == res.level && in_argmax;
      oracle["value"] = to_string(o.best_value);
      oracle["committee_in_argmax"] = in_argmax;
      oracle["match"] = match;
      mismatch = !match;
    } catch (const std::length_error& e) {
      oracle["skipped"] = e.what();
    }
    report["oracle"] = std::move(oracle);
    timings["oracle_micros"] = osw.micros();
  }
  add_timings(report, flags, std::move(timings));
  return finish(out, report, flags, mismatch);
}

// ---- recognize ----

int cmd_recognize(const InputOptions& io, const Flags& flags, std::ostream& out) {
  LoadedInput in = load_profile(io);
  Json report{{"command", "recognize"}, {"input", input_json(in)}};
  Stopwatch sw;
  Json recognition = recognition_json(in);
  for (auto& [key, value] : recognition.items()) report[key] = value;
  add_timings(report, flags, Json{{"recognition_micros", sw.micros()}});
  emit(out, report);
  return kExitOk;
}

// ---- gen ----

struct GenOptions {
  std::string kind = "sp";
  std::size_t m = 5;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenOptions& g, std::ostream& out) {
  if (g.m < 1 || g.n < 1) throw UsageError("--m and --n must be positive");
  std::string text;
  Json report{{"command", "gen"}, {"kind", g.kind}, {"m", g.m}, {"n", g.n}, {"seed", g.seed}};
  if (g.kind == "sp") {
    auto s = generate_single_peaked(g.m, g.n, g.seed);
    text = serialize(s.profile);
    report["axis"] = names_json(s.profile.alternatives(), s.axis);
  } else if (g.kind == "sc") {
    auto s = generate_single_crossing(g.m, g.n, g.seed);
    text = serialize(s.profile);
    report["ordering"] = voters_json(s.ordering);
  } else if (g.kind == "ci") {
    auto s = generate_candidate_interval(g.m, g.n, g.seed);
    text = serialize(s.profile);
    report["axis"] = names_json(s.profile.alternatives(), s.axis);
  } else if (g.kind == "ic") {
    text = serialize(generate_impartial_culture(g.m, g.n, g.seed));
  } else if (g.kind == "approval") {
    text = serialize(generate_random_approval(g.m, g.n, g.seed));
  } else {
    throw UsageError("unknown kind '" + g.kind + "'");
  }
  if (g.output.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(g.output, text);
  report["output"] = g.output;
  report["digest"] = "fnv1a64:" + input_digest(text);
  emit(out, report);
  return kExitOk;
}

// ---- matrix ----

SignedMatrix load_matrix(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  return parse_matrix(read_file(path));
}

Json matrix_rows_json(const SignedMatrix& m) { return Json(m.to_rows()); }

int cmd_matrix_tu(const std::string& path, std::size_t budget, bool reduce, const Flags& flags, std::ostream& out) {
  SignedMatrix m = load_matrix(path);
  Json report{{"command", "matrix tu"}, {"input", path}, {"rows", m.rows()}, {"cols", m.cols()}};
  Stopwatch sw;
  if (reduce) {
    m = tu_reduce(m);
    report["reduced"] = Json{{"rows", m.rows()}, {"cols", m.cols()}};
  }
  TuResult res = is_totally_unimodular(m, budget);
  report["budget"] = budget;
  report["verdict"] = to_string(res.verdict);
  report["transposed"] = res.transposed;
  if (res.verdict == TuVerdict::not_tu) {
    report["violating_subset"] = res.violating_subset;
    report["witness"] = Json{{"rows", res.witness_rows},
                             {"cols", res.witness_cols},
                             {"det", res.witness_det},
                             {"matrix", matrix_rows_json(res.witness)}};
  }
  add_timings(report, flags, Json{{"micros", sw.micros()}});
  emit(out, report);
  return kExitOk;
}

int cmd_matrix_c1p(const std::string& path, const Flags& flags, std::ostream& out) {
  BinaryMatrix m = to_binary(load_matrix(path));
  Json report{{"command", "matrix c1p"}, {"input", path}, {"rows", m.rows()}, {"cols", m.cols()}};
  Stopwatch sw;
  auto order = has_c1p(m);
  report["c1p"] = order.has_value();
  report["order"] = order ? Json(*order) : Json();
  add_timings(report, flags, Json{{"micros", sw.micros()}});
  emit(out, report);
  return kExitOk;
}

int cmd_matrix_profile(const std::string& which, const InputOptions& io, bool ones_row, std::ostream& out) {
  LoadedInput in = load_profile(io);
  BinaryMatrix b;
  if (which == "sp") {
    b = build_sp_matrix(in.as_profile());
  } else if (which == "sc") {
    b = build_sc_matrix(in.as_profile());
  } else {
    if (!in.approval) throw UsageError("matrix ballots needs approval input");
    b = build_ballot_matrix(*in.approval);
  }
  if (ones_row) b.append_row(std::vector<std::uint8_t>(b.cols(), 1), "ones");
  out << serialize(SignedMatrix::from_binary(b));
  return kExitOk;
}

int cmd_matrix_ip(const InputOptions& io, const RuleOptions& ro, const std::string& candidate, std::ostream& out) {
  LoadedInput in = load_profile(io);
  IPInstance inst;
  if (!candidate.empty()) {
    Profile p = in.as_profile();
    inst = young_ip(p, p.index_of(candidate));
  } else {
    RuleSpec spec = make_rule(ro, in);
    inst = in.approval ? committee_ip(spec, *in.approval) : committee_ip(spec, *in.ranked);
  }
  out << serialize(inst.constraint_matrix());
  return kExitOk;
}

// ---- bench ----

struct BenchOptions {
  std::string kind = "sp";
  std::size_t m = 6;
  std::size_t n = 10;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchOptions& b, const RuleOptions& ro, std::ostream& out) {
  if (b.m < 1 || b.n < 1) throw UsageError("--m and --n must be positive");
  const bool young = ro.rule == "young";
  const bool approval_kind = b.kind == "ci" || b.kind == "approval";
  if (b.kind != "sp" && b.kind != "sc" && b.kind != "ic" && !approval_kind) {
    throw UsageError("unknown kind '" + b.kind + "'");
  }
  if (young && approval_kind) throw UsageError("--rule young needs a ranked kind");
  if (ro.rule == "pav" && !approval_kind) throw UsageError("--rule pav needs --kind ci or approval");

  out << "m,n,k,rule,lp_integral,pivots,branch_nodes,micros\n";
  for (std::size_t t = 0; t < b.trials; ++t) {
    const std::uint64_t seed = b.seed + t;
    LoadedInput in;
    in.format = approval_kind ? ProfileFormat::approval : ProfileFormat::ranked;
    if (b.kind == "sp") in.ranked = generate_single_peaked(b.m, b.n, seed).profile;
    else if (b.kind == "sc") in.ranked = generate_single_crossing(b.m, b.n, seed).profile;
    else if (b.kind == "ic") in.ranked = generate_impartial_culture(b.m, b.n, seed);
    else if (b.kind == "ci") in.approval = generate_candidate_interval(b.m, b.n, seed).profile;
    else in.approval = generate_random_approval(b.m, b.n, seed);

    IPInstance inst;
    std::string rule_name = "young";
    std::size_t k = 0;
    if (young) {
      inst = young_ip(*in.ranked, 0);
    } else {
      RuleSpec spec = make_rule(ro, in);
      inst = in.approval ? committee_ip(spec, *in.approval) : committee_ip(spec, *in.ranked);
      rule_name = ro.rule;
      k = spec.k;
    }
    Stopwatch sw;
    SolveReport sr = solve_ip(inst);
    long long micros = sw.micros();
    out << b.m << ',' << b.n << ',' << k << ',' << rule_name << ',' << (sr.lp_integral ? "true" : "false") << ','
        << sr.total_pivots << ',' << sr.branch_nodes << ',' << micros << '\n';
  }
  return kExitOk;
}

void add_input(CLI::App* app, InputOptions& io) {
  app->add_option("--input,-i", io.path, "Profile file ('-' for standard input)")->required();
  app->add_option("--format", io.format, "Profile format")
      ->check(CLI::IsMember({"auto", "ranked", "approval"}));
}

void add_rule(CLI::App* app, RuleOptions& ro, bool required) {
  auto* rule = app->add_option("--rule", ro.rule, "cc, pav or owa")->check(CLI::IsMember({"cc", "pav", "owa"}));
  if (required) rule->required();
  app->add_option("--k", ro.k, "Committee size");
  app->add_option("--weights", ro.weights, "borda, plurality, approval or comma-separated rationals");
  app->add_option("--owa", ro.owa, "harmonic, constant, first or comma-separated rationals");
}

void add_audit(CLI::App* app, Flags& flags) {
  auto* audit = app->add_flag("--audit", flags.audit, "Compare against brute-force oracles");
  app->add_flag("--strict", flags.strict, "Exit 3 when the audit finds a mismatch")->needs(audit);
}

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Committee selection and Young scores via integer programs solved relaxation-first"};
  app.name("tuvote");
  app.require_subcommand(1);

  InputOptions io;
  RuleOptions ro;
  Flags flags;
  std::string emit_lp;
  std::string candidate;
  GenOptions gen;
  BenchOptions bench;
  std::string matrix_path;
  std::size_t budget = kDefaultTuRowBudget;
  bool reduce = false;
  bool ones_row = false;

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random profile");
  gen_cmd->add_option("--kind", gen.kind, "sp, sc, ci, ic or approval")
      ->check(CLI::IsMember({"sp", "sc", "ci", "ic", "approval"}));
  gen_cmd->add_option("--m", gen.m, "Number of alternatives");
  gen_cmd->add_option("--n", gen.n, "Number of voters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--output,-o", gen.output, "Write the profile here and print a JSON report");

  auto* rec_cmd = app.add_subcommand("recognize", "Test for single-peaked, single-crossing or interval structure");
  add_input(rec_cmd, io);
  rec_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");

  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal committee");
  add_input(solve_cmd, io);
  add_rule(solve_cmd, ro, true);
  add_audit(solve_cmd, flags);
  solve_cmd->add_flag("--recognize", flags.recognize, "Also report recognition results");
  solve_cmd->add_option("--emit-lp", emit_lp, "Write the integer program in LP format");
  solve_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");

  auto* young_cmd = app.add_subcommand("young", "Compute the Young score of a candidate");
  add_input(young_cmd, io);
  young_cmd->add_option("--candidate", candidate, "Target alternative")->required();
  add_audit(young_cmd, flags);
  young_cmd->add_flag("--recognize", flags.recognize, "Also report recognition results");
  young_cmd->add_option("--emit-lp", emit_lp, "Write the integer program in LP format");
  young_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");

  auto* egal_cmd = app.add_subcommand("egal", "Compute an egalitarian (max-min) committee");
  add_input(egal_cmd, io);
  add_rule(egal_cmd, ro, true);
  add_audit(egal_cmd, flags);
  egal_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");

  auto* matrix_cmd = app.add_subcommand("matrix", "Matrix structure tools");
  matrix_cmd->require_subcommand(1);
  auto* tu_cmd = matrix_cmd->add_subcommand("tu", "Total unimodularity test");
  tu_cmd->add_option("--input,-i", matrix_path, "Matrix file")->required();
  tu_cmd->add_option("--budget", budget, "Largest row count tested exhaustively");
  tu_cmd->add_flag("--reduce", reduce, "Apply TU-preserving reductions first");
  tu_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");
  auto* c1p_cmd = matrix_cmd->add_subcommand("c1p", "Consecutive-ones test");
  c1p_cmd->add_option("--input,-i", matrix_path, "Matrix file")->required();
  c1p_cmd->add_flag("--no-timings", flags.no_timings, "Omit timing fields");
  std::vector<std::pair<std::string, CLI::App*>> profile_matrices;
  for (const char* name : {"sp", "sc", "ballots"}) {
    auto* sub = matrix_cmd->add_subcommand(name, std::string("Print the ") + name + " matrix of a profile");
    add_input(sub, io);
    sub->add_flag("--ones-row", ones_row, "Append an all-ones row");
    profile_matrices.emplace_back(name, sub);
  }
  auto* ip_cmd = matrix_cmd->add_subcommand("ip", "Print the constraint matrix of an integer program");
  add_input(ip_cmd, io);
  add_rule(ip_cmd, ro, false);
  ip_cmd->add_option("--candidate", candidate, "Young program for this alternative instead of a committee rule");

  auto* bench_cmd = app.add_subcommand("bench", "Solve generated instances and print CSV timings");
  bench_cmd->add_option("--kind", bench.kind, "sp, sc, ci, ic or approval");
  bench_cmd->add_option("--rule", ro.rule, "cc, pav, owa or young")
      ->check(CLI::IsMember({"cc", "pav", "owa", "young"}));
  bench_cmd->add_option("--k", ro.k, "Committee size");
  bench_cmd->add_option("--weights", ro.weights, "Scoring vector");
  bench_cmd->add_option("--owa", ro.owa, "OWA vector");
  bench_cmd->add_option("--m", bench.m, "Number of alternatives");
  bench_cmd->add_option("--n", bench.n, "Number of voters");
  bench_cmd->add_option("--trials", bench.trials, "Number of instances");
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first trial; trial t uses seed + t");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (rec_cmd->parsed()) return cmd_recognize(io, flags, out);
    if (solve_cmd->parsed()) return cmd_solve(io, ro, flags, emit_lp, out);
    if (young_cmd->parsed()) return cmd_young(io, candidate, flags, emit_lp, out);
    if (egal_cmd->parsed()) return cmd_egal(io, ro, flags, out);
    if (tu_cmd->parsed()) return cmd_matrix_tu(matrix_path, budget, reduce, flags, out);
    if (c1p_cmd->parsed()) return cmd_matrix_c1p(matrix_path, flags, out);
    for (auto& [name, sub] : profile_matrices) {
      if (sub->parsed()) return cmd_matrix_profile(name, io, ones_row, out);
    }
    if (ip_cmd->parsed()) return cmd_matrix_ip(io, ro, candidate, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, ro, out);
  } catch (const tuvote::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tuvote::cli
