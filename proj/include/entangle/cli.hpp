#pragma once

#include "entangle/certification.hpp"
#include "entangle/dsequence.hpp"
#include "entangle/json_io.hpp"
#include "entangle/minors.hpp"
#include "entangle/reproduce.hpp"
#include "entangle/structured.hpp"
#include "entangle/subspace.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace entangle::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

inline constexpr std::array<std::string_view, 8> kCommands{"dseq",           "minor",   "minors",   "certify",
                                                           "subspace-build", "subspace-verify", "witness",
                                                           "reproduce"};

/// Everything a run depends on. Two equal configs produce byte-identical
/// reports.
struct RunConfig {
  std::string command;
  std::string format = "json";
  std::string out_path;
  std::size_t threads = 0;  // 0: ENTANGLE_MINORS_THREADS or hardware default

  // Rational parameters are kept as text until run() so parse errors are
  // reported before any computation.
  std::string family = "E";
  std::string a = "3";
  std::string b = "1";
  long n = 1;
  long m = 0;
  long nmax = 10;
  long k = 0;  // 0: claimed minimum rank of the basis
  std::vector<std::size_t> delete_rows;
  std::string spec_json;
  std::string method = "recurrence";
  bool min_support = false;

  std::string construction = "alternating";
  std::string which;
  std::string pattern;
  std::string mode = "certificate";
  std::string grid = "-2,-1,0,1,2";
  std::uint64_t budget = 10'000'000;
  std::size_t samples = 1000;
  long height = 5;
  std::uint64_t seed = 1;

  std::string inject_a;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline Rational param(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

inline std::size_t positive(long v, const char* name) {
  if (v < 1) throw UsageError(std::string("--") + name + " must be >= 1");
  return static_cast<std::size_t>(v);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << csv_escape(prefix) << ',' << csv_escape(j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

inline std::string deleted_text(const Json& deleted) {
  std::string s;
  for (std::size_t i = 0; i < deleted.size(); ++i) s += (i ? " " : "") + std::to_string(deleted[i].get<std::size_t>());
  return s;
}

/// CSV rendering: minors, d-sequences and reproduce tables get dedicated
/// column layouts; everything else is flattened to key,value lines.
inline std::string to_csv(const std::string& command, const Json& j) {
  std::ostringstream out;
  if (command == "minors") {
    out << "deleted,value\n";
    for (const auto& e : j.at("minors")) out << deleted_text(e.at("deleted")) << ',' << e.at("value").get<std::string>() << '\n';
  } else if (command == "dseq" && j.contains("values")) {
    out << "n,value\n";
    for (const auto& e : j.at("values")) out << e.at("n").get<long>() << ',' << e.at("value").get<std::string>() << '\n';
  } else if (command == "reproduce") {
    out << "id,pass,expected,computed\n";
    for (const auto& r : j.at("rows"))
      out << csv_escape(r.at("id").get<std::string>()) << ',' << (r.at("pass").get<bool>() ? "true" : "false") << ','
          << csv_escape(r.at("expected").get<std::string>()) << ',' << csv_escape(r.at("computed").get<std::string>())
          << '\n';
  } else {
    out << "key,value\n";
    flatten(j, "", out);
  }
  return out.str();
}

struct Outcome {
  Json report;
  int exit_code = kExitVerified;
  std::string note;  // printed to stderr
};

inline std::size_t thread_count(const RunConfig& c) { return c.threads ? c.threads : default_thread_count(); }

inline BandedFamily family_from(const RunConfig& c) {
  BandedFamily f;
  try {
    f.family = parse_family(c.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  f.a = param(c.a, "a");
  f.b = param(c.b, "b");
  f.n = positive(c.n, "n");
  return f;
}

inline Outcome run_dseq(const RunConfig& c) {
  const Rational a = param(c.a, "a");
  const Rational b = param(c.b, "b");
  if (c.nmax < 0) throw UsageError("--nmax must be >= 0");
  if (c.method == "recurrence") return {dsequence_json(d_sequence_recurrence(a, b, c.nmax), "recurrence")};
  if (c.method != "series" && c.method != "closed" && c.method != "all")
    throw UsageError("--method must be recurrence, series, closed or all");
  if (b != 1) throw UsageError("--method " + c.method + " requires b = 1");
  if (c.method == "series") return {dsequence_json(d_sequence_series(a, c.nmax), "series")};
  std::vector<Rational> closed;
  bool closed_ok = true;
  try {
    for (long k = 0; k <= c.nmax; ++k) closed.push_back(d_closed_form(a, k));
  } catch (const RepeatedRootError&) {
    if (c.method == "closed") throw;
    closed_ok = false;
  }
  if (c.method == "closed") {
    closed.insert(closed.begin(), Rational{0});
    return {dsequence_json(DSequence(a, 1, closed), "closed", 0)};
  }
  const auto rec = d_sequence_recurrence(a, 1, c.nmax);
  const auto ser = d_sequence_series(a, c.nmax);
  Json rows = Json::array();
  bool agree = true;
  for (long k = 0; k <= c.nmax; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const bool same = rec[k] == ser[k] && (!closed_ok || rec[k] == closed[i]);
    agree = agree && same;
    rows.push_back(Json{{"n", k},
                        {"recurrence", rational_json(rec[k])},
                        {"series", rational_json(ser[k])},
                        {"closed", closed_ok ? rational_json(closed[i]) : Json(nullptr)},
                        {"agree", same}});
  }
  return {Json{{"a", rational_json(a)}, {"method", "all"}, {"agree", agree}, {"rows", rows}},
          agree ? kExitVerified : kExitCounterexample};
}

inline Outcome run_minor(const RunConfig& c) {
  FamilyRequest req;
  if (!c.spec_json.empty()) {
    try {
      req = family_request_from_json(Json::parse(c.spec_json));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("--spec: ") + e.what());
    }
  } else {
    req.spec = family_from(c);
    req.delete_rows = c.delete_rows;
  }
  const ExactMatrix m = deleted_variant(req.spec, req.delete_rows);
  Json j{{"spec", family_json(req.spec)}, {"deleted", req.delete_rows}, {"matrix", matrix_json(m)}};
  j["determinant"] = m.square() ? rational_json(det(m)) : Json(nullptr);
  j["rank"] = rank(m);
  const auto kv = kernel_vector(m);
  j["kernel_vector"] = kv ? vector_json(*kv) : Json(nullptr);
  if (req.spec.family == Family::E && req.delete_rows.size() == 1) {
    const std::size_t k = req.delete_rows.front();
    j["product_formula"] = rational_json(minor_E_product_formula(req.spec.a, req.spec.n, k, req.spec.b));
    if (req.spec.b == 0) j["b_zero_formula"] = rational_json(minor_E_b_zero(req.spec.a, req.spec.n, k));
  }
  return {j};
}

inline Outcome run_minors(const RunConfig& c) {
  const BandedFamily spec = family_from(c);
  const ExactMatrix m = build(spec);
  const auto report = all_order_n_minors(m, spec, thread_count(c));
  Json j = minor_report_json(report);
  if (c.min_support) {
    try {
      j["min_support"] = min_support_json(entangle::min_support(m));
    } catch (const RankDeficientError& e) {
      j["min_support"] = Json{{"error", e.what()}};
    }
  }
  return {j, report.all_nonzero ? kExitVerified : kExitCounterexample};
}

inline Outcome run_certify(const RunConfig& c) {
  const Family f = family_from(c).family;
  const Rational a = param(c.a, "a");
  const std::size_t n = positive(c.n, "n");
  const Certificate cert = certify(f, a, n, thread_count(c));
  Outcome o{certificate_json(cert)};
  if (cert.contradicts_theory()) o.note = "THEORY CONTRADICTION: " + describe(cert);
  o.exit_code = cert.verified_exhaustively && !cert.contradicts_theory() ? kExitVerified : kExitCounterexample;
  return o;
}

inline std::vector<Rational> pattern_from(const std::string& text) {
  std::vector<Rational> p;
  for (const auto& part : split(text, ',')) p.push_back(param(part, "pattern"));
  if (p.empty()) throw UsageError("--pattern must list at least one coefficient");
  return p;
}

/// The named construction as a list of (label, basis).
inline std::vector<std::pair<std::string, SubspaceBasis>> constructions(const RunConfig& c) {
  const std::size_t m = positive(c.m, "m");
  const std::size_t n = positive(c.n, "n");
  const std::string& k = c.construction;
  if (k == "pattern") return {{"pattern", build_pattern_subspace(pattern_from(c.pattern), m, n)}};
  const Rational a = param(c.a, "a");
  if (k == "alternating") return {{"alternating", build_alternating_subspace(a, m, n)}};
  if (k == "positive") return {{"positive", build_positive_subspace(a, m, n)}};
  if (k == "nested") {
    auto p = build_nested_pair(a, m, n);
    return {{"outer", std::move(p.outer)}, {"inner", std::move(p.inner)}};
  }
  if (k == "chain") {
    auto ch = build_two_term_chain(a, m, n);
    return {{"S", std::move(ch.s)}, {"T", std::move(ch.t)}, {"U", std::move(ch.u)}};
  }
  throw UsageError("--construction must be pattern, alternating, positive, nested or chain");
}

inline Outcome run_subspace_build(const RunConfig& c) {
  auto parts = constructions(c);
  if (parts.size() == 1) return {subspace_json(parts.front().second)};
  Json j;
  for (const auto& [label, basis] : parts) j[label] = subspace_json(basis);
  Json contain;
  for (std::size_t i = 1; i < parts.size(); ++i)
    contain[parts[i].first + "_in_" + parts[i - 1].first] = containment_check(parts[i].second, parts[i - 1].second);
  j["containment"] = contain;
  return {j};
}

inline Outcome run_subspace_verify(const RunConfig& c) {
  auto parts = constructions(c);
  const SubspaceBasis* basis = nullptr;
  if (parts.size() == 1) {
    basis = &parts.front().second;
  } else {
    for (const auto& [label, b] : parts)
      if (label == c.which) basis = &b;
    if (!basis) {
      std::string labels;
      for (const auto& p : parts) labels += (labels.empty() ? "" : ", ") + p.first;
      throw UsageError("--which must name one of: " + labels);
    }
  }
  VerifyOptions opt;
  try {
    opt.mode = parse_mode(c.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  opt.grid_values.clear();
  for (const auto& v : split(c.grid, ',')) {
    try {
      opt.grid_values.push_back(std::stol(v));
    } catch (const std::exception&) {
      throw UsageError("--grid entries must be integers, got '" + v + "'");
    }
  }
  opt.budget = c.budget;
  opt.random_samples = c.samples;
  opt.random_height = c.height;
  opt.seed = c.seed;
  opt.threads = thread_count(c);
  const std::size_t k = c.k > 0 ? static_cast<std::size_t>(c.k) : basis->claimed_min_rank;
  const Verdict v = verify_min_rank(*basis, k, opt);
  Json j{{"subspace", basis->name},
         {"m", basis->m},
         {"n", basis->n},
         {"pattern", vector_json(basis->pattern)},
         {"dimension", basis->dimension()},
         {"hypothesis", basis->hypothesis},
         {"claim_asserted", basis->claim_asserted}};
  j["verdict"] = verdict_json(v);
  Outcome o{j, v.passed ? kExitVerified : kExitCounterexample};
  if (!v.passed && basis->claim_asserted && k <= basis->claimed_min_rank)
    o.note = "THEORY CONTRADICTION: " + basis->name + " fails minimum rank " + std::to_string(k);
  return o;
}

inline Outcome run_witness(const RunConfig& c) {
  const Rational a = param(c.a, "a");
  auto pair = build_nested_pair(a, positive(c.m, "m"), positive(c.n, "n"));
  try {
    const auto w = find_sr3_witness(pair.outer, pair.inner);
    const auto& g = pair.outer.generators[w.generator_index];
    const TensorVector& v = w.vector;
    return {Json{{"a", rational_json(a)},
                 {"generator_index", w.generator_index},
                 {"antidiagonal", g.antidiagonal},
                 {"window_start_row", g.window_start_row},
                 {"terms", terms_json(v)},
                 {"schmidt_rank", w.schmidt_rank},
                 {"in_outer", containment_check(std::span<const TensorVector>(&v, 1), pair.outer.vectors())},
                 {"in_inner", containment_check(std::span<const TensorVector>(&v, 1), pair.inner.vectors())}}};
  } catch (const std::runtime_error& e) {
    return {Json{{"a", rational_json(a)}, {"error", e.what()}}, kExitCounterexample};
  }
}

inline Outcome run_reproduce(const RunConfig& c) {
  ReproduceOptions opt;
  opt.nmax = c.nmax;
  if (!c.inject_a.empty()) opt.inject_a = param(c.inject_a, "inject-a");
  opt.threads = thread_count(c);
  const auto rows = reproduce(opt);
  Json table = Json::array();
  std::size_t passed = 0;
  for (const auto& r : rows) {
    passed += r.pass ? 1 : 0;
    table.push_back(Json{{"id", r.id},
                         {"description", r.description},
                         {"pass", r.pass},
                         {"expected", r.expected},
                         {"computed", r.computed}});
  }
  Json j{{"nmax", opt.nmax}, {"passed", passed}, {"failed", rows.size() - passed}, {"rows", table}};
  if (opt.inject_a) j["inject_a"] = rational_json(*opt.inject_a);
  return {j, passed == rows.size() ? kExitVerified : kExitCounterexample};
}

inline std::string summary_table(const Json& j) {
  std::ostringstream out;
  for (const auto& r : j.at("rows")) {
    out << (r.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << r.at("id").get<std::string>();
    if (!r.at("pass").get<bool>())
      out << "\n      expected: " << r.at("expected").get<std::string>()
          << "\n      computed: " << r.at("computed").get<std::string>();
    out << '\n';
  }
  out << j.at("passed").get<std::size_t>() << " passed, " << j.at("failed").get<std::size_t>() << " failed\n";
  return out.str();
}

}  // namespace detail

/// Executes one command and writes the report. Returns the exit code:
/// 0 verified, 2 counterexample found, 1 usage or computation error.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv") throw UsageError("--format must be json or csv");
    detail::Outcome o;
    const std::string& cmd = config.command;
    if (cmd == "dseq") o = detail::run_dseq(config);
    else if (cmd == "minor") o = detail::run_minor(config);
    else if (cmd == "minors") o = detail::run_minors(config);
    else if (cmd == "certify") o = detail::run_certify(config);
    else if (cmd == "subspace-build") o = detail::run_subspace_build(config);
    else if (cmd == "subspace-verify") o = detail::run_subspace_verify(config);
    else if (cmd == "witness") o = detail::run_witness(config);
    else if (cmd == "reproduce") o = detail::run_reproduce(config);
    else throw UsageError("unknown command '" + cmd + "'");

    const std::string text = config.format == "csv" ? detail::to_csv(cmd, o.report) : o.report.dump(2) + "\n";
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + config.out_path + "' for writing");
      file << text;
      if (!file) throw std::runtime_error("write to '" + config.out_path + "' failed");
    }
    if (cmd == "reproduce") err << detail::summary_table(o.report);
    if (!o.note.empty()) err << o.note << '\n';
    return o.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

/// Parses argv-style arguments (without the program name) into a RunConfig.
/// Throws UsageError on bad input; --help throws CLI::CallForHelp.
inline RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Exact banded-minor calculus and entangled subspace verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out_path, "write the report to this path instead of stdout");
  app.add_option("--threads", c.threads, "worker threads (default: ENTANGLE_MINORS_THREADS or all cores)");

  auto family_opts = [&](CLI::App* s) {
    s->add_option("--family", c.family, "D, F, E, Etilde, G, B or Btilde");
    s->add_option("--a", c.a, "rational parameter a (p/q or integer)");
    s->add_option("--b", c.b, "rational parameter b");
    s->add_option("--n", c.n, "size parameter n");
  };

  auto* dseq = app.add_subcommand("dseq", "d-sequence of |D_n(a,b)|");
  dseq->add_option("--a", c.a)->required();
  dseq->add_option("--b", c.b);
  dseq->add_option("--nmax", c.nmax)->required();
  dseq->add_option("--method", c.method, "recurrence, series, closed or all");

  auto* minor = app.add_subcommand("minor", "one structured matrix with rows deleted: det, rank, kernel");
  family_opts(minor);
  minor->add_option("--delete", c.delete_rows, "1-based rows to delete");
  minor->add_option("--spec", c.spec_json, R"(JSON spec, e.g. {"family":"E","a":"3","n":5,"delete_rows":[2]})");

  auto* minors = app.add_subcommand("minors", "every order-n minor of a structured matrix");
  family_opts(minors);
  minors->add_flag("--min-support", c.min_support, "also report the minimum column-combination support");

  auto* cert = app.add_subcommand("certify", "check a nonvanishing-minor claim exhaustively");
  family_opts(cert);

  auto subspace_opts = [&](CLI::App* s) {
    s->add_option("--construction", c.construction, "pattern, alternating, positive, nested or chain");
    s->add_option("--a", c.a);
    s->add_option("--m", c.m)->required();
    s->add_option("--n", c.n)->required();
    s->add_option("--pattern", c.pattern, "comma-separated coefficients for --construction pattern");
  };
  auto* build_cmd = app.add_subcommand("subspace-build", "build a pattern subspace basis");
  subspace_opts(build_cmd);
  auto* verify = app.add_subcommand("subspace-verify", "verify the minimum Schmidt rank of a subspace");
  subspace_opts(verify);
  verify->add_option("--which", c.which, "member of a nested/chain construction (outer, inner, S, T, U)");
  verify->add_option("--mode", c.mode, "certificate, grid or random");
  verify->add_option("--k", c.k, "rank to verify (default: claimed minimum)");
  verify->add_option("--grid", c.grid, "comma-separated integer coefficient set");
  verify->add_option("--budget", c.budget, "maximum grid size");
  verify->add_option("--samples", c.samples, "random combinations");
  verify->add_option("--height", c.height, "random numerator/denominator bound");
  verify->add_option("--seed", c.seed, "random seed");

  auto* witness = app.add_subcommand("witness", "Schmidt-rank-3 vector of the outer nested subspace outside the inner one");
  witness->add_option("--a", c.a)->required();
  witness->add_option("--m", c.m)->required();
  witness->add_option("--n", c.n)->required();

  auto* repro = app.add_subcommand("reproduce", "recompute every published example and claim");
  repro->add_flag("--all", "run the whole suite (default)");
  repro->add_option("--nmax", c.nmax, "largest n in sweeps");
  repro->add_option("--inject-a", c.inject_a, "override the parameter a (negative control)");

  std::vector<std::string> argv_storage{"entangle-minors"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.command = app.get_subcommands().front()->get_name();
  return c;
}

/// parse_args + run, with usage errors mapped to exit code 1.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    err << "usage: entangle-minors <command> [options]\ncommands:";
    for (auto c : kCommands) err << ' ' << c;
    err << "\nrun 'entangle-minors <command> --help' for command options\n";
    return kExitVerified;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return run(config, out, err);
}

}  // namespace entangle::cli
