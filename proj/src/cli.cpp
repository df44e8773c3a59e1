#include "goodstein/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "goodstein/claims.hpp"
#include "goodstein/errors.hpp"
#include "goodstein/export.hpp"
#include "goodstein/notation.hpp"
#include "goodstein/ordinals.hpp"

namespace goodstein::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Bad arguments that CLI11 cannot see (ranges, claim lists, seeds).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seed;
  std::string kind = "G";
  std::uint64_t base = 2;
  Budget budget;
  std::string format;
  std::string out_path;
  std::string plot_path;
  std::string in_path;
  std::string seeds;
  std::string claims = "all";
  std::vector<std::uint64_t> u;
  std::vector<std::uint64_t> x;
};

SeqKind kind_of(const Options& o) {
  auto k = parse_seq_kind(o.kind);
  if (!k) throw UsageError("--kind must be G or L");
  return *k;
}

Natural seed_of(const std::string& text) {
  try {
    return parse_natural(text);
  } catch (const Error& e) {
    throw UsageError("bad seed '" + text + "': " + e.what());
  }
}

SeqSpec spec_of(const Options& o) {
  SeqSpec spec{kind_of(o), seed_of(o.seed)};
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::vector<SeqSpec> seed_range(const Options& o) {
  const SeqKind kind = kind_of(o);
  const auto dots = o.seeds.find("..");
  const Natural lo = seed_of(o.seeds.substr(0, dots));
  const Natural hi =
      dots == std::string::npos ? lo : seed_of(o.seeds.substr(dots + 2));
  if (hi < lo) throw UsageError("--seeds range " + o.seeds + " is empty");
  if (hi - lo >= 100000) throw UsageError("--seeds range is too long");
  std::vector<SeqSpec> out;
  for (Natural m = lo; m <= hi; ++m) {
    SeqSpec spec{kind, m};
    try {
      spec.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    out.push_back(spec);
  }
  return out;
}

std::vector<ClaimId> claim_list(const std::string& text) {
  if (text == "all") return {all_claims().begin(), all_claims().end()};
  std::vector<ClaimId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = parse_claim_id(item);
    if (!id) throw UsageError("unknown claim '" + item + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("--claims is empty");
  return out;
}

std::vector<Base> bases(const std::vector<std::uint64_t>& values, std::uint64_t min,
                        const char* flag) {
  std::vector<Base> out;
  for (auto v : values) {
    if (v < min) {
      throw UsageError(std::string(flag) + " values must be at least " +
                       std::to_string(min));
    }
    out.emplace_back(v);
  }
  return out;
}

// Either the --out file or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int outcome_code(const Outcome& outcome, std::ostream& err) {
  err << "outcome: " << to_string(outcome) << '\n';
  return outcome.kind == Outcome::Kind::kBudgetExceeded ? kBudget : kOk;
}

int cmd_rep(const Options& o, std::ostream& out) {
  const Natural m = seed_of(o.seed);
  if (o.base < 2) throw UsageError("--base must be at least 2");
  const HereditaryRep r = decompose(m, Base(o.base));
  const std::string rank = to_decimal(rank_value(r, o.budget));
  if (o.format == "json") {
    ordered_json j;
    j["rep"] = format(r);
    j["base"] = o.base;
    j["value"] = to_decimal(m);
    j["rank"] = rank;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "rep,base,value,rank\n"
        << format(r) << ',' << o.base << ',' << to_decimal(m) << ',' << rank << '\n';
  } else {
    out << format(r) << "\nvalue " << to_decimal(m) << "\nrank " << rank << '\n';
  }
  return kOk;
}

int cmd_seq(const Options& o, std::ostream& out, std::ostream& err) {
  const SeqSpec spec = spec_of(o);
  auto format = parse_export_format(o.format);
  Sink sink(o.out_path, out);
  std::ofstream plot_file;
  std::optional<PlotWriter> plot;
  if (!o.plot_path.empty()) {
    plot_file.open(o.plot_path);
    if (!plot_file) throw UsageError("cannot write " + o.plot_path);
    plot.emplace(plot_file);
  }
  SequenceWriter writer(sink.get(), *format);
  const Outcome outcome = walk(spec, o.budget, [&](const SeqTerm& t) {
    writer.write(t);
    if (plot) plot->write(t);
  });
  writer.finish();
  return outcome_code(outcome, err);
}

int cmd_mirror(const Options& o, std::ostream& out, std::ostream& err) {
  const SeqSpec spec = spec_of(o);
  Sink sink(o.out_path, out);
  std::ostream& os = sink.get();
  MirrorAuditor auditor;
  const bool json = o.format == "json";
  const bool csv = o.format == "csv";
  auto terms = ordered_json::array();
  if (csv) os << "index,ordinal\n";
  const Outcome outcome = walk(spec, o.budget, [&](const SeqTerm& t) {
    auditor.observe(t);
    const std::string ord = to_string(mirror(t.rep));
    if (json) {
      terms.push_back({{"index", t.index}, {"ordinal", ord}});
    } else if (csv) {
      os << t.index << ',' << ord << '\n';
    } else {
      os << t.index << "  " << ord << '\n';
    }
  });
  const DecreaseAudit& audit = auditor.result();
  const bool ok = audit.decreasing && !audit.domination_violation;
  std::string verdict = "Decreasing";
  if (audit.violation) {
    verdict = "Violation at term " + std::to_string(*audit.violation);
  } else if (audit.domination_violation) {
    verdict = "Domination violation at term " +
              std::to_string(*audit.domination_violation);
  }
  if (json) {
    ordered_json j;
    j["terms"] = std::move(terms);
    j["result"] = verdict;
    j["pairs_checked"] = audit.pairs_checked;
    os << j.dump(2) << '\n';
  } else if (!csv) {
    os << verdict << '\n';
  }
  if (!ok) {
    err << "mirror audit: " << verdict << '\n';
    return kMirrorViolation;
  }
  return outcome_code(outcome, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "csv") throw UsageError("verify writes json or text");
  const auto claims = claim_list(o.claims);
  SuiteOptions suite;
  suite.thesis_bases = bases(o.u, 2, "--u");
  suite.sec9_bases = bases(o.x, 3, "--x");
  std::vector<ClaimReport> reports;
  if (!o.in_path.empty()) {
    if (!o.seeds.empty()) throw UsageError("--in and --seeds are exclusive");
    std::ifstream in(o.in_path);
    if (!in) throw UsageError("cannot read " + o.in_path);
    const auto records = read_records(in);
    const Sequence seq = sequence_from_records(records, o.budget);
    reports = run_suite(std::span(&seq, 1), claims, suite);
  } else {
    if (o.seeds.empty()) throw UsageError("verify needs --seeds or --in");
    reports = run_suite(seed_range(o), claims, o.budget, suite);
  }
  Sink sink(o.out_path, out);
  sink.get() << (o.format == "text" ? reports_to_table(reports)
                                    : reports_to_json(reports));
  bool failed = false;
  for (const auto& r : reports) {
    if (r.verdict.kind != Verdict::Kind::kFails) continue;
    failed = true;
    err << "FAIL " << to_string(r.claim) << ' ' << to_string(r.spec.kind) << '('
        << to_decimal(r.spec.seed) << "): " << r.verdict.detail << '\n';
  }
  return failed ? kClaimFailure : kOk;
}

int cmd_rebase(const Options& o, std::ostream& out, std::ostream& err) {
  const SeqSpec spec = spec_of(o);
  if (o.u.size() != 1 || o.u[0] < 2) throw UsageError("rebase needs one --u >= 2");
  const Base u(o.u[0]);
  Sink sink(o.out_path, out);
  std::ostream& os = sink.get();
  const bool json = o.format == "json";
  const bool csv = o.format == "csv";
  auto rows = ordered_json::array();
  if (csv) os << "index,value,delta\n";
  std::optional<Natural> previous;
  std::string failure;
  const Outcome outcome = walk(spec, o.budget, [&](const SeqTerm& t) {
    if (!failure.empty()) return;
    Natural v;
    try {
      v = rebase(t.rep, u, o.budget);
    } catch (const BudgetExceeded& e) {
      failure = "term " + std::to_string(t.index) + ": " + e.what();
      return;
    }
    std::optional<Natural> delta;
    if (previous) delta = v - *previous;
    if (json) {
      rows.push_back({{"index", t.index},
                      {"value", to_decimal(v)},
                      {"delta", delta ? ordered_json(to_decimal(*delta))
                                      : ordered_json(nullptr)}});
    } else if (csv) {
      os << t.index << ',' << to_decimal(v) << ',';
      if (delta) os << to_decimal(*delta);
      os << '\n';
    } else {
      os << t.index << "  " << to_decimal(v);
      if (delta) os << "  " << (*delta >= 0 ? "+" : "") << to_decimal(*delta);
      os << '\n';
    }
    previous = std::move(v);
  });
  if (json) os << rows.dump(2) << '\n';
  if (!failure.empty()) {
    err << "budget exceeded at " << failure << '\n';
    return kBudget;
  }
  return outcome_code(outcome, err);
}

void add_budget(CLI::App* app, Options& o) {
  app->add_option("--max-steps", o.budget.max_steps, "terms to generate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--max-digits", o.budget.max_digits,
                  "largest value materialized, in decimal digits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--max-borrow-terms", o.budget.max_borrow_terms,
                  "largest expansion a single decrement may produce")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_format(CLI::App* app, Options& o, std::string& format) {
  app->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app->add_option("--out", o.out_path, "write to this file instead of stdout");
}

void add_kind(CLI::App* app, Options& o) {
  app->add_option("--kind", o.kind, "G for G(m), L for L(k)")
      ->check(CLI::IsMember({"G", "L", "g", "l"}))
      ->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app("Goodstein sequences: hereditary notation, ordinal mirrors and claim checks",
               "goodstein");
  app.require_subcommand(1);
  Options o;
  // Each subcommand has its own default format.
  std::string rep_format = "text", seq_format = "text", mirror_format = "text",
              verify_format = "json", rebase_format = "text";

  auto* rep = app.add_subcommand("rep", "hereditary representation of m in a base");
  rep->add_option("m", o.seed, "the number")->required();
  rep->add_option("--base", o.base, "the base")->capture_default_str();
  add_budget(rep, o);
  add_format(rep, o, rep_format);

  auto* seq = app.add_subcommand("seq", "stream the terms of G(m) or L(k)");
  seq->add_option("seed", o.seed, "m for G(m), k for L(k)")->required();
  add_kind(seq, o);
  add_budget(seq, o);
  add_format(seq, o, seq_format);
  seq->add_option("--plot", o.plot_path, "also write index,digits plot data here");

  auto* mir = app.add_subcommand("mirror", "ordinal mirror of each term and the decrease audit");
  mir->add_option("seed", o.seed, "m for G(m), k for L(k)")->required();
  add_kind(mir, o);
  add_budget(mir, o);
  add_format(mir, o, mirror_format);

  auto* ver = app.add_subcommand("verify", "check claims on a range of sequences");
  ver->add_option("--seeds", o.seeds, "A..B or a single seed");
  ver->add_option("--in", o.in_path, "check an exported sequence instead");
  ver->add_option("--claims", o.claims, "comma-separated claim ids, or all")
      ->capture_default_str();
  ver->add_option("--u", o.u, "bases for the thesis check (default 3..10)")->delimiter(',');
  ver->add_option("--x", o.x, "bases for the functional check (default 3..10)")
      ->delimiter(',');
  add_kind(ver, o);
  add_budget(ver, o);
  add_format(ver, o, verify_format);

  auto* reb = app.add_subcommand("rebase", "terms rewritten in a fixed base u");
  reb->add_option("seed", o.seed, "m for G(m), k for L(k)")->required();
  reb->add_option("--u", o.u, "the base")->required()->delimiter(',');
  add_kind(reb, o);
  add_budget(reb, o);
  add_format(reb, o, rebase_format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rep) {
      o.format = rep_format;
      return cmd_rep(o, out);
    }
    if (*seq) {
      o.format = seq_format;
      return cmd_seq(o, out, err);
    }
    if (*mir) {
      o.format = mirror_format;
      return cmd_mirror(o, out, err);
    }
    if (*ver) {
      o.format = verify_format;
      return cmd_verify(o, out, err);
    }
    if (*reb) {
      o.format = rebase_format;
      return cmd_rebase(o, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace goodstein::cli
