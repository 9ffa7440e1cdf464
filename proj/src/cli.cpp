#include "fixclip/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "fixclip/io.hpp"
#include "fixclip/oracle.hpp"
#include "fixclip/svg.hpp"

namespace fixclip {

int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidInput: return kExitInvalidInput;
    case ErrorCategory::kScopeViolation: return kExitScopeViolation;
    case ErrorCategory::kInternal: return kExitInternal;
  }
  return kExitInternal;
}

namespace {

MembershipRule pick_rule(const std::optional<MembershipRule>& forced, const PolygonFile& a, const PolygonFile& b) {
  if (forced) return *forced;
  if (a.rule && b.rule && *a.rule != *b.rule) {
    throw Error(ErrorCode::kParse, "clipper and subject files name different membership rules");
  }
  return a.rule ? *a.rule : b.rule.value_or(MembershipRule::kNonzeroWinding);
}

struct CaseRun {
  ClipResult result;
  std::optional<OracleReport> report;
};

CaseRun run_case(const PolygonFile& cf, const PolygonFile& sf, BooleanOp op, MembershipRule rule, bool simplify,
                 std::size_t verify, std::uint64_t seed) {
  const Polygon clipper = cf.to_polygon(Role::kClipper);
  const Polygon subject = sf.to_polygon(Role::kSubject);
  ClipOptions options;
  options.rule = rule;
  options.simplify = simplify;
  CaseRun run{clip(clipper, subject, op, options), std::nullopt};
  if (verify > 0) {
    SamplePlan plan;
    plan.count = verify;
    plan.seed = seed;
    run.report = check_boolean(clipper, subject, op, run.result.region, plan, rule);
  }
  return run;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CaseReport> run_corpus(const std::filesystem::path& dir, const CorpusOptions& options) {
  static constexpr std::string_view kClipperSuffix = ".clipper.json";
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    if (file.size() > kClipperSuffix.size() && file.ends_with(kClipperSuffix)) {
      names.push_back(file.substr(0, file.size() - kClipperSuffix.size()));
    }
  }
  std::sort(names.begin(), names.end());

  std::vector<CaseReport> reports;
  for (const std::string& name : names) {
    for (BooleanOp op : options.ops) {
      CaseReport rep{name, op};
      try {
        const PolygonFile cf = read_polygon_file(dir / (name + ".clipper.json"));
        const PolygonFile sf = read_polygon_file(dir / (name + ".subject.json"));
        const CaseRun run =
            run_case(cf, sf, op, pick_rule(options.rule, cf, sf), false, options.verify, options.seed);
        rep.contours = run.result.region.contours.size();
        if (run.report && !run.report->ok()) {
          rep.exit_code = kExitOracleDisagreement;
          rep.witnesses = run.report->witnesses.size();
          rep.detail = "oracle disagrees at " + run.report->witnesses.front().x.to_string() + "," +
                       run.report->witnesses.front().y.to_string();
        }
      } catch (const Error& e) {
        rep.exit_code = exit_code_for(e.category());
        rep.detail = e.what();
      } catch (const std::exception& e) {
        rep.exit_code = kExitInternal;
        rep.detail = e.what();
      }
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polygon boolean operations"};
  app.set_version_flag("--version", "fixclip 1.0");

  std::string clipper_path, subject_path, op_name, out_path, svg_path, rule_name;
  std::size_t verify = 0;
  std::uint64_t seed = 1;
  bool simplify = false;
  app.add_option("--clipper", clipper_path, "Clipper polygon file (fixed, drawn red)")->check(CLI::ExistingFile);
  app.add_option("--subject", subject_path, "Subject polygon file (drawn black)")->check(CLI::ExistingFile);
  app.add_option("--op", op_name, "intersection, union or difference (subject minus clipper)")
      ->check(CLI::IsMember({"intersection", "union", "difference"}));
  app.add_option("--out", out_path, "Result file (default: standard output)");
  app.add_option("--svg", svg_path, "Write a plot of inputs, result and flags");
  app.add_option("--verify", verify, "Check the result against N sample points");
  app.add_flag("--simplify", simplify, "Merge collinear edges of the same origin");
  app.add_option("--rule", rule_name, "Membership rule")->check(CLI::IsMember({"nonzero", "evenodd"}));
  app.add_option("--seed", seed, "Seed for --verify sampling");

  CLI::App* corpus = app.add_subcommand("corpus", "Run every clipper/subject pair in a directory");
  std::string corpus_dir;
  std::string corpus_op = "all";
  corpus->add_option("dir", corpus_dir, "Directory of NAME.clipper.json / NAME.subject.json pairs")
      ->required()
      ->check(CLI::ExistingDirectory);
  corpus->add_option("--op", corpus_op, "Operation, or all")
      ->check(CLI::IsMember({"intersection", "union", "difference", "all"}));
  corpus->add_option("--verify", verify, "Oracle samples per case");
  corpus->add_option("--rule", rule_name, "Membership rule")->check(CLI::IsMember({"nonzero", "evenodd"}));
  corpus->add_option("--seed", seed, "Seed for oracle sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  const std::optional<MembershipRule> forced_rule =
      rule_name.empty() ? std::nullopt : parse_rule(rule_name);

  if (*corpus) {
    CorpusOptions options;
    options.verify = verify;
    options.seed = seed;
    options.rule = forced_rule;
    if (corpus_op == "all") {
      options.ops = {BooleanOp::kIntersection, BooleanOp::kUnion, BooleanOp::kDifference};
    } else {
      options.ops = {*parse_op(corpus_op)};
    }
    const std::vector<CaseReport> reports = run_corpus(corpus_dir, options);
    int worst = kExitOk;
    std::size_t failed = 0;
    for (const CaseReport& r : reports) {
      out << (r.exit_code == kExitOk ? "pass" : "FAIL") << "  " << r.name << "  " << to_string(r.op) << "  exit="
          << r.exit_code << "  contours=" << r.contours;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
      if (r.exit_code != kExitOk) ++failed;
      worst = std::max(worst, r.exit_code);
    }
    out << reports.size() - failed << "/" << reports.size() << " cases passed\n";
    return worst;
  }

  if (clipper_path.empty() || subject_path.empty() || op_name.empty()) {
    err << "error: --clipper, --subject and --op are required\n" << app.help();
    return kExitInvalidInput;
  }
  const BooleanOp op = *parse_op(op_name);
  try {
    const PolygonFile cf = read_polygon_file(clipper_path);
    const PolygonFile sf = read_polygon_file(subject_path);
    const MembershipRule rule = pick_rule(forced_rule, cf, sf);
    const CaseRun run = run_case(cf, sf, op, rule, simplify, verify, seed);

    const std::string text = write_result_file(run.result.region, op);
    if (out_path.empty()) {
      out << text;
    } else if (!write_file(out_path, text, err)) {
      return kExitInvalidInput;
    }
    if (!svg_path.empty()) {
      const std::string svg = render_svg(cf.to_polygon(Role::kClipper), sf.to_polygon(Role::kSubject), run.result);
      if (!write_file(svg_path, svg, err)) return kExitInvalidInput;
    }
    if (run.report) {
      err << "verify: " << run.report->samples << " samples, " << run.report->witnesses.size()
          << " disagreements\n";
      if (!run.report->ok()) {
        for (const Point& p : run.report->witnesses) err << "  witness " << p << "\n";
        return kExitOracleDisagreement;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace fixclip
