#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fixclip/boolean_op.hpp"
#include "fixclip/error.hpp"

namespace fixclip {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitScopeViolation = 2,
  kExitOracleDisagreement = 3,
  kExitInternal = 4,
};

int exit_code_for(ErrorCategory category);

struct CaseReport {
  std::string name;
  BooleanOp op;
  int exit_code = kExitOk;
  std::size_t contours = 0;
  std::size_t witnesses = 0;
  std::string detail;
};

struct CorpusOptions {
  std::vector<BooleanOp> ops{BooleanOp::kIntersection};
  std::size_t verify = 0;
  std::uint64_t seed = 1;
  std::optional<MembershipRule> rule;
};

/// Every NAME.clipper.json with a matching NAME.subject.json in `dir`, in
/// name order, run for each requested operation.
std::vector<CaseReport> run_corpus(const std::filesystem::path& dir, const CorpusOptions& options);

/// Command line entry point:
///   fixclip --clipper FILE --subject FILE --op OP [--out FILE] [--svg FILE]
///           [--verify N] [--simplify] [--rule nonzero|evenodd] [--seed K]
///   fixclip corpus DIR [--op OP|all] [--verify N] [--rule R] [--seed K]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fixclip
