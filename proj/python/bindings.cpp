#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "fixclip/boolean_op.hpp"
#include "fixclip/error.hpp"
#include "fixclip/io.hpp"
#include "fixclip/oracle.hpp"
#include "fixclip/svg.hpp"

namespace py = pybind11;
using namespace fixclip;

namespace {

// The Python layer passes polygons and results as JSON text in the same
// formats the command line reads and writes.

struct Inputs {
  Polygon clipper;
  Polygon subject;
  BooleanOp op;
  MembershipRule rule;
};

Inputs load(const std::string& clipper_json, const std::string& subject_json, const std::string& op,
            const std::optional<std::string>& rule) {
  const PolygonFile cf = parse_polygon_file(clipper_json);
  const PolygonFile sf = parse_polygon_file(subject_json);
  const auto parsed_op = parse_op(op);
  if (!parsed_op) throw Error(ErrorCode::kParse, "unknown operation '" + op + "'");
  MembershipRule r = MembershipRule::kNonzeroWinding;
  if (rule) {
    const auto parsed = parse_rule(*rule);
    if (!parsed) throw Error(ErrorCode::kParse, "unknown rule '" + *rule + "'");
    r = *parsed;
  } else if (cf.rule && sf.rule && *cf.rule != *sf.rule) {
    throw Error(ErrorCode::kParse, "clipper and subject name different membership rules");
  } else {
    r = cf.rule ? *cf.rule : sf.rule.value_or(MembershipRule::kNonzeroWinding);
  }
  return {cf.to_polygon(Role::kClipper), sf.to_polygon(Role::kSubject), *parsed_op, r};
}

ClipResult run(const Inputs& in, bool simplify) {
  ClipOptions options;
  options.rule = in.rule;
  options.simplify = simplify;
  return clip(in.clipper, in.subject, in.op, options);
}

}  // namespace

PYBIND11_MODULE(_fixclip, m) {
  m.doc() = "Exact polygon boolean operations (native core)";

  static py::exception<Error> base(m, "FixclipError");
  static py::exception<Error> invalid(m, "InvalidInput", base.ptr());
  static py::exception<Error> scope(m, "ScopeViolation", base.ptr());
  static py::exception<Error> internal(m, "InternalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.category()) {
        case ErrorCategory::kInvalidInput: py::set_error(invalid, e.what()); break;
        case ErrorCategory::kScopeViolation: py::set_error(scope, e.what()); break;
        case ErrorCategory::kInternal: py::set_error(internal, e.what()); break;
      }
    }
  });

  m.def(
      "clip_json",
      [](const std::string& clipper, const std::string& subject, const std::string& op,
         const std::optional<std::string>& rule, bool simplify) {
        const Inputs in = load(clipper, subject, op, rule);
        return write_result_file(run(in, simplify).region, in.op);
      },
      py::arg("clipper"), py::arg("subject"), py::arg("op"), py::arg("rule") = py::none(),
      py::arg("simplify") = false, "Result file text for one operation.");

  m.def(
      "flags_json",
      [](const std::string& clipper, const std::string& subject, const std::string& op,
         const std::optional<std::string>& rule) {
        const Inputs in = load(clipper, subject, op, rule);
        std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
        for (const FlaggedVertex& v : run(in, false).flags()) {
          out.emplace_back(v.role == Role::kClipper ? "clipper" : "subject", std::string(to_string(v.flag)),
                           v.position.x.to_string(), v.position.y.to_string());
        }
        return out;
      },
      py::arg("clipper"), py::arg("subject"), py::arg("op"), py::arg("rule") = py::none(),
      "(role, flag, x, y) for every flagged vertex of the working copies.");

  m.def(
      "verify_json",
      [](const std::string& clipper, const std::string& subject, const std::string& op, const std::string& result,
         std::size_t samples, std::uint64_t seed, const std::optional<std::string>& rule) {
        const Inputs in = load(clipper, subject, op, rule);
        SamplePlan plan;
        plan.count = samples;
        plan.seed = seed;
        const OracleReport rep = check_boolean(in.clipper, in.subject, in.op, parse_result_file(result), plan, in.rule);
        std::vector<std::pair<std::string, std::string>> witnesses;
        for (const Point& p : rep.witnesses) witnesses.emplace_back(p.x.to_string(), p.y.to_string());
        return witnesses;
      },
      py::arg("clipper"), py::arg("subject"), py::arg("op"), py::arg("result"), py::arg("samples") = 1000,
      py::arg("seed") = 1, py::arg("rule") = py::none(),
      "Sample points where the result disagrees with the pointwise combination of the inputs.");

  m.def(
      "svg_json",
      [](const std::string& clipper, const std::string& subject, const std::string& op,
         const std::optional<std::string>& rule) {
        const Inputs in = load(clipper, subject, op, rule);
        return render_svg(in.clipper, in.subject, run(in, false));
      },
      py::arg("clipper"), py::arg("subject"), py::arg("op"), py::arg("rule") = py::none());
}
