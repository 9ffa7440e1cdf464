#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fixclip/classification.hpp"
#include "fixclip/polygon.hpp"

namespace fixclip {

enum class BooleanOp { kIntersection, kUnion, kDifference };

std::string_view to_string(BooleanOp op);
std::string_view to_string(VertexFlag f);

/// The compact clipper rule. Intersection: in,out and in,on exit; out,in and
/// on,in enter. Union: in,out and on,out enter; out,in and out,on exit.
/// Every other type is left unflagged. Difference must be reduced first.
VertexFlag flag_clipper_rule(const IntersectionType& type, BooleanOp op);

/// Flag of the linked vertex on the other ring: swapped when both contours
/// have the same hand there, kept otherwise. Applying it twice is identity.
VertexFlag derive_partner_flag(VertexFlag flag, bool same_hand);

/// Sets the flag of every red I vertex by flag_clipper_rule.
void flag_clipper(Polygon& clipper, const ClassificationTable& types, BooleanOp op);

/// Derives black flags from the linked red flags and the local hands.
/// Throws kRedFlagsNotSet when flag_clipper has not run.
void flag_subject(const Polygon& clipper, Polygon& subject);

struct ReducedDifference {
  Polygon clipper;
  Polygon subject;
  BooleanOp op;
};

/// subject minus clipper as subject intersected with the complement of the
/// clipper. The clipper contours are reversed so each keeps its hand
/// relative to the complemented region.
ReducedDifference reduce_difference(const Polygon& clipper, const Polygon& subject);

/// A maximal run of red I vertices joined by On arrows of one sense.
struct Trial {
  std::vector<VertexRef> vertices;
  LocationMark start = LocationMark::kOut;  // mark of the arrow entering the run
  LocationMark end = LocationMark::kOut;    // mark of the arrow leaving the run
  std::optional<OverlapSense> sense;        // empty for one-vertex trials

  bool trivial() const { return vertices.size() == 1; }
  const VertexRef& first() const { return vertices.front(); }
  const VertexRef& last() const { return vertices.back(); }
};

/// "in,out on_con", or "in,out" for one-vertex trials.
std::string trial_kind_name(const Trial& t);

/// Contours lying entirely on the other contour form no trial.
std::vector<Trial> group_trials(const Polygon& clipper, const ClassificationTable& types);

/// Trial-based flagging for the intersection operation: Rule 1 flags the
/// first vertex of an in,out trial ex, Rule 2 the last vertex of an out,in
/// trial en, Rules 3 and 4 both ends of an in,in trial (ex, en). Out,out
/// trials stay unflagged.
std::map<VertexRef, VertexFlag> flag_by_trial_rules(const std::vector<Trial>& trials);

enum class PairSlot { kZero, kEn, kEx };

struct PairMark {
  PairSlot first = PairSlot::kZero;
  PairSlot last = PairSlot::kZero;

  friend bool operator==(const PairMark&, const PairMark&) = default;
};

/// Pair mark of a trial end of one of the eight "on" end types, for the
/// intersection operation: in,on is (ex,0), on,in is (0,en), out,on and
/// on,out are (0,0). Throws kIncompatibleEnds for any other type.
PairMark end_pair_mark(const IntersectionType& end);

/// Componentwise sum; a slot filled by both operands throws kIncompatibleEnds.
PairMark pair_mark_sum(const PairMark& first_end, const PairMark& last_end);

/// Sum of the end marks of a non-trivial trial, checking that both ends'
/// On halves share one sense.
PairMark trial_pair_mark(const IntersectionType& first, const IntersectionType& last);

enum class MarkingOutcome { kFlagged, kNoFlags };

/// Full marking pass: clipper by the rule, then the subject.
MarkingOutcome mark(Polygon& clipper, Polygon& subject, const ClassificationTable& types, BooleanOp op);

}  // namespace fixclip
