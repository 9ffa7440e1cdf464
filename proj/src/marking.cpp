#include "fixclip/marking.hpp"

#include <stdexcept>
#include <string>

#include "fixclip/error.hpp"

namespace fixclip {

std::string_view to_string(BooleanOp op) {
  switch (op) {
    case BooleanOp::kIntersection: return "intersection";
    case BooleanOp::kUnion: return "union";
    case BooleanOp::kDifference: return "difference";
  }
  return "?";
}

std::string_view to_string(VertexFlag f) {
  switch (f) {
    case VertexFlag::kNone: return "none";
    case VertexFlag::kEn: return "en";
    case VertexFlag::kEx: return "ex";
  }
  return "?";
}

VertexFlag flag_clipper_rule(const IntersectionType& type, BooleanOp op) {
  using M = LocationMark;
  const M in = type.incoming;
  const M out = type.outgoing;
  switch (op) {
    case BooleanOp::kIntersection:
      if (in == M::kIn && (out == M::kOut || is_on(out))) return VertexFlag::kEx;
      if (out == M::kIn && (in == M::kOut || is_on(in))) return VertexFlag::kEn;
      return VertexFlag::kNone;
    case BooleanOp::kUnion:
      if (out == M::kOut && (in == M::kIn || is_on(in))) return VertexFlag::kEn;
      if (in == M::kOut && (out == M::kIn || is_on(out))) return VertexFlag::kEx;
      return VertexFlag::kNone;
    case BooleanOp::kDifference:
      break;
  }
  throw std::invalid_argument("difference must be reduced to an intersection before flagging");
}

VertexFlag derive_partner_flag(VertexFlag flag, bool same_hand) {
  if (flag == VertexFlag::kNone || !same_hand) return flag;
  return flag == VertexFlag::kEn ? VertexFlag::kEx : VertexFlag::kEn;
}

void flag_clipper(Polygon& clipper, const ClassificationTable& types, BooleanOp op) {
  for (const auto& [ref, type] : types) clipper.at(ref).flag = flag_clipper_rule(type, op);
  clipper.set_flags_assigned(true);
}

void flag_subject(const Polygon& clipper, Polygon& subject) {
  if (!clipper.flags_assigned()) {
    throw Error(ErrorCode::kRedFlagsNotSet, "clipper flags must be assigned before the subject's");
  }
  for (const Contour& c : clipper.contours()) {
    for (VertexIndex i : c.ring_order()) {
      const Vertex& red = c[i];
      if (!red.is_intersection) continue;
      Vertex& black = subject.at(*red.neighbor);
      if (red.flag == VertexFlag::kNone) {
        black.flag = VertexFlag::kNone;
        continue;
      }
      if (!red.local_hand || !black.local_hand) {
        throw std::logic_error("local hands must be resolved before flagging the subject");
      }
      black.flag = derive_partner_flag(red.flag, *red.local_hand == *black.local_hand);
    }
  }
  subject.set_flags_assigned(true);
}

ReducedDifference reduce_difference(const Polygon& clipper, const Polygon& subject) {
  Polygon complement = reversed(clipper);
  complement.set_complemented(!clipper.complemented());
  // Reversal flipped each declared hand; complementing flips it back.
  for (std::size_t i = 0; i < complement.contours().size(); ++i) {
    complement.contours()[i].set_declared_hand(clipper.contours()[i].declared_hand());
  }
  return {std::move(complement), subject, BooleanOp::kIntersection};
}

std::string trial_kind_name(const Trial& t) {
  std::string name = std::string(to_string(t.start)) + "," + std::string(to_string(t.end));
  if (t.sense) name += *t.sense == OverlapSense::kCon ? " on_con" : " on_opp";
  return name;
}

std::vector<Trial> group_trials(const Polygon& clipper, const ClassificationTable& types) {
  std::vector<Trial> trials;
  for (std::size_t ci = 0; ci < clipper.contours().size(); ++ci) {
    const Contour& c = clipper.contours()[ci];
    for (VertexIndex i : c.ring_order()) {
      auto it = types.find({ci, i});
      if (it == types.end() || is_on(it->second.incoming)) continue;

      Trial t;
      t.start = it->second.incoming;
      VertexIndex cur = i;
      for (;;) {
        const IntersectionType& type = types.at({ci, cur});
        t.vertices.push_back({ci, cur});
        if (!is_on(type.outgoing)) {
          t.end = type.outgoing;
          break;
        }
        const OverlapSense s = sense_of(type.outgoing);
        if (t.sense && *t.sense != s) {
          throw Error(ErrorCode::kMixedSenseWithinRun, "overlap sense changes inside a run");
        }
        t.sense = s;
        cur = c.next(cur);
      }
      trials.push_back(std::move(t));
    }
  }
  return trials;
}

std::map<VertexRef, VertexFlag> flag_by_trial_rules(const std::vector<Trial>& trials) {
  using M = LocationMark;
  std::map<VertexRef, VertexFlag> flags;
  for (const Trial& t : trials) {
    for (const VertexRef& v : t.vertices) flags[v] = VertexFlag::kNone;
    const bool in_out = t.start == M::kIn && t.end == M::kOut;
    const bool out_in = t.start == M::kOut && t.end == M::kIn;
    const bool in_in = t.start == M::kIn && t.end == M::kIn;
    if (t.trivial()) {
      // Plain crossings keep the classic meaning; grazes stay unflagged.
      if (in_out) flags[t.first()] = VertexFlag::kEx;
      if (out_in) flags[t.first()] = VertexFlag::kEn;
      continue;
    }
    if (in_out) {
      flags[t.first()] = VertexFlag::kEx;  // Rule 1
    } else if (out_in) {
      flags[t.last()] = VertexFlag::kEn;  // Rule 2
    } else if (in_in) {
      // Rule 3 (on_opp) and Rule 4 (on_con) flag both ends.
      flags[t.first()] = VertexFlag::kEx;
      flags[t.last()] = VertexFlag::kEn;
    }
  }
  return flags;
}

PairMark end_pair_mark(const IntersectionType& end) {
  const bool first_end = !is_on(end.incoming) && is_on(end.outgoing);
  const bool last_end = is_on(end.incoming) && !is_on(end.outgoing);
  if (first_end) return {end.incoming == LocationMark::kIn ? PairSlot::kEx : PairSlot::kZero, PairSlot::kZero};
  if (last_end) return {PairSlot::kZero, end.outgoing == LocationMark::kIn ? PairSlot::kEn : PairSlot::kZero};
  throw Error(ErrorCode::kIncompatibleEnds, to_string(end) + " cannot end a non-trivial trial");
}

PairMark pair_mark_sum(const PairMark& first_end, const PairMark& last_end) {
  auto add = [](PairSlot a, PairSlot b) {
    if (a != PairSlot::kZero && b != PairSlot::kZero) {
      throw Error(ErrorCode::kIncompatibleEnds, "both ends fill the same pair slot");
    }
    return a != PairSlot::kZero ? a : b;
  };
  return {add(first_end.first, last_end.first), add(first_end.last, last_end.last)};
}

PairMark trial_pair_mark(const IntersectionType& first, const IntersectionType& last) {
  if (!is_on(first.outgoing) || !is_on(last.incoming) || sense_of(first.outgoing) != sense_of(last.incoming)) {
    throw Error(ErrorCode::kIncompatibleEnds, to_string(first) + " and " + to_string(last) + " do not join");
  }
  return pair_mark_sum(end_pair_mark(first), end_pair_mark(last));
}

MarkingOutcome mark(Polygon& clipper, Polygon& subject, const ClassificationTable& types, BooleanOp op) {
  flag_clipper(clipper, types, op);
  flag_subject(clipper, subject);
  for (const auto& [ref, type] : types) {
    if (clipper.at(ref).flag != VertexFlag::kNone) return MarkingOutcome::kFlagged;
  }
  return MarkingOutcome::kNoFlags;
}

}  // namespace fixclip
