// JSON form of timed traces:
//   {"alphabet":["green","push","red"],
//    "states":[{"time":0,"here":["red"],"there":["red"]}, ...]}
// "here" may be omitted for a state whose here-set equals its there-set.
// "alphabet" may be omitted; the atoms mentioned by the states are used.
#pragma once

#include <string>
#include <string_view>

#include "mel/trace.hpp"

namespace mel {

/// Single-line JSON; "here" is written only where it differs from "there".
std::string trace_to_json(const TimedHTTrace& m);

/// Throws ValidationError on malformed JSON or on a trace that violates its
/// invariants.
TimedHTTrace trace_from_json(std::string_view text);

}  // namespace mel
