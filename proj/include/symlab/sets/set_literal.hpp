#pragma once

#include <string>

#include "symlab/sets/any_set.hpp"

namespace symlab {

/// Text form of a set: a header line
///   rep=<pointset|intervals|grid|polygon> dim=<n> [h=<spacing>] [snap=<pitch>]
/// followed by one record per line: `point x y [z]`, `interval a b`,
/// `cell i j [k]`. Values round-trip exactly for dyadic data. A semicolon is
/// accepted as a line separator so inline literals fit config values.
AnySet parse_set_literal(const std::string& text);
std::string serialize_set_literal(const AnySet& set);

}  // namespace symlab
