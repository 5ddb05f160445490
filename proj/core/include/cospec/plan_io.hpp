#pragma once

#include <string>
#include <string_view>

#include "cospec/construct.hpp"

namespace cospec {

/// Reads a swap plan. One directive per line, '#' starts a comment:
///
///   BASE g6 <graph6>         base graph inline, or
///   BASE edges <n>           followed by "u v" lines
///   V1 <v> <v> ...           first swap set
///   V2 <v> <v> ...           second swap set, same size
///   PI <x> <y> [<x> <y> ...] pairs x <-> y of the involution (optional;
///                            found by search when omitted)
///   H1 g6 <graph6> | H1 edges  glued graph for V1 (edge lines follow,
///                            vertices 0..m-1; order m is implied)
///   H2 ...                   same for V2
///   PHI1 <v> ...             φ1(0), ..., φ1(m-1) (optional, default V1)
///   PHI2 <v> ...             φ2(0), ..., φ2(m-1) (optional, default V2)
///
/// Errors are InputError with the offending line number. The returned plan
/// is validated.
SwapPlan parse_plan(std::string_view text);

/// Inverse of parse_plan, using edge lists and explicit PI/PHI lines.
std::string emit_plan(const SwapPlan& plan);

}  // namespace cospec
