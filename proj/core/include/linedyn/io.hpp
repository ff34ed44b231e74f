#pragma once

#include <string>
#include <string_view>

#include "linedyn/multi.hpp"
#include "linedyn/poset.hpp"
#include "linedyn/single.hpp"

namespace linedyn {

enum class SpecKind { Single, Multi };

/// Multi when any value is a list or the spec carries "rules"; throws
/// ParseError on malformed JSON.
SpecKind detect_spec_kind(std::string_view text);

/**
 * {"window": [lo, hi], "values": {"i": j, ...},
 *  "left_tail": {"kind": "shift", "offset": 2}, "right_tail": {...}}
 *
 * Tail kinds: none, shift (offset), collapse (target), mirror. Every window
 * index needs a value. Throws ParseError.
 */
SelfMap parse_selfmap_spec(std::string_view text);

/**
 * {"window": [lo, hi], "values": {"i": [j, ...]}, "rules": [...]}
 *
 * A rule fills the indices of "range" ([from, to], null for unbounded) that
 * match the optional "parity" ("odd" / "even"):
 *   {"kind": "interval", "from": expr, "to": expr}  ->  [x_from, x_to]
 *   {"kind": "point", "to": expr}                   ->  {x_to}
 * where expr is an integer or "i", "i+k", "i-k". Rule images are clipped to
 * the window; the first matching rule wins and explicit values override rules.
 * A single-valued spec is accepted too (each value becomes a singleton).
 */
MultiMap parse_multimap_spec(std::string_view text);

/// {"elements": n | ["label", ...], "less": [[a, b], ...]} where a, b are ids
/// or labels.
Poset parse_poset_spec(std::string_view text);

/// Transition graph in DOT: one node per window point, multi-valued
/// self-loops dashed, invariant sets as labelled clusters when given.
std::string transition_dot(const MultiMap& f, const InvariantSetReport* sets = nullptr);

}  // namespace linedyn
