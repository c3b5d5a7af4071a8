#pragma once

#include <string>

#include "relkit/engine.hpp"

namespace relkit {

/// Parses one conjunctive rule:
///
///   name(var {, var}) :- atom {, atom} .
///
/// where an atom is `rel(attr: var {, attr: var})` for name-indexed
/// relations or `rel(var {, var})` positionally for relations indexed
/// 0..n−1. `_` denotes a fresh anonymous variable per occurrence.
/// Throws ParseError with 1-based line:col positions.
Rule parse_rule(const std::string& text);

}  // namespace relkit
