#pragma once

#include <istream>
#include <string>

#include "relkit/engine.hpp"

namespace relkit {

/// Parses the declarative schema format:
///
///   # comment
///   domain NAME natural
///   domain NAME text
///   domain NAME enum { MEMBER ... }
///   attribute NAME DOMAIN
///   relation NAME { ATTR ... } [key { ATTR ... }]
///
/// One directive per line. Enumerated members and attribute tokens that
/// are all digits denote naturals/positions; anything else is text or a
/// symbolic attribute name. Throws SchemaError with <name>:<line>.
Scheme parse_scheme(std::istream& in, const std::string& name);

Scheme parse_scheme_file(const std::string& path);

}  // namespace relkit
