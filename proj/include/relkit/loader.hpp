#pragma once

#include <string>

#include "relkit/engine.hpp"

namespace relkit {

/// Builds an instance from a schema file and a directory holding one
/// <relation>.csv per declared relation. Column binding is header
/// driven, so column order in the files is immaterial; duplicate rows
/// collapse. Throws SchemaError/DataError with file:line positions.
Instance load_instance(const std::string& schema_path,
                       const std::string& data_dir);

}  // namespace relkit
