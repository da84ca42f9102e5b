#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "toricapprox/json_io.hpp"

namespace toric::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kInputError = 2, kDefect = 3 };

// Argument resolvers shared with the Python bindings.  Each accepts a file path,
// inline JSON, or a builtin/shorthand name.
Fan resolve_fan(const std::string& arg);
MultiplicitySet resolve_conditions(const std::string& arg, std::size_t rays);
FieldDescriptor resolve_field(const std::string& arg);
ExtVec parse_ext_list(const std::string& s);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
