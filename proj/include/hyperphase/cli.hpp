#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperphase {

// Command-line entry point. `args` excludes the program name.
// Exit codes: 0 success, 1 usage or scene error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Flat "key = value" config file turned into the equivalent flags
// ("--key value"; boolean "true" gives a bare "--key"). Blank lines and
// lines starting with '#' are skipped. Throws IoError / ParseError.
std::vector<std::string> config_file_args(const std::string& path);

}  // namespace hyperphase
