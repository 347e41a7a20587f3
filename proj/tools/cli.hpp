#pragma once

#include "famcode/codes.hpp"
#include "famcode/monomial_module.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace famcode::cli {

/// Monomial module file: "vars:", optional "components:", one
/// "generator: x*y @ c" line per generator.
struct ModuleInput {
  Ring ring;
  MonomialModule module;
};
ModuleInput parseModuleFile(std::istream& in);

enum Exit { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs one command line (argv without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool colorErrors = false);

}  // namespace famcode::cli
