// Command-line front end. JSON results go to `out`, a short human-readable
// summary and diagnostics to `err`.
//
// Exit codes: 0 everything passed (or Equal / Zero / finite), 1 a definite
// failure, 2 some outcome is Unknown or did not stabilize, 3 input error.

#ifndef DHOPF_CLI_HPP_
#define DHOPF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dhopf {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUnknown = 2, kExitInput = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace dhopf

#endif  // DHOPF_CLI_HPP_
