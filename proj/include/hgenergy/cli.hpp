#ifndef HGENERGY_CLI_HPP
#define HGENERGY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hgenergy {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericError = 3;

/// Runs the command line `args` (args[0] is the program name). `in` backs the
/// "-" input path; reports go to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace hgenergy

#endif // HGENERGY_CLI_HPP
