#ifndef PIMAC_CLI_HPP
#define PIMAC_CLI_HPP

#include <ostream>

namespace pimac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInconsistent = 2;

// Entry point behind the `pimac` executable; writes documents to `out` and
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pimac

#endif  // PIMAC_CLI_HPP
