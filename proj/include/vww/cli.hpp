#ifndef VWW_CLI_HPP
#define VWW_CLI_HPP

namespace vww {

/// Entry point behind the `vww` binary. Subcommands: simulate, dispersion,
/// apply, verify. Returns 0 on success, 2 on configuration errors, 3 on
/// blow-up, 1 on any other failure.
int cli_main(int argc, const char* const* argv);

} // namespace vww

#endif // VWW_CLI_HPP
