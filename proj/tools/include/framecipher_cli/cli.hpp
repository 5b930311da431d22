#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace framecipher::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCrypto = 2;

/// Runs one subcommand (keygen, encode, decode, bruteforce, analyze, cpa,
/// perturb, experiment). Returns 0 on success, 1 on usage or input errors and
/// 2 on cryptographic failures.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace framecipher::cli
