#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plasma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

/// `generate` subcommand. `args` are the flags following the subcommand name.
int run_generate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `bench` subcommand.
int run_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Dispatches argv[1] to a subcommand.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plasma::cli
