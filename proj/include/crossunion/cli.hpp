#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace crossunion {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// The check ran and did not hold.
inline constexpr int kExitFailed = 2;

/// Everything that determines a run; echoed in the header of every output.
struct RunConfig {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string output_path;
  std::string format = "json";
  unsigned threads = 1;
};

/// CROSSUNION_THREADS if it holds a positive integer, else 1.
unsigned default_thread_count();

/// UTC ISO-8601. Taken from SOURCE_DATE_EPOCH when set, so outputs can be
/// reproduced byte for byte.
std::string header_timestamp();

/// argv[0] is the program name. Output goes to `out` unless --output is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossunion
