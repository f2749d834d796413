#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace digigap::cli {

enum class Format { kText, kJson };

/// Exit codes: 0 all claims pass, 1 some claim fails, 2 operational failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitOperational = 2;

struct Options {
  Format format = Format::kText;
  bool strict = false;
  int k = 0;
  std::size_t n = 3;
};

int cmd_census(const std::string& path, const Options& opts, std::ostream& out,
               std::ostream& err);
int cmd_gaps(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const Options& opts, std::ostream& out,
               std::ostream& err);
/// Writes to `out_path`, or to `out` when the path is empty.
int cmd_gen(long long length, std::uint64_t seed, const std::string& out_path,
            const Options& opts, std::ostream& out, std::ostream& err);
int cmd_constants(int n, const Options& opts, std::ostream& out, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace digigap::cli
