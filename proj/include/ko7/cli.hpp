#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ko7/rewrite.hpp"

namespace ko7::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  RelationKind relation = RelationKind::SafeRoot;
  std::size_t max_size = 6;
  std::size_t fuel = 10000;
  std::size_t budget = 200;
  bool json = false;
};

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success or the expected verdict, 1 on check violations, 2 on usage or
/// parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ko7::cli
