#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xxchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Inclusive linear grid "min:max:steps" (steps = number of points).
struct Grid {
  double min;
  double max;
  int steps;

  static Grid parse(const std::string& text);
  static Grid point(double v) { return {v, v, 1}; }
  double at(int i) const;
  std::vector<double> values() const;
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace xxchain::cli
