#include "xxchain/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "xxchain/error.hpp"

namespace xxchain {

int checked_dense_cap(int requested) {
  if (requested < 1 || requested > kDenseCapMax) {
    throw std::invalid_argument("dense cap must lie in [1, " +
                                std::to_string(kDenseCapMax) + "], got " +
                                std::to_string(requested));
  }
  return requested;
}

int dense_cap() {
  const char* env = std::getenv("XXCHAIN_DENSE_CAP");
  if (env == nullptr || *env == '\0') return kDenseCapDefault;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("XXCHAIN_DENSE_CAP is not an integer: ") + env);
  }
  return checked_dense_cap(value);
}

void require_within_cap(int n, int cap, std::string_view what) {
  if (n > cap) {
    throw SizeError(std::string(what) + ": N=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
  }
}

} // namespace xxchain
