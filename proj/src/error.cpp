#include "synalg/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace synalg {

std::size_t size_guard() {
  constexpr std::size_t kDefault = 4096;
  const char *env = std::getenv("SYNALG_SIZE_GUARD");
  if (env == nullptr || *env == '\0')
    return kDefault;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc() || *ptr != '\0' || value == 0)
    return kDefault;
  return value;
}

void check_size_guard(const std::string &what, std::size_t size) {
  const std::size_t limit = size_guard();
  if (size > limit)
    throw SizeGuardExceeded(what, size, limit);
}

} // namespace synalg
