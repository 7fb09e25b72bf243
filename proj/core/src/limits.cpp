#include "sawlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string_view>

namespace sawlab {
namespace {

void read_env(const char* name, std::uint64_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) slot = value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  read_env("SAWLAB_VERTEX_BUDGET", limits.vertex_budget);
  read_env("SAWLAB_NODE_BUDGET", limits.node_budget);
  read_env("SAWLAB_SEARCH_BUDGET", limits.search_budget);
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

}  // namespace sawlab
