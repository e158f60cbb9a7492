#include "tightforge/limits.hpp"

#include <cstdlib>
#include <string>

namespace tightforge {

namespace {

void override_from(const char* var, std::size_t& field) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used == std::string(raw).size() && v > 0) field = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    // Malformed values leave the default in place.
  }
}

}  // namespace

Limits Limits::from_env() { return from_env(Limits{}); }

Limits Limits::from_env(Limits base) {
  override_from("TIGHTFORGE_MAX_ELEMENTS", base.max_elements);
  override_from("TIGHTFORGE_MAX_ARROWS", base.max_arrows);
  return base;
}

}  // namespace tightforge
