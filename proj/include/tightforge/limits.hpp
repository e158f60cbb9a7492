#pragma once

#include <cstddef>

namespace tightforge {

/// Size caps guarding the exponential enumerations (slices, up-sets, subset
/// searches).  Defaults can be overridden from the environment through
/// TIGHTFORGE_MAX_ELEMENTS and TIGHTFORGE_MAX_ARROWS.
struct Limits {
  std::size_t max_elements = 64;
  std::size_t max_arrows = 16;

  static Limits from_env();
  static Limits from_env(Limits base);
};

}  // namespace tightforge
