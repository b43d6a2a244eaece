#pragma once

#include <string>

#include "errors.hpp"

namespace osporb {

// A positive integer level k with the derived minimal-model parameters
// p = 2k+3 and q = k+2. Since p = 2q - 1, p and q are always coprime, and
// p >= 5, q >= 3.
struct Level {
  int k;
  int p;  // 2k+3
  int q;  // k+2

  explicit Level(int level_k) : k(level_k), p(2 * level_k + 3), q(level_k + 2) {
    if (level_k < 1) throw DomainError("level k must be a positive integer, got " + std::to_string(level_k));
  }

  // Every orbifold label family is indexed by r in [1, 2k+2].
  int r_max() const { return 2 * k + 2; }
};

}  // namespace osporb
