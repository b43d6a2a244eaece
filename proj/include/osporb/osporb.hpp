#pragma once

// Umbrella header: the exact-arithmetic engine for the module labels,
// decompositions, contragredient duals, conformal weights and fusion ring
// of the Z2-orbifold of the affine osp(1|2) vertex algebra at positive
// integer level, together with its brute-force law verifier.

#include "errors.hpp"      // IWYU pragma: export
#include "formal_sum.hpp"  // IWYU pragma: export
#include "label.hpp"       // IWYU pragma: export
#include "level.hpp"       // IWYU pragma: export
#include "orbifold.hpp"    // IWYU pragma: export
#include "rational.hpp"    // IWYU pragma: export
#include "sector.hpp"      // IWYU pragma: export
#include "sl2_orbifold.hpp"  // IWYU pragma: export
#include "verify.hpp"      // IWYU pragma: export
#include "virasoro.hpp"    // IWYU pragma: export
