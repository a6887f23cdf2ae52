#pragma once

#include <cstdint>
#include <string>

#include "multifan/polytope.hpp"

namespace multifan {

/// Deterministic 800x800 chart of a 2-dimensional multi-polytope: hyperplane
/// lines, polytope vertices, and one label per chamber showing the DH value
/// at a witness point. Witnesses come from a seed-perturbed grid and chambers
/// are deduplicated by their exact hyperplane sign vectors, so the picture is
/// presentation-approximate but every printed value is exact. Coordinates are
/// fixed-point decimals computed from rationals; equal inputs and seeds give
/// byte-identical output.
std::string emitSvg(const MultiPolytope& p, std::uint64_t seed);

}  // namespace multifan
