#pragma once

#include "nielsen/tables.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::stiefel {

// Projection V_{r,k} -> G_{r,k} (or onto the oriented Grassmannian), paired with itself.
struct StiefelQuery {
  long r = 4;
  long k = 2;
  bool oriented_target = false;
};

// chi(G_{r,k}) for 1 <= k <= r.
BigInt grassmann_euler(long r, long k);

// Requires r >= 2k >= 2.
InvariantBundle stiefel_selfcoincidence(const StiefelQuery& q,
                                        const tables::FactBase& fb = tables::FactBase::bundled());

}  // namespace nielsen::stiefel
