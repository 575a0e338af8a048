#pragma once

#include "nielsen/lattice.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::torus {

// Pair (f_1, f_2): M -> T^n, encoded by the difference f_1 - f_2 on H_1.
struct TorusPairDescriptor {
  long m = 1;  // dim M
  long n = 1;  // dim of the target torus
  lattice::IntMatrix h1_matrix{1, 1};  // n rows; columns span the image of H_1(M); m columns when M = T^m
  bool source_is_torus = true;
  Fact top_cohomology_pullback_nonzero = Fact::unknown();  // (f_1 - f_2)^* != 0 on H^n(T^n)
  Fact det_kills_top = Fact::unknown();                    // det * z != 0 for every nonzero z in H^n(M)
};

void validate(const TorusPairDescriptor& d);

InvariantBundle torus_invariants(const TorusPairDescriptor& d);

// Maps into S^1: g generates the image of (f_1 - f_2)_* in Z.
Verdict circle_target_mcc(const BigInt& g);

}  // namespace nielsen::torus
