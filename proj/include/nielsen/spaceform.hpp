#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nielsen/tables.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::spaceform {

// Pair f_1, f_2: S^m -> N = S^n/G, G finite acting freely.
struct SpaceFormPairDescriptor {
  long m = 2;
  long n = 2;
  BigInt group_order = 2;
  Fact homotopic = Fact::unknown();   // f_1 ~ f_2, base point free
  Fact del_zero = Fact::unknown();    // del_N(f_1) = 0
  Fact e_del_zero = Fact::unknown();  // E o del_N(f_1) = 0
  Fact kervaire_one = Fact::unknown();  // m = 2n-2 only
  std::optional<int> hopf_mod4;         // H(f~) mod 4, m = 2n-1 only
  Fact in_psE_image = Fact::unknown();  // [f_1] - [f_2] in p_* E(pi)
};

// Validates the descriptor and completes every fact the others determine (including the
// Wecken condition at (m, n) and the Kervaire/Hopf settings). Throws InputError on contradictions.
SpaceFormPairDescriptor resolve(const SpaceFormPairDescriptor& d,
                                const tables::FactBase& fb = tables::FactBase::bundled());

InvariantBundle spaceform_pair_invariants(const SpaceFormPairDescriptor& d,
                                          const tables::FactBase& fb = tables::FactBase::bundled());

struct SelfCoincidenceReport {
  Fact i_del_zero;
  Fact ii_loose_small;
  Fact iii_loose;
  Fact iv_nsharp_zero;
  Fact v_e_del_zero;
  bool iii_iff_iv = false;  // group_order != 2
  std::vector<std::string> implications;
};

// Requires homotopic = yes.
SelfCoincidenceReport selfcoincidence_chain(const SpaceFormPairDescriptor& d,
                                            const tables::FactBase& fb = tables::FactBase::bundled());

// Looseness of (f_1, f_1) when m = 2n-2, n even, n not in {2,4,8}, #G = 2.
Fact kervaire_case(const SpaceFormPairDescriptor& d, const tables::FactBase& fb = tables::FactBase::bundled());

// Looseness of (f_1, f_1) when m = 2n-1, n = 2 (4), n >= 6, #G = 2, hopf_mod4 given.
Fact hopf_case(const SpaceFormPairDescriptor& d, const tables::FactBase& fb = tables::FactBase::bundled());

// MC for odd n >= 3.
Verdict spaceform_mc(const SpaceFormPairDescriptor& d, const tables::FactBase& fb = tables::FactBase::bundled());

}  // namespace nielsen::spaceform
