#pragma once

#include <variant>

#include "nielsen/tables.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::sphere {

// Classical degrees of f_1, f_2 (m = n only).
struct Degrees {
  BigInt d1, d2;
};

// Facts about [f] = [f_1'] - [a o f_2'] in pi_m(S^n).
struct ClassFacts {
  Fact f1_homotopic_a_f2 = Fact::unknown();               // [f] = 0
  Fact in_suspension_image = Fact::unknown();             // [f] in E(pi_{m-1}(S^{n-1}))
  Fact stable_suspension_nonzero = Fact::unknown();       // E^inf[f] != 0
  Fact some_stable_hopf_james_nonzero = Fact::unknown();  // E^inf(gamma_k[f]) != 0 for some k
};

struct SphereClassDescriptor {
  long m = 1;
  long n = 1;
  std::variant<Degrees, ClassFacts> mode = ClassFacts{};
};

// (m, n) = (3, 2) with [f] of Hopf invariant h.
SphereClassDescriptor hopf_class_3_2(const BigInt& h);

// Checks the descriptor and fills in every fact the others determine. Throws InputError on contradictions.
ClassFacts resolve_facts(const SphereClassDescriptor& d, const tables::FactBase& fb = tables::FactBase::bundled());

InvariantBundle sphere_invariants(const SphereClassDescriptor& d,
                                  const tables::FactBase& fb = tables::FactBase::bundled());

}  // namespace nielsen::sphere
