#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nielsen/tables.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::wecken {

enum class TargetFamily { Sphere, SphericalSpaceForm, GeneralN };
std::string_view to_string(TargetFamily f);
TargetFamily target_family_from_string(std::string_view s);

// Only consulted for GeneralN.
struct GeneralNFacts {
  Fact noncompact_or_chi_zero = Fact::unknown();
  std::optional<ExtNat> pi1_size;
  Fact orientable = Fact::unknown();
  bool closed = true;
};

struct WeckenQuery {
  long m = 1;
  long n = 1;
  TargetFamily family = TargetFamily::Sphere;
  GeneralNFacts facts;
};

struct RuleFiring {
  std::string rule;                  // "R1".."R7"
  Truth verdict = Truth::Unknown;
  std::vector<std::string> support;  // further trace entries
};

// Every rule among R1..R7 whose hypothesis holds, in rule order.
std::vector<RuleFiring> fired_rules(const WeckenQuery& q, const tables::FactBase& fb = tables::FactBase::bundled());

struct WeckenDecision {
  Fact fact;                       // provenance: the deciding rule
  std::vector<std::string> trace;  // deciding rule first, then agreeing rules and support
};

// First definite firing wins; throws ConsistencyError if two firings disagree. No firing: R8, Unknown.
WeckenDecision decide_wecken(const WeckenQuery& q, const tables::FactBase& fb = tables::FactBase::bundled());
Fact wecken_condition(const WeckenQuery& q, const tables::FactBase& fb = tables::FactBase::bundled());
Fact wecken_condition(long m, long n, TargetFamily family = TargetFamily::Sphere,
                      const tables::FactBase& fb = tables::FactBase::bundled());

struct OverlapDisagreement {
  long m = 0, n = 0;
  TargetFamily family = TargetFamily::Sphere;
  std::vector<RuleFiring> firings;
};

// Scans 1 <= m <= max_m, 1 <= n <= max_n for all three families (GeneralN with unknown facts).
std::vector<OverlapDisagreement> rule_overlap_scan(long max_m, long max_n,
                                                   const tables::FactBase& fb = tables::FactBase::bundled());

// ---------------------------------------------------------------------------

struct CoincidenceProducingReport {
  Fact ii;                // del_N[f] = 0, i.e. loose by small deformation
  Fact iii;               // MCC = 0
  Fact iii_prime;         // j_N* del_N[f] = 0 ... the weaker condition
  Fact iii_double_prime;  // j_of_del_zero
  std::vector<std::string> implications;
};

CoincidenceProducingReport coincidence_producing_criterion(Fact del_zero, Fact j_injective, Fact j_of_del_zero);

struct NSharpTarget {
  long m = 1;
  long n = 1;
  std::optional<ExtNat> pi1_size;
  Fact orientable = Fact::unknown();
  bool closed = true;
  Fact chi_zero = Fact::unknown();
  Fact e_del_nonzero = Fact::unknown();               // E o del_N not identically 0
  Fact target_is_s2_or_rp2 = Fact::unknown();         // only read when m = n = 2
  Fact no_fixed_point_free_selfmap = Fact::unknown();  // restriction (d), caller-supplied
};

struct RestrictionReport {
  Fact possible;                  // "N#(f,f) != 0 is possible": No or Unknown, never Yes
  std::vector<std::string> violated;  // "(a) ...", "(b) ..."
};

RestrictionReport nsharp_restrictions(const NSharpTarget& t);

// Possible values of the Nielsen numbers of a root or selfcoincidence pair; ascending.
std::vector<ExtNat> nielsen_value_set(const ExtNat& pi1_count, const Fact& restrictions_ok);

Fact fixed_point_wecken(long dim, const BigInt& chi);

// N# of a sum of root classes, from the N#-vanishing of the summands.
Fact nsharp_zero_of_sum(const Fact& a_zero, const Fact& b_zero);

}  // namespace nielsen::wecken
