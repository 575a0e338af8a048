#include "nielsen/wecken.hpp"

#include <algorithm>

#include "nielsen/errors.hpp"

namespace nielsen::wecken {

std::string_view to_string(TargetFamily f) {
  switch (f) {
    case TargetFamily::Sphere: return "Sphere";
    case TargetFamily::SphericalSpaceForm: return "SphericalSpaceForm";
    case TargetFamily::GeneralN: return "GeneralN";
  }
  return "";
}

TargetFamily target_family_from_string(std::string_view s) {
  if (s == "Sphere") return TargetFamily::Sphere;
  if (s == "SphericalSpaceForm") return TargetFamily::SphericalSpaceForm;
  if (s == "GeneralN") return TargetFamily::GeneralN;
  throw InputError("target_family must be \"Sphere\", \"SphericalSpaceForm\" or \"GeneralN\", got \"" +
                   std::string(s) + "\"");
}

namespace {

void check_query(const WeckenQuery& q) {
  if (q.m < 1 || q.n < 1) throw InputError("wecken: m and n must be >= 1");
  if (q.family != TargetFamily::GeneralN) return;
  if (q.facts.noncompact_or_chi_zero.no() && q.n % 2)
    throw InputError("wecken: noncompact_or_chi_zero cannot be no for odd n (closed odd-dimensional manifolds have chi = 0)");
  if (q.facts.noncompact_or_chi_zero.no() && !q.facts.closed)
    throw InputError("wecken: noncompact_or_chi_zero cannot be no for a noncompact target");
}

}  // namespace

std::vector<RuleFiring> fired_rules(const WeckenQuery& q, const tables::FactBase& fb) {
  check_query(q);
  const long m = q.m, n = q.n;
  const bool general = q.family == TargetFamily::GeneralN;
  std::vector<RuleFiring> out;

  const bool del_vanishes =
      (general && (q.facts.noncompact_or_chi_zero.yes() || !q.facts.closed)) || n % 2 == 1;
  if (del_vanishes) out.push_back({"R1", Truth::Yes, {}});

  if (m < 2 * n - 2) out.push_back({"R2", Truth::Yes, {}});

  if (m <= n + 4) {
    if (m == 10 && n == 6) {
      if (!general)
        if (auto e = fb.pinpoint(tables::pinpoint_sphere_key(10, 6)); e && e->is_trivial.yes())
          out.push_back({"R3", Truth::Yes, {"Factbase-lookup"}});
    } else {
      out.push_back({"R3", Truth::Yes, {}});
    }
  }

  if (m == n + 5) {
    if (m != 11)
      out.push_back({"R4", Truth::Yes, {}});
    else if (!general)
      out.push_back({"R4", Truth::No, {}});
  }

  if (general) return out;

  if (m == 2 * n - 2 && n % 2 == 0) {
    switch (tables::kervaire_status(n)) {
      case tables::KervaireStatus::KernelEZero: out.push_back({"R5", Truth::Yes, {}}); break;
      case tables::KervaireStatus::ExistsOrderTwoKervaireOne: out.push_back({"R5", Truth::No, {}}); break;
      case tables::KervaireStatus::Open: out.push_back({"R5", Truth::Unknown, {"HHR-open"}}); break;
      case tables::KervaireStatus::NoneExists: out.push_back({"R5", Truth::Yes, {"Browder"}}); break;
    }
  }

  if (m == 2 * n - 1) out.push_back({"R6", truth_of(!(n % 4 == 2 && n >= 6)), {}});

  if ((m == 2 * n + 2 || m == 2 * n + 3) && n != 4 && n != 6) out.push_back({"R7", Truth::Yes, {"Thm1.23"}});

  return out;
}

WeckenDecision decide_wecken(const WeckenQuery& q, const tables::FactBase& fb) {
  auto firings = fired_rules(q, fb);
  const RuleFiring* winner = nullptr;
  for (const auto& f : firings) {
    if (f.verdict == Truth::Unknown) continue;
    if (!winner) {
      winner = &f;
    } else if (winner->verdict != f.verdict) {
      throw ConsistencyError("wecken: rules " + winner->rule + " and " + f.rule + " disagree at (m, n) = (" +
                             std::to_string(q.m) + ", " + std::to_string(q.n) + ")");
    }
  }
  if (!winner && !firings.empty()) winner = &firings.front();

  WeckenDecision d;
  if (!winner) {
    d.fact = Fact::derived(Truth::Unknown, "R8");
    d.trace = {"R8"};
    return d;
  }
  d.fact = Fact::derived(winner->verdict, winner->rule);
  auto add = [&](const std::string& e) {
    if (std::find(d.trace.begin(), d.trace.end(), e) == d.trace.end()) d.trace.push_back(e);
  };
  add(winner->rule);
  for (const auto& e : winner->support) add(e);
  for (const auto& f : firings)
    if (&f != winner && f.verdict == winner->verdict) {
      add(f.rule);
      for (const auto& e : f.support) add(e);
    }
  return d;
}

Fact wecken_condition(const WeckenQuery& q, const tables::FactBase& fb) { return decide_wecken(q, fb).fact; }

Fact wecken_condition(long m, long n, TargetFamily family, const tables::FactBase& fb) {
  WeckenQuery q;
  q.m = m, q.n = n, q.family = family;
  return wecken_condition(q, fb);
}

std::vector<OverlapDisagreement> rule_overlap_scan(long max_m, long max_n, const tables::FactBase& fb) {
  std::vector<OverlapDisagreement> out;
  for (TargetFamily fam : {TargetFamily::Sphere, TargetFamily::SphericalSpaceForm, TargetFamily::GeneralN})
    for (long n = 1; n <= max_n; ++n)
      for (long m = 1; m <= max_m; ++m) {
        WeckenQuery q;
        q.m = m, q.n = n, q.family = fam;
        auto firings = fired_rules(q, fb);
        bool yes = false, no = false;
        for (const auto& f : firings) yes |= f.verdict == Truth::Yes, no |= f.verdict == Truth::No;
        if (yes && no) out.push_back({m, n, fam, firings});
      }
  return out;
}

// ---------------------------------------------------------------------------

CoincidenceProducingReport coincidence_producing_criterion(Fact del_zero, Fact j_injective, Fact j_of_del_zero) {
  const std::string rule = "Thm1.26";
  if (del_zero.yes() && j_of_del_zero.no())
    throw InputError("coincidence criterion: j_of_del_zero cannot be no when del_zero is yes");
  if (j_injective.yes() && del_zero.no() && j_of_del_zero.yes())
    throw InputError("coincidence criterion: with j injective, j_of_del_zero yes forces del_zero yes");

  if (del_zero.yes() && j_of_del_zero.unknown_()) j_of_del_zero = Fact::derived(Truth::Yes, rule);
  if (j_of_del_zero.no() && del_zero.unknown_()) del_zero = Fact::derived(Truth::No, rule);
  if (j_injective.yes()) {
    if (del_zero.unknown_() && !j_of_del_zero.unknown_()) del_zero = Fact::derived(j_of_del_zero.truth, rule);
    if (j_of_del_zero.unknown_() && !del_zero.unknown_()) j_of_del_zero = Fact::derived(del_zero.truth, rule);
  }

  CoincidenceProducingReport r;
  r.ii = del_zero;
  r.iii_double_prime = j_of_del_zero;
  r.iii_prime = j_of_del_zero.unknown_() ? j_of_del_zero : Fact::derived(j_of_del_zero.truth, rule);
  if (del_zero.yes())
    r.iii = Fact::derived(Truth::Yes, rule);
  else if (j_of_del_zero.no())
    r.iii = Fact::derived(Truth::No, rule);
  else if (j_injective.yes())
    r.iii = Fact::derived(del_zero.truth, rule);
  else
    r.iii = Fact::derived(Truth::Unknown, rule);

  r.implications = {"(ii) => (iii)", "(iii) => (iii')", "(iii') <=> (iii'')"};
  if (j_injective.yes()) r.implications.push_back("(ii) <=> (iii'') since j_N* is injective");
  return r;
}

RestrictionReport nsharp_restrictions(const NSharpTarget& t) {
  if (t.m < 1 || t.n < 1) throw InputError("nsharp_restrictions: m and n must be >= 1");
  RestrictionReport r;

  // (a)
  const bool surface_case = t.m == 2 && t.n == 2 && !t.target_is_s2_or_rp2.no();
  if (!surface_case && !(t.n % 2 == 0 && t.m >= t.n && t.n >= 4))
    r.violated.push_back("(a) requires n even and m >= n >= 4, or m = 2 with N = S^2 or RP(2)");

  // (b)
  if (t.pi1_size && *t.pi1_size == ExtNat(2) && t.orientable.yes())
    r.violated.push_back("(b) pi_1(N) = Z/2 requires N nonorientable");
  else if (t.pi1_size && *t.pi1_size > ExtNat(2))
    r.violated.push_back("(b) requires pi_1(N) trivial or Z/2");

  // (c)
  if (!t.closed)
    r.violated.push_back("(c) requires N closed");
  else if (t.chi_zero.yes())
    r.violated.push_back("(c) requires chi(N) != 0");
  else if (t.e_del_nonzero.no())
    r.violated.push_back("(c) requires E o del_N to be nonzero");

  // (d)
  if (t.no_fixed_point_free_selfmap.no()) r.violated.push_back("(d) requires N to admit no fixed point free selfmap");

  r.possible = Fact::derived(r.violated.empty() ? Truth::Unknown : Truth::No, "Thm1.33");
  return r;
}

std::vector<ExtNat> nielsen_value_set(const ExtNat& pi1_count, const Fact& restrictions_ok) {
  if (pi1_count.is_zero()) throw InputError("nielsen_value_set: pi_1 has at least one element");
  std::vector<ExtNat> v = {ExtNat(0)};
  if (!restrictions_ok.no()) v.push_back(ExtNat(1));
  if (pi1_count.is_finite()) v.push_back(pi1_count);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Fact fixed_point_wecken(long dim, const BigInt& chi) {
  if (dim < 1) throw InputError("fixed_point_wecken: dim must be >= 1");
  return Fact::derived(truth_of(!(dim == 2 && chi < 0)), "Ex3.9");
}

Fact nsharp_zero_of_sum(const Fact& a_zero, const Fact& b_zero) {
  if (a_zero.yes() && b_zero.yes()) return Fact::derived(Truth::Yes, "Lem7.4");
  if ((a_zero.yes() && b_zero.no()) || (a_zero.no() && b_zero.yes())) return Fact::derived(Truth::No, "Lem7.4");
  return Fact::derived(Truth::Unknown, "Lem7.4");
}

}  // namespace nielsen::wecken
