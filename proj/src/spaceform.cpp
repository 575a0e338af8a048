#include "nielsen/spaceform.hpp"

#include "nielsen/errors.hpp"
#include "nielsen/wecken.hpp"

namespace nielsen::spaceform {

namespace {

using Desc = SpaceFormPairDescriptor;

void force(Fact& f, Truth t, const char* rule, const char* name, const char* why) {
  if (f.unknown_()) {
    f = Fact::derived(t, rule);
  } else if (f.truth != t) {
    throw InputError(std::string("spaceform: ") + name + " must be " + std::string(to_string(t)) + " (" + why + ")");
  }
}

bool kervaire_setting(const Desc& d) {
  return d.m == 2 * d.n - 2 && d.n % 2 == 0 && d.n != 2 && d.n != 4 && d.n != 8 && d.group_order == 2;
}

bool hopf_setting(const Desc& d) { return d.m == 2 * d.n - 1 && d.n % 4 == 2 && d.n >= 6 && d.group_order == 2; }

Desc resolve_basic(Desc d, const tables::FactBase& fb) {
  if (d.m < 1 || d.n < 1) throw InputError("spaceform: m and n must be >= 1");
  if (d.group_order < 1) throw InputError("spaceform: group_order must be >= 1");
  if (d.group_order == 1) throw InputError("spaceform: group_order = 1 is a sphere target; use the sphere family");
  if (d.n == 1) throw InputError("spaceform: S^1/G is a circle; use the sphere family");
  if (d.group_order >= 3 && d.n % 2 == 0)
    throw InputError("spaceform: no group of order >= 3 acts freely on an even-dimensional sphere");
  if (d.hopf_mod4) {
    if (*d.hopf_mod4 < 0 || *d.hopf_mod4 > 3) throw InputError("spaceform: hopf_mod4 must be in {0,1,2,3}");
    if (*d.hopf_mod4 % 2) throw InputError("spaceform: hopf_mod4 must be even (H maps onto 2Z)");
    if (d.m != 2 * d.n - 1) throw InputError("spaceform: hopf_mod4 is meaningful only when m = 2n-1");
  }
  if (!d.kervaire_one.unknown_() && d.m != 2 * d.n - 2)
    throw InputError("spaceform: kervaire_one is meaningful only when m = 2n-2");
  if (d.m == 2 * d.n - 2 && d.n % 2 == 0 && tables::kervaire_status(d.n) == tables::KervaireStatus::NoneExists)
    force(d.kervaire_one, Truth::No, "Browder", "kervaire_one", "no Kervaire invariant one element in this dimension");

  if (d.m < d.n) {
    force(d.del_zero, Truth::Yes, "Del-low-dim", "del_zero", "pi_{m-1}(S^{n-1}) = 0");
    if (d.m >= 2) force(d.homotopic, Truth::Yes, "Freudenthal-bound", "homotopic", "pi_m(N) = 0");
  }
  if (d.n % 2) force(d.del_zero, Truth::Yes, "Thm1.15-oddn", "del_zero", "n odd gives chi(N) = 0");
  if (d.del_zero.yes()) force(d.e_del_zero, Truth::Yes, "Thm1.15", "e_del_zero", "del_zero is yes");
  if (d.e_del_zero.no()) force(d.del_zero, Truth::No, "Thm1.15", "del_zero", "e_del_zero is no");

  if (wecken::wecken_condition(d.m, d.n, wecken::TargetFamily::SphericalSpaceForm, fb).yes()) {
    if (d.e_del_zero.yes())
      force(d.del_zero, Truth::Yes, "Wecken-holds", "del_zero", "the Wecken condition holds at (m, n)");
    if (d.del_zero.no())
      force(d.e_del_zero, Truth::No, "Wecken-holds", "e_del_zero", "the Wecken condition holds at (m, n)");
  }

  if (d.homotopic.yes() || d.m < d.n)
    force(d.in_psE_image, Truth::Yes, "Prop4.3", "in_psE_image", "the difference class is 0");
  if (d.in_psE_image.no()) force(d.homotopic, Truth::No, "Prop4.3", "homotopic", "in_psE_image is no");
  if (d.m == 4 && d.n == 3 && d.homotopic.no() && d.in_psE_image.unknown_())
    d.in_psE_image = Fact::derived(truth_of(d.group_order <= 2), "Prop4.3-special");
  return d;
}

Fact kervaire_looseness(const Desc& d) {
  if (tables::kervaire_status(d.n) == tables::KervaireStatus::Open)
    return d.e_del_zero.no() ? Fact::derived(Truth::No, "Thm1.15") : Fact::derived(Truth::Unknown, "HHR-open");
  Fact k0 = d.kervaire_one.unknown_() ? d.kervaire_one : Fact::user(!d.kervaire_one.truth);
  return Fact::derived(combine_and({d.e_del_zero, k0}).truth, "Thm1.20");
}

Fact hopf_looseness(const Desc& d) {
  return Fact::derived(combine_and({d.e_del_zero, Fact::user(truth_of(*d.hopf_mod4 == 0))}).truth, "Thm1.22");
}

InvariantBundle evaluate(const Desc& r, const tables::FactBase& fb);

// Evaluates both completions of an Unknown fact; an inconsistent completion is dropped.
InvariantBundle split(const Desc& r, Fact Desc::*field, const char* name, const tables::FactBase& fb) {
  std::vector<InvariantBundle> branches;
  for (Truth t : {Truth::Yes, Truth::No}) {
    Desc c = r;
    c.*field = Fact::user(t);
    try {
      branches.push_back(evaluate(resolve(c, fb), fb));
    } catch (const InputError&) {
    }
  }
  if (branches.empty()) throw ConsistencyError(std::string("spaceform: no consistent value for ") + name);
  if (branches.size() == 1) return branches.front();
  return merge_branches(branches[0], branches[1], name);
}

Verdict mc_odd(const Desc& r) {
  if (r.m < r.n || r.homotopic.yes()) return Verdict::known(0, {"Prop4.3"});
  auto with = [&](std::vector<std::string> t) {
    for (auto& e : provenance_trace(r.in_psE_image)) t.push_back(e);
    return t;
  };
  if (r.in_psE_image.no()) return Verdict::known(ExtNat::infinite(), with({"Prop4.3"}));
  if (r.in_psE_image.yes() && r.homotopic.no()) return Verdict::known(ExtNat::finite(r.group_order), with({"Prop4.3"}));
  std::vector<std::string> t = {"Prop4.3"};
  if (r.homotopic.unknown_()) t.push_back(needs("homotopic"));
  if (r.in_psE_image.unknown_()) t.push_back(needs("in_psE_image"));
  return Verdict::unknown(t);
}

InvariantBundle evaluate(const Desc& r, const tables::FactBase& fb) {
  if (r.m >= r.n) {
    if (r.homotopic.unknown_()) return split(r, &Desc::homotopic, "homotopic", fb);
    if (r.homotopic.yes() && r.e_del_zero.unknown_()) return split(r, &Desc::e_del_zero, "e_del_zero", fb);
    if (r.homotopic.yes() && r.e_del_zero.yes() && r.del_zero.unknown_())
      return split(r, &Desc::del_zero, "del_zero", fb);
  }

  InvariantBundle b;
  const ExtNat order = ExtNat::finite(r.group_order);
  b.reidemeister = r.m >= 2 ? Verdict::known(order, {"Thm1.10"}) : Verdict::unknown();

  if (r.m < r.n) {
    b.mcc = b.n_sharp = Verdict::known(0, {"Thm1.10"});
  } else if (r.homotopic.yes()) {
    if (r.e_del_zero.no()) {
      b.mcc = b.n_sharp = Verdict::known(1, {"Thm1.10"});
    } else if (r.del_zero.yes()) {
      b.mcc = b.n_sharp = Verdict::known(0, {"Thm1.10", "Thm1.15"});
    } else {
      b.mcc = Verdict::known(1, {"Thm1.10-exception", "Cor1.19"});
      b.n_sharp = Verdict::known(0, {"Thm1.10"});
    }
  } else {
    b.mcc = b.n_sharp = Verdict::known(order, {"Thm1.10"});
  }

  if (b.n_sharp.value && b.n_sharp.value->is_zero())
    b.n_tilde = b.n = b.n_z = Verdict::known(0, {"Thm3.6(iii)"});
  else
    b.n_tilde = b.n = b.n_z = Verdict::unknown({"Prop7.2-valueset"});

  if (b.mcc.value && b.mcc.value->is_zero()) {
    b.mc = Verdict::known(0, {"Loose-pair"});
  } else if (r.homotopic.yes()) {
    auto t = b.mcc.trace;
    t.insert(t.begin(), "Thm1.15");
    b.mc = Verdict::known(*b.mcc.value, t);
  } else if (r.n % 2 == 1) {
    b.mc = mc_odd(r);
  } else {
    b.mc = Verdict::unknown();
  }
  return b;
}

}  // namespace

SpaceFormPairDescriptor resolve(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  Desc r = resolve_basic(d, fb);
  if (kervaire_setting(r)) {
    Fact loose = kervaire_looseness(r);
    if (!loose.unknown_()) {
      force(r.del_zero, loose.truth, "Thm1.20", "del_zero", "looseness in the Kervaire setting");
      r = resolve_basic(r, fb);
    }
  }
  if (hopf_setting(r) && r.hopf_mod4) {
    Fact loose = hopf_looseness(r);
    if (!loose.unknown_()) {
      force(r.del_zero, loose.truth, "Thm1.22", "del_zero", "looseness in the Hopf setting");
      r = resolve_basic(r, fb);
    }
  }
  return r;
}

InvariantBundle spaceform_pair_invariants(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  return evaluate(resolve(d, fb), fb);
}

SelfCoincidenceReport selfcoincidence_chain(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  Desc r = resolve(d, fb);
  if (!r.homotopic.yes()) throw InputError("selfcoincidence_chain requires homotopic = yes");
  SelfCoincidenceReport s;
  const char* rule = "Thm1.15";
  s.i_del_zero = r.del_zero;
  s.ii_loose_small = Fact::derived(r.del_zero.truth, rule);
  s.v_e_del_zero = r.e_del_zero;
  s.iv_nsharp_zero = Fact::derived(r.e_del_zero.truth, rule);
  s.iii_iff_iv = r.group_order != 2;
  if (r.del_zero.yes())
    s.iii_loose = Fact::derived(Truth::Yes, rule);
  else if (r.e_del_zero.no())
    s.iii_loose = Fact::derived(Truth::No, rule);
  else if (s.iii_iff_iv)
    s.iii_loose = Fact::derived(r.e_del_zero.truth, rule);
  else
    s.iii_loose = Fact::derived(Truth::Unknown, rule);
  s.implications = {"(i) <=> (ii)", "(ii) => (iii)", "(iii) => (iv)", "(iv) <=> (v)"};
  if (s.iii_iff_iv) s.implications.push_back("(iii) <=> (iv) since #G != 2");
  return s;
}

Fact kervaire_case(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  if (d.m != 2 * d.n - 2 || d.n % 2 != 0) throw InputError("kervaire_case requires m = 2n-2 with n even");
  if (d.n == 2 || d.n == 4 || d.n == 8) throw InputError("kervaire_case excludes n = 2, 4, 8");
  if (d.group_order != 2) throw InputError("kervaire_case requires group_order = 2");
  return kervaire_looseness(resolve_basic(d, fb));
}

Fact hopf_case(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  if (!(d.m == 2 * d.n - 1 && d.n % 4 == 2 && d.n >= 6))
    throw InputError("hopf_case requires m = 2n-1 with n = 2 (mod 4) and n >= 6");
  if (d.group_order != 2) throw InputError("hopf_case requires group_order = 2");
  if (!d.hopf_mod4) throw InputError("hopf_case requires hopf_mod4");
  return hopf_looseness(resolve_basic(d, fb));
}

Verdict spaceform_mc(const SpaceFormPairDescriptor& d, const tables::FactBase& fb) {
  if (d.n % 2 == 0 || d.n < 3) throw InputError("spaceform_mc requires odd n >= 3");
  return mc_odd(resolve(d, fb));
}

}  // namespace nielsen::spaceform
