#include "nielsen/sphere.hpp"

#include <string>

#include "nielsen/errors.hpp"

namespace nielsen::sphere {

namespace {

// [f] = d1 - deg(a) d2 with deg(a) = (-1)^(n+1).
BigInt degree_class(const Degrees& g, long n) { return n % 2 ? BigInt(g.d1 - g.d2) : BigInt(g.d1 + g.d2); }

void set_if_unknown(Fact& f, Truth t, const std::string& rule, const char* name, const std::string& why) {
  if (f.unknown_()) {
    f = Fact::derived(t, rule);
  } else if (f.truth != t) {
    throw InputError(std::string("sphere: ") + name + " must be " + std::string(to_string(t)) + " (" + why + ")");
  }
}

}  // namespace

SphereClassDescriptor hopf_class_3_2(const BigInt& h) {
  ClassFacts c;
  const std::string rule = "Hopf-invariant-3-2";
  c.f1_homotopic_a_f2 = Fact::derived(truth_of(h == 0), rule);
  c.stable_suspension_nonzero = Fact::derived(truth_of(mpz_odd_p(h.get_mpz_t())), rule);
  c.some_stable_hopf_james_nonzero = Fact::derived(truth_of(h != 0), rule);
  c.in_suspension_image = Fact::derived(truth_of(h == 0), rule);
  return {3, 2, c};
}

ClassFacts resolve_facts(const SphereClassDescriptor& d, const tables::FactBase& fb) {
  if (d.m < 1 || d.n < 1) throw InputError("sphere: dimensions must be >= 1");

  if (const auto* g = std::get_if<Degrees>(&d.mode)) {
    if (d.m != d.n) throw InputError("sphere: degrees describe maps only when m = n");
    const BigInt f = degree_class(*g, d.n);
    ClassFacts c;
    const std::string rule = "Degree-classes";
    c.f1_homotopic_a_f2 = Fact::derived(truth_of(f == 0), rule);
    if (d.n >= 2) {
      c.in_suspension_image = Fact::derived(Truth::Yes, rule);
      c.stable_suspension_nonzero = Fact::derived(truth_of(f != 0), rule);
      c.some_stable_hopf_james_nonzero = Fact::derived(truth_of(f != 0), rule);
    }
    return c;
  }

  ClassFacts c = std::get<ClassFacts>(d.mode);
  if (d.m < d.n || (d.n == 1 && d.m >= 2))
    set_if_unknown(c.f1_homotopic_a_f2, Truth::Yes, "Freudenthal-bound", "f1_homotopic_a_f2", "pi_m(S^n) = 0");

  if (c.f1_homotopic_a_f2.yes()) {
    const char* why = "[f] = 0";
    set_if_unknown(c.stable_suspension_nonzero, Truth::No, "Thm1.7(d)", "stable_suspension_nonzero", why);
    set_if_unknown(c.some_stable_hopf_james_nonzero, Truth::No, "Thm1.7(d)", "some_stable_hopf_james_nonzero", why);
    set_if_unknown(c.in_suspension_image, Truth::Yes, "Thm1.7(d)", "in_suspension_image", why);
    return c;
  }

  // The first Hopf-James invariant is the stable suspension.
  if (c.stable_suspension_nonzero.yes())
    set_if_unknown(c.some_stable_hopf_james_nonzero, Truth::Yes, "Thm1.7(e)", "some_stable_hopf_james_nonzero",
                   "stable_suspension_nonzero is yes");
  if (c.some_stable_hopf_james_nonzero.no())
    set_if_unknown(c.stable_suspension_nonzero, Truth::No, "Thm1.7(e)", "stable_suspension_nonzero",
                   "some_stable_hopf_james_nonzero is no");
  if (c.stable_suspension_nonzero.yes() || c.some_stable_hopf_james_nonzero.yes() || c.in_suspension_image.no())
    set_if_unknown(c.f1_homotopic_a_f2, Truth::No, "Thm1.7(e)", "f1_homotopic_a_f2", "a nonzero invariant of [f]");

  if (d.m == d.n && d.n >= 2) {
    const char* why = "E and E^inf are isomorphisms on pi_n(S^n)";
    set_if_unknown(c.in_suspension_image, Truth::Yes, "Degree-classes", "in_suspension_image", why);
    if (!c.f1_homotopic_a_f2.unknown_()) {
      Truth nz = !c.f1_homotopic_a_f2.truth;
      set_if_unknown(c.stable_suspension_nonzero, nz, "Degree-classes", "stable_suspension_nonzero", why);
      set_if_unknown(c.some_stable_hopf_james_nonzero, nz, "Degree-classes", "some_stable_hopf_james_nonzero", why);
    }
  }

  if (c.f1_homotopic_a_f2.no() && c.in_suspension_image.unknown_() && d.m > d.n && d.n >= 2) {
    if (auto e = fb.pinpoint(tables::pinpoint_sphere_key(d.m - 1, d.n - 1)); e && e->is_trivial.yes())
      c.in_suspension_image = Fact::derived(Truth::No, "Trivial-suspension-source");
  }
  return c;
}

namespace {

InvariantBundle nonzero_branch(const SphereClassDescriptor& d, const ClassFacts& c) {
  InvariantBundle b;
  b.reidemeister = Verdict::known(1, {"Thm1.7(a)"});
  b.mcc = b.n_sharp = Verdict::known(1, {"Thm1.7(c)", "Thm1.7(a)"});

  auto with = [](const Fact& f, std::vector<std::string> t) {
    for (auto& e : provenance_trace(f)) t.push_back(e);
    return t;
  };
  const Fact& in_susp = c.in_suspension_image;
  if (in_susp.yes())
    b.mc = Verdict::known(1, with(in_susp, {"Thm1.7(b)"}));
  else if (in_susp.no())
    b.mc = Verdict::known(ExtNat::infinite(), with(in_susp, {"Thm1.7(b)"}));
  else
    b.mc = Verdict::unknown({"Thm1.7(b)", needs("in_suspension_image")});

  auto indicator = [&](const Fact& f, const char* name) {
    if (f.unknown_()) return Verdict::unknown({"Thm1.7(e)", needs(name)});
    return Verdict::known(f.yes() ? 1 : 0, with(f, {"Thm1.7(e)"}));
  };
  b.n_tilde = indicator(c.some_stable_hopf_james_nonzero, "some_stable_hopf_james_nonzero");
  b.n = indicator(c.stable_suspension_nonzero, "stable_suspension_nonzero");
  b.n_z = d.m > d.n ? Verdict::known(0, {"Thm1.7(e)"}) : Verdict::known(1, {"Ex3.9-derived"});
  return b;
}

InvariantBundle zero_branch(const SphereClassDescriptor& d) {
  InvariantBundle b;
  b.reidemeister = d.n >= 2 ? Verdict::known(1, {"Thm1.7(a)"}) : Verdict::known(ExtNat::infinite(), {"Thm1.7(a)"});
  b.mc = Verdict::known(0, {"Thm1.7(b)"});
  b.mcc = b.n_sharp = Verdict::known(0, {"Thm1.7(c)"});
  b.n_tilde = b.n = b.n_z = Verdict::known(0, {"Thm1.7(d)"});
  return b;
}

}  // namespace

InvariantBundle sphere_invariants(const SphereClassDescriptor& d, const tables::FactBase& fb) {
  const ClassFacts c = resolve_facts(d, fb);

  if (d.n == 1) {
    if (c.f1_homotopic_a_f2.yes()) return zero_branch(d);
    const auto* g = std::get_if<Degrees>(&d.mode);
    if (!g) {
      InvariantBundle b;
      for (Invariant i : kAllInvariants) b.at(i) = Verdict::unknown({"Thm1.7(a)", needs("degrees")});
      return b;
    }
    const ExtNat diff = ExtNat::finite(abs(g->d1 - g->d2));
    InvariantBundle b;
    b.reidemeister = Verdict::known(diff, {"Thm1.7(a)"});
    for (Invariant i : kAllInvariants)
      if (i != Invariant::Reidemeister) b.at(i) = Verdict::known(diff, {"Thm1.7(b)", "Thm1.7(d)"});
    return b;
  }

  if (c.f1_homotopic_a_f2.yes()) return zero_branch(d);
  if (c.f1_homotopic_a_f2.no()) return nonzero_branch(d, c);
  return merge_branches(zero_branch(d), nonzero_branch(d, c), "f1_homotopic_a_f2");
}

}  // namespace nielsen::sphere
