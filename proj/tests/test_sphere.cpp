#include <gtest/gtest.h>

#include <algorithm>

#include "nielsen/errors.hpp"
#include "nielsen/sphere.hpp"

using namespace nielsen;
using namespace nielsen::sphere;

namespace {

ExtNat v(const Verdict& x) { return x.value.value(); }

bool traced(const Verdict& x, const std::string& id) {
  return std::find(x.trace.begin(), x.trace.end(), id) != x.trace.end();
}

SphereClassDescriptor facts(long m, long n, Truth homotopic, Truth in_susp, Truth stable, Truth hopf_james) {
  ClassFacts c;
  c.f1_homotopic_a_f2 = Fact::user(homotopic);
  c.in_suspension_image = Fact::user(in_susp);
  c.stable_suspension_nonzero = Fact::user(stable);
  c.some_stable_hopf_james_nonzero = Fact::user(hopf_james);
  return {m, n, c};
}

constexpr Truth Y = Truth::Yes, N = Truth::No, U = Truth::Unknown;

}  // namespace

TEST(Sphere, CircleDegrees) {
  const auto b = sphere_invariants({1, 1, Degrees{2, 5}});
  for (Invariant i : kAllInvariants) EXPECT_EQ(v(b.at(i)), ExtNat(3)) << invariant_symbol(i);
}

TEST(Sphere, CircleEqualDegrees) {
  const auto b = sphere_invariants({1, 1, Degrees{4, 4}});
  EXPECT_EQ(v(b.mcc), ExtNat(0));
  EXPECT_EQ(v(b.reidemeister), ExtNat::infinite());
}

TEST(Sphere, HomotopicPairsAreLoose) {
  for (long m = 1; m <= 8; ++m)
    for (long n = 2; n <= 6; ++n) {
      const auto b = sphere_invariants(facts(m, n, Y, U, U, U));
      for (Invariant i : kAllInvariants)
        EXPECT_EQ(v(b.at(i)), i == Invariant::Reidemeister ? ExtNat(1) : ExtNat(0));
    }
}

TEST(Sphere, HopfClassOddInvariant) {
  const auto b = sphere_invariants(hopf_class_3_2(1));
  EXPECT_EQ(v(b.mcc), ExtNat(1));
  EXPECT_EQ(v(b.n_sharp), ExtNat(1));
  EXPECT_EQ(v(b.n_tilde), ExtNat(1));
  EXPECT_EQ(v(b.n), ExtNat(1));
  EXPECT_EQ(v(b.n_z), ExtNat(0));
  // same through explicit facts
  const auto c = sphere_invariants(facts(3, 2, U, U, Y, U));
  EXPECT_EQ(v(c.n), ExtNat(1));
  EXPECT_EQ(v(c.n_z), ExtNat(0));
}

TEST(Sphere, WhiteheadSquare) {
  const auto b = sphere_invariants(hopf_class_3_2(2));
  EXPECT_EQ(v(b.n_tilde), ExtNat(1));
  EXPECT_EQ(v(b.n), ExtNat(0));
  EXPECT_EQ(v(b.mcc), ExtNat(1));
  const auto c = sphere_invariants(facts(3, 2, U, U, N, Y));
  EXPECT_EQ(v(c.n_tilde), ExtNat(1));
  EXPECT_EQ(v(c.n), ExtNat(0));
}

TEST(Sphere, HopfParitySplit) {
  for (long h = -7; h <= 7; ++h) {
    const auto b = sphere_invariants(hopf_class_3_2(h));
    if (h == 0) {
      EXPECT_EQ(v(b.mcc), ExtNat(0));
      continue;
    }
    EXPECT_EQ(v(b.n_tilde), ExtNat(1)) << h;
    EXPECT_EQ(v(b.n), ExtNat(h % 2 ? 1 : 0)) << h;
    EXPECT_EQ(v(b.n_z), ExtNat(0)) << h;
    EXPECT_EQ(v(b.mc), ExtNat::infinite()) << "pi_2(S^1) = 0, so no desuspension";
  }
}

TEST(Sphere, SuspensionImageDecidesMC) {
  EXPECT_EQ(v(sphere_invariants(facts(7, 4, N, Y, U, U)).mc), ExtNat(1));
  EXPECT_EQ(v(sphere_invariants(facts(7, 4, N, N, U, U)).mc), ExtNat::infinite());
  const auto b = sphere_invariants(facts(7, 4, N, U, U, U));
  EXPECT_FALSE(b.mc.value);
  EXPECT_TRUE(traced(b.mc, "needs:in_suspension_image"));
}

TEST(Sphere, PinpointResolvesSuspensionImage) {
  // pi_10(S^6) = 0, so no nonzero class of pi_11(S^7) desuspends.
  const auto b = sphere_invariants(facts(11, 7, N, U, U, U));
  EXPECT_EQ(v(b.mc), ExtNat::infinite());
  EXPECT_TRUE(traced(b.mc, "Trivial-suspension-source"));
}

TEST(Sphere, UnknownClassKeepsAgreedValues) {
  const auto b = sphere_invariants(facts(9, 4, U, U, U, U));
  EXPECT_EQ(v(b.reidemeister), ExtNat(1));
  EXPECT_EQ(v(b.n_z), ExtNat(0)) << "N^Z = 0 whenever m > n, in both branches";
  EXPECT_FALSE(b.mcc.value);
  EXPECT_TRUE(traced(b.mcc, "needs:f1_homotopic_a_f2"));
}

TEST(Sphere, EqualDimensionsUseDegrees) {
  const auto b = sphere_invariants({4, 4, Degrees{3, 1}});
  EXPECT_EQ(v(b.mcc), ExtNat(1));
  EXPECT_EQ(v(b.n_z), ExtNat(1));
  EXPECT_TRUE(traced(b.n_z, "Ex3.9-derived"));
  // deg a = -1 on S^4, so degrees 2 and -2 give [f] = 0
  EXPECT_EQ(v(sphere_invariants({4, 4, Degrees{2, -2}}).mcc), ExtNat(0));
}

TEST(Sphere, ContradictionsAreRejected) {
  EXPECT_THROW(sphere_invariants(facts(3, 2, Y, U, Y, U)), InputError);
  EXPECT_THROW(sphere_invariants(facts(7, 4, U, U, Y, N)), InputError);
  EXPECT_THROW(sphere_invariants(facts(2, 3, N, U, U, U)), InputError) << "pi_2(S^3) = 0";
  EXPECT_THROW(sphere_invariants({3, 2, Degrees{1, 1}}), InputError);
}

// Properties over every fact assignment for small dimensions.
TEST(SphereProperties, ExhaustiveFacts) {
  int consistent = 0;
  for (long m = 1; m <= 12; ++m)
    for (long n = 2; n <= 7; ++n)
      for (Truth h : {Y, N, U})
        for (Truth s : {Y, N, U})
          for (Truth st : {Y, N, U})
            for (Truth hj : {Y, N, U}) {
              InvariantBundle b;
              try {
                b = sphere_invariants(facts(m, n, h, s, st, hj));
              } catch (const InputError&) {
                continue;
              }
              ++consistent;
              EXPECT_EQ(b.mcc.value, b.n_sharp.value) << "MCC = N# for spheres";
              EXPECT_TRUE(validate_bundle(b, static_cast<unsigned long>(n)).empty());
              if (b.mcc.value && *b.mcc.value == ExtNat(1)) {
                for (const Verdict* x : {&b.n_tilde, &b.n, &b.n_z})
                  if (x->value) EXPECT_LE(*x->value, ExtNat(1));
              }
              for (Invariant i : kAllInvariants) EXPECT_NO_THROW(check_verdict(b.at(i)));
            }
  EXPECT_GT(consistent, 1000);
}
