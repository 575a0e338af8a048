#include <gtest/gtest.h>

#include <algorithm>

#include "nielsen/errors.hpp"
#include "nielsen/spaceform.hpp"
#include "nielsen/wecken.hpp"
#include "oracles.hpp"

using namespace nielsen;
using namespace nielsen::wecken;

namespace {

constexpr Truth Y = Truth::Yes, N = Truth::No, U = Truth::Unknown;

Truth w(long m, long n, TargetFamily f = TargetFamily::Sphere) { return wecken_condition(m, n, f).truth; }

std::vector<std::string> trace(long m, long n) {
  WeckenQuery q;
  q.m = m, q.n = n;
  return decide_wecken(q).trace;
}

bool has(const std::vector<std::string>& t, const std::string& e) { return std::find(t.begin(), t.end(), e) != t.end(); }

}  // namespace

TEST(Wecken, Examples) {
  EXPECT_EQ(w(11, 6), N);
  EXPECT_TRUE(has(trace(11, 6), "R4"));
  EXPECT_EQ(w(30, 16), N);
  EXPECT_EQ(w(10, 6), Y);
  EXPECT_TRUE(has(trace(10, 6), "Factbase-lookup"));
  EXPECT_EQ(w(7, 5), Y);
}

TEST(Wecken, KervaireRow) {
  for (long n : {16, 32, 64}) EXPECT_EQ(w(2 * n - 2, n), N) << n;
  for (long n : {2, 4, 8}) EXPECT_EQ(w(2 * n - 2, n), Y) << n;
  EXPECT_EQ(w(254, 128), U);
  EXPECT_TRUE(has(trace(254, 128), "HHR-open"));
  EXPECT_EQ(w(22, 12), Y);
  EXPECT_TRUE(has(trace(22, 12), "Browder"));
}

TEST(Wecken, HopfRow) {
  for (long n = 2; n <= 64; n += 2) EXPECT_EQ(w(2 * n - 1, n), (n % 4 == 2 && n >= 6) ? N : Y) << n;
}

TEST(Wecken, UncoveredIsUnknownWithR8) {
  // m = 2n + 1, n even: not among the encoded rules
  EXPECT_EQ(w(13, 6), U);
  EXPECT_EQ(trace(13, 6), std::vector<std::string>{"R8"});
  EXPECT_EQ(w(25, 12), U);
}

TEST(Wecken, CatalogueOverRuleRegion) {
  for (long n = 1; n <= 64; ++n)
    for (long m = 1; m <= 64; ++m) {
      const auto expect = oracle::wecken_catalogue(m, n);
      const Truth got = w(m, n);
      if (!expect)
        EXPECT_EQ(got, U) << m << "," << n;
      else
        EXPECT_EQ(got, *expect ? Y : N) << m << "," << n;
    }
}

TEST(Wecken, OverlapScanIsClean) { EXPECT_TRUE(rule_overlap_scan(64, 64).empty()); }

TEST(Wecken, CoveringInvariance) {
  for (long n = 1; n <= 64; ++n)
    for (long m = 1; m <= 140; ++m)
      EXPECT_EQ(w(m, n, TargetFamily::Sphere), w(m, n, TargetFamily::SphericalSpaceForm)) << m << "," << n;
}

TEST(Wecken, GeneralTargets) {
  WeckenQuery q;
  q.m = 40, q.n = 10, q.family = TargetFamily::GeneralN;
  EXPECT_EQ(wecken_condition(q).truth, U);
  q.facts.noncompact_or_chi_zero = Fact::user(Y);
  EXPECT_EQ(wecken_condition(q).truth, Y);
  EXPECT_EQ(decide_wecken(q).trace.front(), "R1");
  q.facts = {};
  q.facts.closed = false;
  EXPECT_EQ(wecken_condition(q).truth, Y);
  q.facts = {};
  q.m = 11, q.n = 6;
  EXPECT_EQ(wecken_condition(q).truth, U) << "the (11,6) failure is specific to spheres";
  q.facts.noncompact_or_chi_zero = Fact::user(N);
  q.n = 7;
  EXPECT_THROW(wecken_condition(q), InputError);
}

// No descriptor at a Wecken pair can land in the exception branch.
TEST(Wecken, ExceptionUnreachableWhereConditionHolds) {
  int pairs = 0;
  for (long m = 1; m <= 40; ++m)
    for (long n = 2; n <= 40; ++n) {
      if (w(m, n, TargetFamily::SphericalSpaceForm) != Y) continue;
      ++pairs;
      for (long g : {2, 3})
        for (Truth h : {Y, N, U})
          for (Truth del : {Y, N, U})
            for (Truth edel : {Y, N, U}) {
              spaceform::SpaceFormPairDescriptor d;
              d.m = m, d.n = n, d.group_order = g;
              d.homotopic = Fact::user(h);
              d.del_zero = Fact::user(del);
              d.e_del_zero = Fact::user(edel);
              InvariantBundle b;
              try {
                b = spaceform::spaceform_pair_invariants(d);
              } catch (const InputError&) {
                continue;
              }
              if (b.mcc.value && b.n_sharp.value) EXPECT_EQ(*b.mcc.value, *b.n_sharp.value) << m << "," << n;
              EXPECT_FALSE(has(b.mcc.trace, "Thm1.10-exception")) << m << "," << n;
            }
    }
  EXPECT_GT(pairs, 500);
}

TEST(CoincidenceProducing, Examples) {
  auto r = coincidence_producing_criterion(Fact::user(Y), Fact::user(U), Fact::user(U));
  for (const Fact* f : {&r.ii, &r.iii, &r.iii_prime, &r.iii_double_prime}) EXPECT_TRUE(f->yes());

  r = coincidence_producing_criterion(Fact::user(N), Fact::user(Y), Fact::user(U));
  EXPECT_TRUE(r.ii.no());
  EXPECT_TRUE(r.iii_prime.no());

  r = coincidence_producing_criterion(Fact::user(N), Fact::user(N), Fact::user(Y));
  EXPECT_TRUE(r.iii_prime.yes());
  EXPECT_TRUE(r.ii.no());
  EXPECT_TRUE(r.iii.unknown_());
}

TEST(CoincidenceProducing, ImplicationsHoldEverywhere) {
  for (Truth a : {Y, N, U})
    for (Truth b : {Y, N, U})
      for (Truth c : {Y, N, U}) {
        CoincidenceProducingReport r;
        try {
          r = coincidence_producing_criterion(Fact::user(a), Fact::user(b), Fact::user(c));
        } catch (const InputError&) {
          continue;
        }
        EXPECT_EQ(r.iii_prime.truth, r.iii_double_prime.truth);
        if (r.ii.yes()) EXPECT_TRUE(r.iii.yes());
        if (r.iii.yes()) EXPECT_TRUE(r.iii_prime.yes());
        if (r.iii_prime.no()) EXPECT_TRUE(r.iii.no());
        if (b == Y && !r.ii.unknown_()) EXPECT_EQ(r.ii.truth, r.iii_double_prime.truth);
      }
}

TEST(NSharpRestrictions, Examples) {
  NSharpTarget t;
  t.m = 9, t.n = 5;
  EXPECT_TRUE(nsharp_restrictions(t).possible.no());

  t = {};
  t.m = 9, t.n = 4, t.pi1_size = ExtNat(3);
  EXPECT_TRUE(nsharp_restrictions(t).possible.no());

  t = {};
  t.m = 7, t.n = 4, t.pi1_size = ExtNat(2), t.orientable = Fact::user(N), t.chi_zero = Fact::user(N);
  const auto r = nsharp_restrictions(t);
  EXPECT_TRUE(r.possible.unknown_());
  EXPECT_TRUE(r.violated.empty());
}

TEST(NSharpRestrictions, NeverYes) {
  for (long m = 1; m <= 12; ++m)
    for (long n = 1; n <= 8; ++n)
      for (long pi : {1, 2, 3})
        for (Truth o : {Y, N, U})
          for (Truth chi : {Y, N, U}) {
            NSharpTarget t;
            t.m = m, t.n = n, t.pi1_size = ExtNat(pi), t.orientable = Fact::user(o), t.chi_zero = Fact::user(chi);
            EXPECT_FALSE(nsharp_restrictions(t).possible.yes());
          }
}

TEST(NSharpRestrictions, ShippedWitnessesStayOpen) {
  const auto& ws = tables::FactBase::bundled().witnesses();
  ASSERT_FALSE(ws.empty());
  for (const auto& wt : ws)
    for (int n : wt.n_values) {
      ASSERT_EQ(wt.target, "RP");
      ASSERT_EQ(wt.m, "2n-1");
      NSharpTarget t;
      t.m = 2 * n - 1, t.n = n, t.pi1_size = ExtNat(2), t.orientable = Fact::user(N), t.chi_zero = Fact::user(N);
      EXPECT_FALSE(nsharp_restrictions(t).possible.no()) << n;
    }
}

TEST(NielsenValueSet, Examples) {
  EXPECT_EQ(nielsen_value_set(5, Fact::user(N)), (std::vector<ExtNat>{0, 5}));
  EXPECT_EQ(nielsen_value_set(2, Fact::user(U)), (std::vector<ExtNat>{0, 1, 2}));
  EXPECT_EQ(nielsen_value_set(1, Fact::user(U)), (std::vector<ExtNat>{0, 1}));
  EXPECT_EQ(nielsen_value_set(1, Fact::user(N)), (std::vector<ExtNat>{0, 1}));
  EXPECT_EQ(nielsen_value_set(ExtNat::infinite(), Fact::user(N)), (std::vector<ExtNat>{0}));
}

TEST(FixedPoint, Examples) {
  EXPECT_TRUE(fixed_point_wecken(2, -2).no());
  EXPECT_TRUE(fixed_point_wecken(2, 0).yes());
  for (long chi = -5; chi <= 5; ++chi) EXPECT_TRUE(fixed_point_wecken(3, chi).yes());
  EXPECT_EQ(provenance_trace(fixed_point_wecken(2, -2)), std::vector<std::string>{"Ex3.9"});
}

TEST(SumOfRootClasses, Lemma) {
  EXPECT_TRUE(nsharp_zero_of_sum(Fact::user(Y), Fact::user(Y)).yes());
  EXPECT_TRUE(nsharp_zero_of_sum(Fact::user(Y), Fact::user(N)).no());
  EXPECT_TRUE(nsharp_zero_of_sum(Fact::user(N), Fact::user(N)).unknown_());
}
