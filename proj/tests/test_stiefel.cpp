#include <gtest/gtest.h>

#include <algorithm>

#include "nielsen/errors.hpp"
#include "nielsen/stiefel.hpp"
#include "oracles.hpp"

using namespace nielsen;
using namespace nielsen::stiefel;

namespace {

ExtNat v(const Verdict& x) { return x.value.value(); }

bool traced(const Verdict& x, const std::string& id) {
  return std::find(x.trace.begin(), x.trace.end(), id) != x.trace.end();
}

// chi(G_{r,k}) from the mod 2 Betti numbers: the Poincare polynomial is the Gaussian binomial
// [r choose k]_q, evaluated at q = -1 through the q-Pascal rule.
BigInt euler_by_gaussian_binomial(long r, long k) {
  std::vector<std::vector<BigInt>> g(r + 1, std::vector<BigInt>(r + 1, 0));
  for (long a = 0; a <= r; ++a) {
    g[a][0] = 1;
    for (long b = 1; b <= a; ++b) g[a][b] = g[a - 1][b - 1] + (b % 2 ? -1 : 1) * g[a - 1][b];
  }
  return g[r][k];
}

}  // namespace

TEST(GrassmannEuler, Examples) {
  EXPECT_EQ(grassmann_euler(6, 3), 0);
  EXPECT_EQ(grassmann_euler(7, 3), 3);
  EXPECT_EQ(grassmann_euler(4, 2), 2);
  EXPECT_EQ(grassmann_euler(5, 1), 1) << "RP^4";
  EXPECT_EQ(grassmann_euler(4, 1), 0) << "RP^3";
  EXPECT_THROW(grassmann_euler(3, 4), InputError);
}

TEST(GrassmannEuler, AgainstGaussianBinomial) {
  for (long r = 1; r <= 60; ++r)
    for (long k = 1; k <= r; ++k) EXPECT_EQ(grassmann_euler(r, k), euler_by_gaussian_binomial(r, k)) << r << "," << k;
}

TEST(GrassmannEuler, Duality) {
  for (long r = 2; r <= 40; ++r)
    for (long k = 1; k < r; ++k) EXPECT_EQ(grassmann_euler(r, k), grassmann_euler(r, r - k));
}

TEST(Stiefel, Examples) {
  auto b = stiefel_selfcoincidence({5, 2, false});
  EXPECT_EQ(v(b.mcc), ExtNat(0));
  EXPECT_TRUE(traced(b.mcc, "Cor1.3"));
  EXPECT_TRUE(traced(b.mcc, "Prop5.1"));
  EXPECT_EQ(v(stiefel_selfcoincidence({7, 3, false}).mcc), ExtNat(1));
  EXPECT_EQ(v(stiefel_selfcoincidence({13, 3, false}).mcc), ExtNat(0));
  b = stiefel_selfcoincidence({11, 5, false});
  EXPECT_EQ(v(b.mcc), ExtNat(1));
  EXPECT_TRUE(traced(b.mcc, "Cor1.5"));
}

TEST(Stiefel, UntabulatedOrder) {
  // chi(G_{23,11}) = C(11,5) = 462; 2 chi = 924 is not a multiple of 24, and [SO(11)] is not tabulated.
  const auto b = stiefel_selfcoincidence({23, 11, false});
  EXPECT_FALSE(b.mcc.value);
  EXPECT_TRUE(traced(b.mcc, "needs:framed_so_order"));
  // r even, k odd: chi = 0
  EXPECT_EQ(v(stiefel_selfcoincidence({22, 11, false}).mcc), ExtNat(0));
  EXPECT_TRUE(traced(stiefel_selfcoincidence({22, 11, false}).mcc, "SO-chi-zero"));
}

TEST(Stiefel, FiveAgreedInvariants) {
  for (long r = 2; r <= 30; ++r)
    for (long k = 1; 2 * k <= r; ++k) {
      const auto b = stiefel_selfcoincidence({r, k, false});
      for (Invariant i : {Invariant::MC, Invariant::NSharp, Invariant::NTilde, Invariant::N})
        EXPECT_EQ(b.at(i).value, b.mcc.value);
      EXPECT_TRUE(validate_bundle(b, static_cast<unsigned long>(k * (r - k))).empty());
    }
}

TEST(Stiefel, CorollariesAgainstClosedForms) {
  for (long r = 5; r <= 60; ++r)
    for (long k : {2, 3, 5}) {
      if (2 * k > r) continue;
      const auto expect = oracle::stiefel_corollary_value(r, k);
      if (!expect) continue;
      EXPECT_EQ(v(stiefel_selfcoincidence({r, k, false}).mcc), ExtNat(*expect)) << r << "," << k;
    }
}

TEST(Stiefel, OrientedTargetOnlyChangesReidemeister) {
  for (long r = 4; r <= 20; ++r) {
    const auto a = stiefel_selfcoincidence({r, 2, false});
    const auto b = stiefel_selfcoincidence({r, 2, true});
    EXPECT_EQ(a.mcc, b.mcc);
    EXPECT_EQ(v(a.reidemeister), ExtNat(2));
    EXPECT_EQ(v(b.reidemeister), ExtNat(1));
  }
}

TEST(Stiefel, RejectsSmallR) {
  EXPECT_THROW(stiefel_selfcoincidence({5, 3, false}), InputError);
  EXPECT_THROW(stiefel_selfcoincidence({4, 0, false}), InputError);
}
