#include "nielsen/torus.hpp"

#include <string>

#include "nielsen/errors.hpp"

namespace nielsen::torus {

void validate(const TorusPairDescriptor& d) {
  if (d.m < 1 || d.n < 1) throw InputError("torus: dimensions must be >= 1");
  if (d.h1_matrix.rows() != static_cast<std::size_t>(d.n))
    throw InputError("torus: h1 must have n = " + std::to_string(d.n) + " rows");
  if (d.source_is_torus && d.h1_matrix.cols() != static_cast<std::size_t>(d.m))
    throw InputError("torus: for a torus source h1 must have m = " + std::to_string(d.m) + " columns");
}

Verdict circle_target_mcc(const BigInt& g) { return Verdict::known(ExtNat::finite(abs(g)), {"Cor3.8"}); }

namespace {

void set_nielsen(InvariantBundle& b, const Verdict& v) {
  b.mcc = b.n_sharp = b.n_tilde = b.n = b.n_z = v;
}

}  // namespace

InvariantBundle torus_invariants(const TorusPairDescriptor& d) {
  validate(d);
  const BigInt det = lattice::abs_det_of_image(d.h1_matrix);
  const ExtNat dv = ExtNat::finite(det);

  InvariantBundle b;
  b.reidemeister = Verdict::known(lattice::cokernel(d.h1_matrix).cardinality(), {"Reid-cokernel"});

  if (d.source_is_torus) {
    set_nielsen(b, Verdict::known(dv, {"Thm1.8"}));
    b.mc = (d.m == d.n || det == 0) ? Verdict::known(dv, {"Thm1.8"}) : Verdict::known(ExtNat::infinite(), {"Thm1.8"});
    return b;
  }

  if (det == 0) {
    if (d.top_cohomology_pullback_nonzero.yes())
      throw InputError("torus: top_cohomology_pullback_nonzero is yes but det = 0");
    set_nielsen(b, Verdict::known(0, {"Thm3.7-rankdef"}));
    b.mc = Verdict::known(0, {"Thm3.7-rankdef"});
    return b;
  }

  const std::vector<std::string> bounds = {"Thm3.7-bounds", "Thm3.6(iii)"};
  auto unresolved = [&](std::string_view fact) {
    auto t = bounds;
    t.push_back(needs(fact));
    return Verdict::unknown(t);
  };

  if (d.n == 1) {
    set_nielsen(b, circle_target_mcc(det));
    b.mc = Verdict::unknown(bounds);
    return b;
  }

  const Fact& top = d.top_cohomology_pullback_nonzero;
  set_nielsen(b, top.unknown_() ? unresolved("top_cohomology_pullback_nonzero") : Verdict::unknown(bounds));
  b.mc = Verdict::unknown(bounds);
  if (top.yes()) {
    b.n_z = Verdict::known(dv, {"Thm3.7"});
    if (d.n != 2) {
      b.mcc = b.n_sharp = b.n_tilde = b.n = Verdict::known(dv, {"Thm3.7"});
    }
  } else if (top.no()) {
    if (d.det_kills_top.yes())
      b.n_z = Verdict::known(0, {"Thm3.7-zero"});
    else
      b.n_z = unresolved("det_kills_top");
  }
  return b;
}

}  // namespace nielsen::torus
