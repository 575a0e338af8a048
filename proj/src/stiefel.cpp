#include "nielsen/stiefel.hpp"

#include "nielsen/errors.hpp"

namespace nielsen::stiefel {

BigInt grassmann_euler(long r, long k) {
  if (k < 1 || k > r) throw InputError("grassmann_euler requires 1 <= k <= r");
  if (k % 2 == 1 && r % 2 == 0) return 0;
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(r / 2), static_cast<unsigned long>(k / 2));
  return c;
}

InvariantBundle stiefel_selfcoincidence(const StiefelQuery& q, const tables::FactBase& fb) {
  if (q.k < 1 || q.r < 2 * q.k) throw InputError("stiefel: requires r >= 2k >= 2");
  // The oriented Grassmannian doubles chi; the criterion already carries the factor 2.
  const BigInt chi = grassmann_euler(q.r, q.k);
  const Fact vanishes = tables::two_chi_so_vanishes(static_cast<int>(q.k), chi, fb);

  std::vector<std::string> trace = {"Thm1.2", "Grassmann-euler"};
  for (auto& e : provenance_trace(vanishes)) trace.push_back(e);
  if (q.k == 2) trace.push_back("Cor1.3");
  if (q.k == 3) trace.push_back("Cor1.4");
  if (q.k == 5 && q.r != 7) trace.push_back("Cor1.5");

  InvariantBundle b;
  Verdict v;
  if (vanishes.yes()) {
    trace.push_back("Prop5.1");
    v = Verdict::known(0, trace);
  } else if (vanishes.no()) {
    v = Verdict::known(1, trace);
  } else {
    trace.push_back(needs("framed_so_order"));
    v = Verdict::unknown(trace);
  }
  b.mc = b.mcc = b.n_sharp = b.n_tilde = b.n = v;
  b.n_z = vanishes.yes() ? Verdict::known(0, {"Thm3.6(iii)"}) : Verdict::unknown();
  // V_{r,k} is simply connected once r - k >= 2; pi_1 of the target is Z/2, or 0 when oriented.
  if (q.r == 2)
    b.reidemeister = Verdict::known(ExtNat::infinite(), {"Thm1.7(a)"});
  else
    b.reidemeister = Verdict::known(q.oriented_target ? 1 : 2, {"Reid-simply-connected"});
  return b;
}

}  // namespace nielsen::stiefel
