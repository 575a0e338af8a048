#include <set>
#include <sstream>

#include "nielsen/errors.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen {

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> rules = {
      // logic and bookkeeping
      {"Kleene-and", "strong Kleene conjunction of three-valued facts"},
      {"Kleene-or", "strong Kleene disjunction of three-valued facts"},
      {"Factbase-lookup", "value read from a cited fact-base entry"},
      {"Thm3.6(iii)", "MC >= MCC >= N# >= Ñ >= N >= N^Z >= 0 for every pair"},
      {"Thm3.6(iv)", "MCC <= Reidemeister number when n != 2; MC is either <= Reidemeister number or infinite"},
      {"Loose-pair", "MC = 0 iff MCC = 0 iff the pair is loose"},
      {"Reid-cokernel", "for abelian pi_1 of the target: Reidemeister number = #(H_1(N) / image of (f_1 - f_2)_*)"},
      // torus
      {"Reid-simply-connected", "pi_1(M) = 0: the Reidemeister number is #pi_1(N)"},
      {"Thm1.8", "tori T^m -> T^n: MCC and all four Nielsen numbers equal |det| of the induced H_1 map; MC equals it too when m = n or it vanishes, else MC is infinite"},
      {"Thm3.7", "maps M -> T^n: N^Z = |det| when (f_1 - f_2)^* is nonzero on H^n; if moreover n != 2, MCC and the four Nielsen numbers equal |det|"},
      {"Thm3.7-zero", "maps M -> T^n: N^Z = 0 when (f_1 - f_2)^* vanishes on H^n and det kills no nonzero class of H^n(M)"},
      {"Thm3.7-rankdef", "det = 0: the difference map factors through a lower-dimensional torus, so the pair is loose"},
      {"Thm3.7-bounds", "maps M -> T^n: Reidemeister >= |det| >= MCC >= N# >= Ñ >= N >= N^Z; exact values need more data"},
      {"Cor3.8", "maps M -> S^1: MCC and the four Nielsen numbers equal the index of the image of (f_1 - f_2)_* in Z; loose iff that image is 0"},
      // sphere
      {"Thm1.7(a)", "spheres: Reidemeister number is 1 for n >= 2; |d_1 - d_2| (or infinite when equal) for n = 1"},
      {"Thm1.7(b)", "spheres: MC is 0 for [f] = 0, 1 for [f] in the suspension image, |d_1 - d_2| for m = n = 1, infinite otherwise when m > n >= 2"},
      {"Thm1.7(c)", "spheres: MCC = N# = 0 if f_1 ~ a f_2, else equal to the Reidemeister number"},
      {"Thm1.7(d)", "spheres: all six minimum and Nielsen numbers agree when n = 1 or f_1 ~ a f_2"},
      {"Thm1.7(e)", "spheres, n >= 2, [f] != 0: Ñ detects a stabilized Hopf-James invariant, N detects E^inf[f], N^Z = 0 when m > n"},
      {"Ex3.9-derived", "m = n >= 2: the coincidence index sum is the degree difference, so N^Z = 1 exactly when [f] != 0"},
      {"Degree-classes", "pi_n(S^n) = Z via degree; E and E^inf are isomorphisms on it for n >= 2; the antipodal map has degree (-1)^(n+1)"},
      {"Trivial-suspension-source", "[f] != 0 lies outside E(pi_{m-1}(S^{n-1})) when that group is trivial"},
      {"Hopf-invariant-3-2", "pi_3(S^2) = Z via the Hopf invariant H; E^inf is reduction mod 2 and the first Hopf-James invariant is H"},
      {"Freudenthal-bound", "pi_m(S^n) = 0 for m < n, and pi_m(S^1) = 0 for m >= 2"},
      // space forms
      {"Thm1.10", "S^m -> S^n/G, m,n >= 2: Reidemeister number #G; MCC = N# = 0 if m < n or (f_1 ~ f_2 and E del = 0), 1 if f_1 ~ f_2 and E del != 0, else #G"},
      {"Thm1.10-exception", "f_1 ~ f_2, del != 0, E del = 0: MCC = 1 while N# = 0"},
      {"Thm1.11", "MCC != N# forces f_1 ~ f_2 (selfcoincidence situation)"},
      {"Thm1.15", "selfcoincidence chain: (i) del = 0 <=> (ii) loose by small deformation => (iii) loose => (iv) N# = 0 <=> (v) E del = 0; values in {0,1}"},
      {"Thm1.15-oddn", "zero Euler characteristic (e.g. n odd) gives del = 0"},
      {"Del-low-dim", "del maps into pi_{m-1}(S^{n-1}) = 0 when m < n, and is 0 for m = 1"},
      {"Cor1.19", "for S^n/G with f_1 ~ f_2: MCC != N# iff del != 0 and E del = 0; only possible for n even and #G = 2"},
      {"Wecken-holds", "the Wecken condition at (m, n) makes E del = 0 imply del = 0"},
      {"Thm1.20", "m = 2n-2, n even, #G = 2: the selfcoincidence pair is loose iff N# = 0 and the Kervaire invariant vanishes"},
      {"Browder", "Kervaire invariant one elements of order 2 do not exist unless n is a power of 2"},
      {"HHR-open", "Kervaire invariant one in dimension 126 (n = 128) is not settled"},
      {"Thm1.22", "m = 2n-1, n = 2 (4), n >= 6, #G = 2: the selfcoincidence pair is loose iff N# = 0 and 4 divides the Hopf invariant of a lift"},
      {"Prop4.3", "odd-dimensional space forms: MC = 0 for f_1 ~ f_2 or m < n, #G if [f_1]-[f_2] is in p_* E(pi), infinite otherwise"},
      {"Prop4.3-special", "m = 4, n = 3: a nonzero class lies in p_* E(pi) iff #G <= 2"},
      {"Prop7.2-valueset", "for selfcoincidence and root pairs each Nielsen number is 0 or the Reidemeister number (or 1 under Thm 1.34)"},
      // projective
      {"Thm4.5", "S^m -> KP(n'), K = R, C, H: exactly one of the seven rows of the decision table applies"},
      {"Table4.7-row1", "f_1' ~ f_2' and [f~_2] in ker del: (N#, MCC, MC) = (0, 0, 0)"},
      {"Table4.7-row2", "f_1' ~ f_2' and [f~_2] in ker E del minus ker del: (0, 1, 1)"},
      {"Table4.7-row3", "K = R, f_1' ~ f_2', f~_2 not ~ a f~_2: (1, 1, 1)"},
      {"Table4.7-row4", "K = R, f_1' not ~ f_2', [f~_1] - [f~_2] in E(pi_{m-1}(S^{n-1})): (2, 2, 2)"},
      {"Table4.7-row5", "K = R, [f~_1] - [f~_2] not in E(pi_{m-1}(S^{n-1})): (2, 2, infinite)"},
      {"Table4.7-row6", "K = C, H, [f~_1] = [f~_2] not in ker E del: (1, 1, 1)"},
      {"Table4.7-row7", "K = C, H, [f~_1] != [f~_2]: (1, 1, infinite)"},
      {"Prop1.14", "KP(n') with n' odd: del = 0"},
      {"Projective-lifts", "lifting bookkeeping: for K = R, [f~_2] in ker E del iff f~_2 ~ a f~_2, and f_1' ~ f_2' allows equal lifts; for K = C, H, f_1' ~ f_2' iff the lifts agree"},
      {"Reid-projective", "Reidemeister number of S^m -> KP(n'): 2 for K = R, 1 for K = C, H"},
      // stiefel
      {"Thm1.2", "V_{r,k} -> G_{r,k}, r >= 2k >= 2: MC = MCC = N# = Ñ = N, equal to 0 or 1 according as 2 chi(G_{r,k}) [SO(k)] vanishes"},
      {"Grassmann-euler", "chi(G_{r,k}) = 0 if k odd and r even, else binomial(floor(r/2), floor(k/2))"},
      {"Cor1.3", "k = 2 < r: value 0"},
      {"Cor1.4", "k = 3: value 0 iff r even or r = 1 (12)"},
      {"Cor1.5", "k = 5, r != 7: value 0 iff r != 5 (6)"},
      {"Prop5.1", "N(f,f) = 0 makes the selfcoincidence pair loose by small deformation"},
      {"SO-chi-zero", "2 chi [SO(k)] = 0 when chi = 0"},
      {"SO-even", "2 [SO(2l)] = 0"},
      {"SO-24", "24 [SO(k)] = 0"},
      // wecken
      {"R1", "Wecken condition holds when del_N = 0: N noncompact, chi(N) = 0, or n odd"},
      {"R2", "Wecken condition holds in the stable range m < 2n-2"},
      {"R3", "Wecken condition holds for m <= n+4; at (10, 6) only via pi_10(S^6) = 0"},
      {"R4", "m = n+5: Wecken condition holds unless (m, n) = (11, 6), where it fails for S^6 and its quotients"},
      {"R5", "m = 2n-2, n even: holds for n in {2,4,8} and when no Kervaire one element exists; fails for n in {16,32,64}; open at n = 128"},
      {"R6", "m = 2n-1: fails iff n = 2 (4) and n >= 6"},
      {"R7", "m = 2n+2 or 2n+3 with n not in {4,6}: holds"},
      {"R8", "no encoded rule covers (m, n)"},
      {"Thm1.23", "m = 2n+2, 2n+3, n != 4, 6: the stems pi_4^S, pi_5^S vanish so the relevant ker E is trivial"},
      {"Thm1.26", "coincidence producing criterion: (ii) => (iii) => (iii'), (iii') <=> (iii''), and (ii) <=> (iii'') when j_* is injective"},
      {"Thm1.33", "N#(f,f) != 0 requires: n even and m >= n >= 4 (or m = 2, N in {S^2, RP(2)}); pi_1 trivial or Z/2 nonorientable; N closed, chi != 0, E del != 0; no fixed point free selfmap"},
      {"Thm1.34", "for root and selfcoincidence pairs the Nielsen numbers take values in {0, 1, #pi_1(N)}, and in {0, #pi_1(N)} when Thm 1.33 rules out N# != 0"},
      {"Nielsen-finite", "Nielsen numbers are finite, so an infinite pi_1 contributes no value"},
      {"Lem7.4", "deg# of root pairs is additive, so the vanishing of N# is closed under sums"},
      {"Ex3.9", "fixed points: the Wecken property holds unless M is a surface with negative Euler characteristic"},
  };
  return rules;
}

const std::vector<std::string_view>& fact_names() {
  static const std::vector<std::string_view> names = {
      "top_cohomology_pullback_nonzero",
      "det_kills_top",
      "degrees",
      "f1_homotopic_a_f2",
      "in_suspension_image",
      "stable_suspension_nonzero",
      "some_stable_hopf_james_nonzero",
      "homotopic",
      "del_zero",
      "e_del_zero",
      "kervaire_one",
      "hopf_mod4",
      "in_psE_image",
      "fprime_homotopic",
      "lift2_in_ker_del",
      "lift2_in_ker_Edel",
      "lift2_antipodal_selfhomotopic",
      "lifts_differ_by_suspension",
      "lifts_equal",
      "framed_so_order",
      "noncompact_or_chi_zero",
      "pi1_size",
      "orientable",
      "closed",
      "chi_zero",
      "e_del_nonzero",
      "target_is_s2_or_rp2",
      "no_fixed_point_free_selfmap",
  };
  return names;
}

bool is_registered_rule(std::string_view id) {
  static const std::set<std::string_view> ids = [] {
    std::set<std::string_view> s;
    for (const auto& r : rule_registry()) s.insert(r.id);
    return s;
  }();
  return ids.count(id) > 0;
}

bool is_valid_trace_entry(std::string_view entry) {
  if (is_registered_rule(entry)) return true;
  constexpr std::string_view prefix = "needs:";
  if (entry.substr(0, prefix.size()) != prefix) return false;
  auto name = entry.substr(prefix.size());
  for (auto f : fact_names())
    if (f == name) return true;
  return false;
}

std::string needs(std::string_view fact_name) {
  std::string e = "needs:" + std::string(fact_name);
  if (!is_valid_trace_entry(e)) throw ConsistencyError("unregistered fact name: " + std::string(fact_name));
  return e;
}

void verify_registry() {
  std::set<std::string_view> seen;
  for (const auto& r : rule_registry()) {
    if (r.id.empty() || r.statement.empty()) throw ConsistencyError("rule registry: empty id or statement");
    if (r.id.substr(0, 6) == "needs:") throw ConsistencyError("rule registry: reserved prefix in " + std::string(r.id));
    if (!seen.insert(r.id).second) throw ConsistencyError("rule registry: duplicate id " + std::string(r.id));
  }
  std::set<std::string_view> facts;
  for (auto f : fact_names())
    if (f.empty() || !facts.insert(f).second) throw ConsistencyError("rule registry: bad fact name");
}

std::string render_rules_markdown() {
  std::ostringstream os;
  os << "# Trace vocabulary\n\n"
     << "Every known value in an answer carries a trace built from the identifiers below.\n"
     << "An unknown value may also name the descriptor fact it is waiting for, as `needs:<fact>`.\n\n"
     << "| id | statement |\n|---|---|\n";
  for (const auto& r : rule_registry()) {
    std::string s(r.statement);
    for (std::size_t p = 0; (p = s.find('|', p)) != std::string::npos; p += 2) s.replace(p, 1, "\\|");
    os << "| `" << r.id << "` | " << s << " |\n";
  }
  os << "\n## Fact names\n\n";
  for (auto f : fact_names()) os << "- `" << f << "`\n";
  return os.str();
}

}  // namespace nielsen
