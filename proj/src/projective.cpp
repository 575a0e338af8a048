#include "nielsen/projective.hpp"

#include <string>

#include "nielsen/errors.hpp"

namespace nielsen::projective {

std::string_view to_string(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "";
}

Field field_from_string(std::string_view s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  throw InputError("field must be \"R\", \"C\" or \"H\", got \"" + std::string(s) + "\"");
}

int real_dimension(Field f) { return f == Field::R ? 1 : f == Field::C ? 2 : 4; }

Fact del_vanishes_by_dimension(Field, long n_prime) {
  if (n_prime < 1) throw InputError("n_prime must be >= 1");
  return n_prime % 2 ? Fact::derived(Truth::Yes, "Prop1.14") : Fact::derived(Truth::Unknown, "Prop1.14");
}

namespace {

using Desc = ProjectivePairDescriptor;

// Makes a and b equal, filling an Unknown side; throws on a clash.
bool tie(Fact& a, Fact& b, const char* an, const char* bn) {
  if (a.truth == b.truth) return false;
  if (a.unknown_()) return a = Fact::derived(b.truth, "Projective-lifts"), true;
  if (b.unknown_()) return b = Fact::derived(a.truth, "Projective-lifts"), true;
  throw InputError(std::string("projective: ") + an + " and " + bn + " must agree");
}

// If `from` has truth `when`, then `to` must have truth `then`.
bool implies(const Fact& from, Truth when, Fact& to, Truth then, const char* rule, const char* fn, const char* tn) {
  if (from.truth != when || to.truth == then) return false;
  if (to.unknown_()) return to = Fact::derived(then, rule), true;
  throw InputError(std::string("projective: ") + fn + " = " + std::string(to_string(when)) + " forces " + tn +
                   " = " + std::string(to_string(then)));
}

}  // namespace

ProjectivePairDescriptor resolve(const ProjectivePairDescriptor& in) {
  Desc d = in;
  if (d.n_prime < 2) throw InputError("projective: n_prime must be >= 2 (n_prime = 1 targets are spheres)");
  if (d.m < 2) throw InputError("projective: m must be >= 2");
  const bool real = d.field == Field::R;
  if (real && !d.lifts_equal.unknown_()) throw InputError("projective: lifts_equal applies to C and H only");
  if (!real && !d.lift2_antipodal_selfhomotopic.unknown_())
    throw InputError("projective: lift2_antipodal_selfhomotopic applies to R only");
  if (!real && !d.lifts_differ_by_suspension.unknown_())
    throw InputError("projective: lifts_differ_by_suspension applies to R only");

  const char* kd = "lift2_in_ker_del";
  const char* ke = "lift2_in_ker_Edel";
  const char* fp = "fprime_homotopic";
  const Fact yes = Fact::user(Truth::Yes);

  // The lift lives in pi_m(S^{n+d-1}) = 0.
  if (d.m < d.n() + real_dimension(d.field) - 1) {
    implies(yes, Truth::Yes, d.fprime_homotopic, Truth::Yes, "Freudenthal-bound", "m", fp);
    implies(yes, Truth::Yes, d.lift2_in_ker_del, Truth::Yes, "Freudenthal-bound", "m", kd);
  }
  if (d.n_prime % 2) implies(yes, Truth::Yes, d.lift2_in_ker_del, Truth::Yes, "Prop1.14", "n_prime odd", kd);

  for (bool changed = true; changed;) {
    changed = false;
    changed |= implies(d.lift2_in_ker_del, Truth::Yes, d.lift2_in_ker_Edel, Truth::Yes, "Projective-lifts", kd, ke);
    changed |= implies(d.lift2_in_ker_Edel, Truth::No, d.lift2_in_ker_del, Truth::No, "Projective-lifts", ke, kd);
    if (real) {
      changed |= tie(d.lift2_in_ker_Edel, d.lift2_antipodal_selfhomotopic, ke, "lift2_antipodal_selfhomotopic");
      changed |= implies(d.fprime_homotopic, Truth::Yes, d.lifts_differ_by_suspension, Truth::Yes, "Projective-lifts",
                         fp, "lifts_differ_by_suspension");
      changed |= implies(d.lifts_differ_by_suspension, Truth::No, d.fprime_homotopic, Truth::No, "Projective-lifts",
                         "lifts_differ_by_suspension", fp);
    } else {
      changed |= tie(d.fprime_homotopic, d.lifts_equal, fp, "lifts_equal");
    }
  }
  return d;
}

std::vector<Truth> row_conditions(const ProjectivePairDescriptor& d) {
  auto all = [](std::initializer_list<Truth> ts) {
    std::vector<Fact> fs;
    for (Truth t : ts) fs.push_back(Fact::user(t));
    return combine_and(fs).truth;
  };
  const Truth real = truth_of(d.field == Field::R);
  const Truth fp = d.fprime_homotopic.truth, kd = d.lift2_in_ker_del.truth, ke = d.lift2_in_ker_Edel.truth;
  return {
      all({fp, kd}),
      all({fp, !kd, ke}),
      all({real, fp, !d.lift2_antipodal_selfhomotopic.truth}),
      all({real, !fp, d.lifts_differ_by_suspension.truth}),
      all({real, !d.lifts_differ_by_suspension.truth}),
      all({!real, d.lifts_equal.truth, !ke}),
      all({!real, !d.lifts_equal.truth}),
  };
}

namespace {

std::optional<int> classify_resolved(const Desc& r) {
  auto rows = row_conditions(r);
  std::optional<int> hit;
  bool open = false;
  for (int i = 0; i < 7; ++i) {
    if (rows[i] == Truth::Yes) {
      if (hit) throw InputError("projective: facts match both row " + std::to_string(*hit) + " and row " +
                                std::to_string(i + 1));
      hit = i + 1;
    }
    open |= rows[i] == Truth::Unknown;
  }
  if (!hit && !open) throw InputError("projective: facts match no row");
  return hit;
}

}  // namespace

std::optional<int> projective_classify(const ProjectivePairDescriptor& d) { return classify_resolved(resolve(d)); }

RowValues row_values(int row) {
  const ExtNat inf = ExtNat::infinite();
  switch (row) {
    case 1: return {0, 0, 0};
    case 2: return {0, 1, 1};
    case 3: return {1, 1, 1};
    case 4: return {2, 2, 2};
    case 5: return {2, 2, inf};
    case 6: return {1, 1, 1};
    case 7: return {1, 1, inf};
  }
  throw InputError("projective: row must be 1..7");
}

InvariantBundle projective_invariants(const ProjectivePairDescriptor& d) {
  const Desc r = resolve(d);
  const auto hit = classify_resolved(r);
  std::vector<int> candidates;
  if (hit) {
    candidates = {*hit};
  } else {
    auto rows = row_conditions(r);
    for (int i = 0; i < 7; ++i)
      if (rows[i] != Truth::No) candidates.push_back(i + 1);
  }

  const char* missing = "fprime_homotopic";
  for (auto [f, name] : {std::pair{&r.fprime_homotopic, "fprime_homotopic"},
                         std::pair{&r.lifts_equal, "lifts_equal"},
                         std::pair{&r.lifts_differ_by_suspension, "lifts_differ_by_suspension"},
                         std::pair{&r.lift2_in_ker_del, "lift2_in_ker_del"},
                         std::pair{&r.lift2_in_ker_Edel, "lift2_in_ker_Edel"}})
    if (f->unknown_() && !(r.field == Field::R && f == &r.lifts_equal) &&
        !(r.field != Field::R && f == &r.lifts_differ_by_suspension)) {
      missing = name;
      break;
    }

  auto pick = [&](ExtNat RowValues::*member) {
    std::vector<std::string> trace = {"Thm4.5"};
    const ExtNat first = row_values(candidates.front()).*member;
    for (int row : candidates) {
      if (row_values(row).*member != first) return Verdict::unknown({"Thm4.5", needs(missing)});
      trace.push_back("Table4.7-row" + std::to_string(row));
    }
    return Verdict::known(first, trace);
  };

  InvariantBundle b;
  b.n_sharp = pick(&RowValues::n_sharp);
  b.mcc = pick(&RowValues::mcc);
  b.mc = pick(&RowValues::mc);
  b.reidemeister = Verdict::known(r.field == Field::R ? 2 : 1, {"Reid-projective"});
  if (b.n_sharp.value && b.n_sharp.value->is_zero())
    b.n_tilde = b.n = b.n_z = Verdict::known(0, {"Thm3.6(iii)"});
  else
    b.n_tilde = b.n = b.n_z = Verdict::unknown({"Prop7.2-valueset"});
  return b;
}

}  // namespace nielsen::projective
