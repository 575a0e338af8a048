#include "nielsen/verdict.hpp"

#include <algorithm>

#include "nielsen/errors.hpp"

namespace nielsen {

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

Truth truth_from_string(std::string_view s) {
  if (s == "yes") return Truth::Yes;
  if (s == "no") return Truth::No;
  if (s == "unknown") return Truth::Unknown;
  throw InputError("expected \"yes\", \"no\" or \"unknown\", got \"" + std::string(s) + "\"");
}

Truth truth_of(bool b) { return b ? Truth::Yes : Truth::No; }

Truth operator!(Truth t) {
  switch (t) {
    case Truth::Yes: return Truth::No;
    case Truth::No: return Truth::Yes;
    default: return Truth::Unknown;
  }
}

std::vector<std::string> provenance_trace(const Fact& f) {
  if (std::holds_alternative<TableLookup>(f.provenance)) return {"Factbase-lookup"};
  if (auto* r = std::get_if<RuleDerived>(&f.provenance)) return {r->rule};
  return {};
}

Fact combine_and(const std::vector<Fact>& facts) {
  if (facts.empty()) throw InputError("combine_and of an empty list");
  Truth t = Truth::Yes;
  for (const auto& f : facts) {
    if (f.no()) return Fact::derived(Truth::No, "Kleene-and");
    if (f.unknown_()) t = Truth::Unknown;
  }
  return Fact::derived(t, "Kleene-and");
}

Fact combine_or(const std::vector<Fact>& facts) {
  if (facts.empty()) throw InputError("combine_or of an empty list");
  Truth t = Truth::No;
  for (const auto& f : facts) {
    if (f.yes()) return Fact::derived(Truth::Yes, "Kleene-or");
    if (f.unknown_()) t = Truth::Unknown;
  }
  return Fact::derived(t, "Kleene-or");
}

Verdict Verdict::known(ExtNat v, std::vector<std::string> trace) {
  Verdict r{std::move(v), std::move(trace)};
  check_verdict(r);
  return r;
}

Verdict Verdict::unknown(std::vector<std::string> trace) {
  Verdict r{std::nullopt, std::move(trace)};
  check_verdict(r);
  return r;
}

void check_verdict(const Verdict& v) {
  if (v.value && v.trace.empty()) throw ConsistencyError("known verdict without justification");
  for (const auto& e : v.trace)
    if (!is_valid_trace_entry(e)) throw ConsistencyError("unregistered trace entry: " + e);
}

std::string_view invariant_key(Invariant i) {
  switch (i) {
    case Invariant::MC: return "mc";
    case Invariant::MCC: return "mcc";
    case Invariant::NSharp: return "n_sharp";
    case Invariant::NTilde: return "n_tilde";
    case Invariant::N: return "n";
    case Invariant::NZ: return "n_z";
    case Invariant::Reidemeister: return "reidemeister";
  }
  return "";
}

std::string_view invariant_symbol(Invariant i) {
  switch (i) {
    case Invariant::MC: return "MC";
    case Invariant::MCC: return "MCC";
    case Invariant::NSharp: return "N#";
    case Invariant::NTilde: return "Ñ";
    case Invariant::N: return "N";
    case Invariant::NZ: return "N^Z";
    case Invariant::Reidemeister: return "R";
  }
  return "";
}

Verdict& InvariantBundle::at(Invariant i) {
  return const_cast<Verdict&>(static_cast<const InvariantBundle*>(this)->at(i));
}

const Verdict& InvariantBundle::at(Invariant i) const {
  switch (i) {
    case Invariant::MC: return mc;
    case Invariant::MCC: return mcc;
    case Invariant::NSharp: return n_sharp;
    case Invariant::NTilde: return n_tilde;
    case Invariant::N: return n;
    case Invariant::NZ: return n_z;
    case Invariant::Reidemeister: return reidemeister;
  }
  return mc;
}

Verdict merge_branches(const Verdict& a, const Verdict& b, std::string_view missing_fact) {
  if (a.value && b.value && *a.value == *b.value) {
    Verdict r = a;
    for (const auto& e : b.trace)
      if (std::find(r.trace.begin(), r.trace.end(), e) == r.trace.end()) r.trace.push_back(e);
    return r;
  }
  std::vector<std::string> t;
  for (const auto* v : {&a, &b})
    for (const auto& e : v->trace)
      if (e.rfind("needs:", 0) == 0 && std::find(t.begin(), t.end(), e) == t.end()) t.push_back(e);
  std::string own = needs(missing_fact);
  if (std::find(t.begin(), t.end(), own) == t.end()) t.insert(t.begin(), own);
  return Verdict::unknown(std::move(t));
}

InvariantBundle merge_branches(const InvariantBundle& a, const InvariantBundle& b, std::string_view missing_fact) {
  InvariantBundle r;
  for (Invariant i : kAllInvariants) r.at(i) = merge_branches(a.at(i), b.at(i), missing_fact);
  return r;
}

std::vector<BundleViolation> validate_bundle(const InvariantBundle& b, unsigned long target_dim) {
  static constexpr std::array<Invariant, 6> chain = {Invariant::MC,     Invariant::MCC, Invariant::NSharp,
                                                     Invariant::NTilde, Invariant::N,   Invariant::NZ};
  std::vector<BundleViolation> out;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const auto& hi = b.at(chain[i]).value;
      const auto& lo = b.at(chain[j]).value;
      if (hi && lo && *hi < *lo)
        out.push_back({"Thm3.6(iii)", "Thm3.6(iii): " + std::string(invariant_symbol(chain[i])) + " ≥ " +
                                          std::string(invariant_symbol(chain[j])) + " violated (" + hi->to_string() +
                                          " < " + lo->to_string() + ")"});
    }
  if (target_dim != 2 && b.mcc.value && b.reidemeister.value && *b.reidemeister.value < *b.mcc.value)
    out.push_back({"Thm3.6(iv)", "Thm3.6(iv): MCC ≤ R violated (" + b.mcc.value->to_string() + " > " +
                                     b.reidemeister.value->to_string() + ")"});
  return out;
}

}  // namespace nielsen
