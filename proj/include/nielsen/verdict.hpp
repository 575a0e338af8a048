#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nielsen/ext_nat.hpp"

namespace nielsen {

enum class Truth { Yes, No, Unknown };

std::string_view to_string(Truth t);
Truth truth_from_string(std::string_view s);  // "yes" / "no" / "unknown"
Truth truth_of(bool b);
Truth operator!(Truth t);

struct UserSupplied {
  bool operator==(const UserSupplied&) const = default;
};
struct TableLookup {
  std::string entry;
  bool operator==(const TableLookup&) const = default;
};
struct RuleDerived {
  std::string rule;
  bool operator==(const RuleDerived&) const = default;
};
using Provenance = std::variant<UserSupplied, TableLookup, RuleDerived>;

struct Fact {
  Truth truth = Truth::Unknown;
  Provenance provenance = UserSupplied{};

  static Fact user(Truth t) { return {t, UserSupplied{}}; }
  static Fact unknown() { return {Truth::Unknown, UserSupplied{}}; }
  static Fact table(Truth t, std::string entry) { return {t, TableLookup{std::move(entry)}}; }
  static Fact derived(Truth t, std::string rule) { return {t, RuleDerived{std::move(rule)}}; }

  bool yes() const { return truth == Truth::Yes; }
  bool no() const { return truth == Truth::No; }
  bool unknown_() const { return truth == Truth::Unknown; }
  bool operator==(const Fact&) const = default;
};

// Registered trace entries contributed by a fact's provenance (empty for user facts).
std::vector<std::string> provenance_trace(const Fact& f);

// Strong Kleene conjunction. Throws InputError on an empty list.
Fact combine_and(const std::vector<Fact>& facts);
Fact combine_or(const std::vector<Fact>& facts);

// A value that is either known (finite or infinite) or Unknown; known values carry a justification.
struct Verdict {
  std::optional<ExtNat> value;
  std::vector<std::string> trace;

  static Verdict known(ExtNat v, std::vector<std::string> trace);
  static Verdict unknown(std::vector<std::string> trace = {});

  bool is_known() const { return value.has_value(); }
  bool operator==(const Verdict&) const = default;
};

// Throws ConsistencyError if a known verdict has an empty trace or any trace entry is unregistered.
void check_verdict(const Verdict& v);

enum class Invariant { MC, MCC, NSharp, NTilde, N, NZ, Reidemeister };
inline constexpr std::array<Invariant, 7> kAllInvariants = {Invariant::MC,     Invariant::MCC, Invariant::NSharp,
                                                            Invariant::NTilde, Invariant::N,   Invariant::NZ,
                                                            Invariant::Reidemeister};
std::string_view invariant_key(Invariant i);     // JSON key: "mc", "mcc", "n_sharp", ...
std::string_view invariant_symbol(Invariant i);  // "MC", "MCC", "N#", "Ñ", "N", "N^Z", "R"

struct InvariantBundle {
  Verdict mc, mcc, n_sharp, n_tilde, n, n_z, reidemeister;

  Verdict& at(Invariant i);
  const Verdict& at(Invariant i) const;
  bool operator==(const InvariantBundle&) const = default;
};

// Case split on an Unknown fact: keep a value both branches agree on, otherwise Unknown naming the fact.
Verdict merge_branches(const Verdict& a, const Verdict& b, std::string_view missing_fact);
InvariantBundle merge_branches(const InvariantBundle& a, const InvariantBundle& b, std::string_view missing_fact);

struct BundleViolation {
  std::string rule;
  std::string message;
};

// Checks MC >= MCC >= N# >= N~ >= N >= NZ and, for target_dim != 2, MCC <= Reidemeister.
// Unknown entries are skipped.
std::vector<BundleViolation> validate_bundle(const InvariantBundle& b, unsigned long target_dim);

// ---------------------------------------------------------------------------
// Rule registry: the closed vocabulary of trace entries.

struct RuleInfo {
  std::string_view id;
  std::string_view statement;
};

const std::vector<RuleInfo>& rule_registry();
// Descriptor fields that may appear in "needs:<field>" trace entries.
const std::vector<std::string_view>& fact_names();

bool is_registered_rule(std::string_view id);
bool is_valid_trace_entry(std::string_view entry);  // a registered rule or needs:<known fact>
std::string needs(std::string_view fact_name);      // "needs:" + name, checked

// Throws ConsistencyError on duplicate or empty ids/statements.
void verify_registry();

// Markdown rendering of the registry, as published in docs/rules.md.
std::string render_rules_markdown();

}  // namespace nielsen
