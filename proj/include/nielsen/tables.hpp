#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nielsen/ext_nat.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::tables {

// pi_k^S
struct StableStemEntry {
  int k = 0;
  ExtNat order;
  Fact exponent_divides_two;  // 2 * pi_k^S = 0
  std::string structure;      // e.g. "Z/24", informational
  std::string citation;
};

// Order of the class of SO(k), with its Lie group framing, in pi^S_{k(k-1)/2}.
struct FramedSOEntry {
  int k = 0;
  std::optional<ExtNat> order_of_class;  // nullopt: not tabulated
  std::string note;
  std::string citation;
};

// Unstable groups needed by individual rules.
struct PinpointEntry {
  std::string key;  // "pi_10_S^6", "pi_10_V_{7,2}", ...
  Fact is_trivial;
  std::optional<ExtNat> order;
  std::string note;
  std::string citation;
};

struct Witness {
  std::string statement;  // informational
  std::string target;     // "RP"
  std::string m;          // "2n-1"
  std::vector<int> n_values;
  std::string citation;
};

enum class KervaireStatus { KernelEZero, ExistsOrderTwoKervaireOne, Open, NoneExists };
std::string_view to_string(KervaireStatus s);

struct LintIssue {
  int line = 0;
  std::string path;  // JSON pointer
  std::string message;
  std::string to_string(std::string_view source) const;  // "<source>:<line>: <path>: <message>"
};

class FactBase {
 public:
  // Parses and lints; throws InputError carrying the first lint issue (with its line) on failure.
  static FactBase from_text(std::string_view text, std::string source_name);
  static FactBase from_file(const std::string& path);
  // The compiled-in data file, unless NIELSEN_FACTBASE names another file.
  static const FactBase& bundled();

  const std::string& version() const { return version_; }
  const std::string& source() const { return source_; }

  // Stems beyond the table yield nullopt.
  std::optional<StableStemEntry> stable_stem(int k) const;
  std::optional<FramedSOEntry> framed_so(int k) const;
  std::optional<PinpointEntry> pinpoint(std::string_view key) const;
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  int max_stem() const { return static_cast<int>(stems_.size()) - 1; }

 private:
  std::string version_;
  std::string source_;
  std::vector<StableStemEntry> stems_;
  std::map<int, FramedSOEntry> framed_;
  std::map<std::string, PinpointEntry, std::less<>> pinpoints_;
  std::vector<Witness> witnesses_;
};

// All issues found in a fact-base text (empty list: clean).
std::vector<LintIssue> lint_factbase(std::string_view text);

std::string pinpoint_sphere_key(long m, long n);  // "pi_m_S^n"

// 2 * chi * [SO(k)] = 0 in pi^S_{k(k-1)/2}.
Fact two_chi_so_vanishes(int k, const BigInt& chi, const FactBase& fb = FactBase::bundled());

// Status of ker E on pi_{2n-2}(S^{n-1}) and of Kervaire invariant one elements, for even n >= 2.
KervaireStatus kervaire_status(long n);

}  // namespace nielsen::tables
