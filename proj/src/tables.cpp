#include "nielsen/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nielsen/errors.hpp"
#include "nielsen/json_lines.hpp"

namespace nielsen::tables {

namespace detail {
extern const std::string_view bundled_factbase_text;
}

using nlohmann::json;

std::string_view to_string(KervaireStatus s) {
  switch (s) {
    case KervaireStatus::KernelEZero: return "KernelEZero";
    case KervaireStatus::ExistsOrderTwoKervaireOne: return "ExistsOrderTwoKervaireOne";
    case KervaireStatus::Open: return "Open";
    case KervaireStatus::NoneExists: return "NoneExists";
  }
  return "";
}

std::string LintIssue::to_string(std::string_view source) const {
  return std::string(source) + ":" + std::to_string(line) + ": " + (path.empty() ? "/" : path) + ": " + message;
}

std::string pinpoint_sphere_key(long m, long n) { return "pi_" + std::to_string(m) + "_S^" + std::to_string(n); }

namespace {

// Accepts a positive integer or "infinite".
std::optional<ExtNat> parse_order(const json& v) {
  if (v.is_string() && v.get<std::string>() == "infinite") return ExtNat::infinite();
  if (v.is_number_integer() && v.get<long long>() > 0) return ExtNat(static_cast<long>(v.get<long long>()));
  return std::nullopt;
}

bool divides(const ExtNat& a, long b) { return a.is_finite() && b % a.value().get_si() == 0; }

bool power_of_two(const BigInt& x) { return x > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

class Linter {
 public:
  explicit Linter(std::string_view text) : text_(text) {}

  std::vector<LintIssue> run(json* parsed_out) {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      issues_.push_back({line_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1), "", "malformed JSON"});
      return issues_;
    }
    lines_ = json_pointer_lines(text_);
    check(doc);
    if (parsed_out) *parsed_out = std::move(doc);
    return issues_;
  }

 private:
  void issue(const std::string& path, std::string msg) {
    auto it = lines_.find(path);
    issues_.push_back({it == lines_.end() ? 0 : it->second, path, std::move(msg)});
  }

  bool expect_keys(const json& obj, const std::string& path, const std::set<std::string>& required,
                   const std::set<std::string>& optional = {}) {
    if (!obj.is_object()) {
      issue(path, "expected an object");
      return false;
    }
    bool ok = true;
    for (const auto& k : required)
      if (!obj.contains(k)) issue(path, "missing field \"" + k + "\""), ok = false;
    for (const auto& [k, _] : obj.items())
      if (!required.count(k) && !optional.count(k)) issue(path + "/" + k, "unknown field"), ok = false;
    return ok;
  }

  void expect_citation(const json& obj, const std::string& path) {
    const json& c = obj["citation"];
    if (!c.is_string() || c.get<std::string>().empty()) issue(path + "/citation", "citation must be a non-empty string");
  }

  std::optional<Truth> expect_truth(const json& v, const std::string& path) {
    if (v.is_string()) {
      auto s = v.get<std::string>();
      if (s == "yes") return Truth::Yes;
      if (s == "no") return Truth::No;
      if (s == "unknown") return Truth::Unknown;
    }
    issue(path, "expected \"yes\", \"no\" or \"unknown\"");
    return std::nullopt;
  }

  void check(const json& doc) {
    if (!expect_keys(doc, "", {"version", "stable_stems", "framed_so", "pinpoint"}, {"witnesses"})) return;
    if (!doc["version"].is_string() || doc["version"].get<std::string>().empty())
      issue("/version", "version must be a non-empty string");
    stems(doc["stable_stems"]);
    framed(doc["framed_so"]);
    pinpoints(doc["pinpoint"]);
    if (doc.contains("witnesses")) witnesses(doc["witnesses"]);
  }

  void stems(const json& arr) {
    if (!arr.is_array()) return issue("/stable_stems", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/stable_stems/" + std::to_string(i);
      const json& e = arr[i];
      if (!expect_keys(e, path, {"k", "order", "exponent_divides_two", "citation"}, {"structure"})) continue;
      expect_citation(e, path);
      if (!e["k"].is_number_integer() || e["k"].get<long long>() != static_cast<long long>(i)) {
        issue(path + "/k", "stems must be listed in order k = 0, 1, 2, ... (expected " + std::to_string(i) + ")");
        continue;
      }
      auto order = parse_order(e["order"]);
      if (!order) {
        issue(path + "/order", "order must be a positive integer or \"infinite\"");
        continue;
      }
      if (order->is_infinite() != (i == 0))
        issue(path + "/order", i == 0 ? "pi_0^S is infinite" : "stable stems in positive degree are finite");
      auto exp2 = expect_truth(e["exponent_divides_two"], path + "/exponent_divides_two");
      if (!exp2) continue;
      if (*exp2 == Truth::Yes && !(order->is_finite() && power_of_two(order->value())))
        issue(path + "/exponent_divides_two", "a group of exponent 2 has order a power of two");
      if (*exp2 == Truth::No && order->is_finite() && order->value() <= 2)
        issue(path + "/exponent_divides_two", "a group of order <= 2 has exponent dividing 2");
      stem_orders_.push_back(*order);
    }
    if (arr.size() < 20) issue("/stable_stems", "stems 0..19 must all be present");
  }

  void framed(const json& arr) {
    if (!arr.is_array()) return issue("/framed_so", "expected an array");
    std::set<long long> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/framed_so/" + std::to_string(i);
      const json& e = arr[i];
      if (!expect_keys(e, path, {"k", "order_of_class", "citation"}, {"note"})) continue;
      expect_citation(e, path);
      if (!e["k"].is_number_integer() || e["k"].get<long long>() < 1) {
        issue(path + "/k", "k must be a positive integer");
        continue;
      }
      const long long k = e["k"].get<long long>();
      if (!seen.insert(k).second) issue(path + "/k", "duplicate entry for k = " + std::to_string(k));
      if (e["order_of_class"].is_string() && e["order_of_class"].get<std::string>() == "unknown") continue;
      auto order = parse_order(e["order_of_class"]);
      const std::string op = path + "/order_of_class";
      if (!order) {
        issue(op, "order_of_class must be a positive integer, \"infinite\" or \"unknown\"");
        continue;
      }
      if (k == 1) {
        if (order->is_finite()) issue(op, "SO(1) is a framed point and generates pi_0^S = Z; its order is infinite");
        continue;
      }
      if (order->is_infinite()) {
        issue(op, "the class of SO(k) has finite order for k >= 2");
        continue;
      }
      if (!divides(*order, 24)) issue(op, order->to_string() + " does not divide 24");
      if (k % 2 == 0 && !divides(*order, 2)) issue(op, "for even k the order divides 2, got " + order->to_string());
      const long long stem = k * (k - 1) / 2;
      if (stem < static_cast<long long>(stem_orders_.size())) {
        const ExtNat& g = stem_orders_[static_cast<std::size_t>(stem)];
        if (g.is_finite() && !mpz_divisible_p(g.value().get_mpz_t(), order->value().get_mpz_t()))
          issue(op, "order " + order->to_string() + " does not divide |pi_" + std::to_string(stem) +
                        "^S| = " + g.to_string());
      }
    }
  }

  void pinpoints(const json& arr) {
    if (!arr.is_array()) return issue("/pinpoint", "expected an array");
    static const std::regex key_re(R"(pi_[0-9]+_(S\^[0-9]+|V_\{[0-9]+,[0-9]+\}))");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/pinpoint/" + std::to_string(i);
      const json& e = arr[i];
      if (!expect_keys(e, path, {"key", "is_trivial", "citation"}, {"order", "note"})) continue;
      expect_citation(e, path);
      if (!e["key"].is_string() || !std::regex_match(e["key"].get<std::string>(), key_re)) {
        issue(path + "/key", "key must look like pi_<m>_S^<n> or pi_<m>_V_{<a>,<b>}");
        continue;
      }
      if (!seen.insert(e["key"].get<std::string>()).second) issue(path + "/key", "duplicate key");
      auto triv = expect_truth(e["is_trivial"], path + "/is_trivial");
      if (!e.contains("order")) continue;
      auto order = parse_order(e["order"]);
      if (!order) {
        issue(path + "/order", "order must be a positive integer or \"infinite\"");
        continue;
      }
      if (triv && *triv != Truth::Unknown && (*triv == Truth::Yes) != (*order == ExtNat(1)))
        issue(path + "/order", "is_trivial and order disagree");
    }
  }

  void witnesses(const json& arr) {
    if (!arr.is_array()) return issue("/witnesses", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/witnesses/" + std::to_string(i);
      const json& e = arr[i];
      if (!expect_keys(e, path, {"statement", "target", "m", "n_values", "citation"})) continue;
      expect_citation(e, path);
      for (const char* f : {"statement", "target", "m"})
        if (!e[f].is_string()) issue(path + "/" + f, "expected a string");
      if (!e["n_values"].is_array()) {
        issue(path + "/n_values", "expected an array of positive integers");
        continue;
      }
      for (std::size_t j = 0; j < e["n_values"].size(); ++j)
        if (!e["n_values"][j].is_number_integer() || e["n_values"][j].get<long long>() < 1)
          issue(path + "/n_values/" + std::to_string(j), "expected a positive integer");
    }
  }

  std::string_view text_;
  std::map<std::string, int> lines_;
  std::vector<LintIssue> issues_;
  std::vector<ExtNat> stem_orders_;
};

}  // namespace

std::vector<LintIssue> lint_factbase(std::string_view text) { return Linter(text).run(nullptr); }

FactBase FactBase::from_text(std::string_view text, std::string source_name) {
  json doc;
  auto issues = Linter(text).run(&doc);
  if (!issues.empty()) throw InputError(issues.front().to_string(source_name));

  FactBase fb;
  fb.source_ = std::move(source_name);
  fb.version_ = doc["version"].get<std::string>();
  for (const auto& e : doc["stable_stems"]) {
    StableStemEntry s;
    s.k = e["k"].get<int>();
    s.order = *parse_order(e["order"]);
    s.exponent_divides_two =
        Fact::table(truth_from_string(e["exponent_divides_two"].get<std::string>()), "stable_stems/k=" + std::to_string(s.k));
    s.structure = e.value("structure", "");
    s.citation = e["citation"].get<std::string>();
    fb.stems_.push_back(std::move(s));
  }
  for (const auto& e : doc["framed_so"]) {
    FramedSOEntry f;
    f.k = e["k"].get<int>();
    f.order_of_class = parse_order(e["order_of_class"]);
    f.note = e.value("note", "");
    f.citation = e["citation"].get<std::string>();
    fb.framed_.emplace(f.k, std::move(f));
  }
  for (const auto& e : doc["pinpoint"]) {
    PinpointEntry p;
    p.key = e["key"].get<std::string>();
    p.is_trivial = Fact::table(truth_from_string(e["is_trivial"].get<std::string>()), p.key);
    if (e.contains("order")) p.order = parse_order(e["order"]);
    p.note = e.value("note", "");
    p.citation = e["citation"].get<std::string>();
    fb.pinpoints_.emplace(p.key, std::move(p));
  }
  if (doc.contains("witnesses"))
    for (const auto& e : doc["witnesses"]) {
      Witness w;
      w.statement = e["statement"].get<std::string>();
      w.target = e["target"].get<std::string>();
      w.m = e["m"].get<std::string>();
      w.n_values = e["n_values"].get<std::vector<int>>();
      w.citation = e["citation"].get<std::string>();
      fb.witnesses_.push_back(std::move(w));
    }
  return fb;
}

FactBase FactBase::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read fact base " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), path);
}

const FactBase& FactBase::bundled() {
  static const FactBase fb = [] {
    if (const char* p = std::getenv("NIELSEN_FACTBASE"); p && *p) return from_file(p);
    return from_text(detail::bundled_factbase_text, "factbase.json");
  }();
  return fb;
}

std::optional<StableStemEntry> FactBase::stable_stem(int k) const {
  if (k < 0) throw InputError("stem index must be non-negative");
  if (k >= static_cast<int>(stems_.size())) return std::nullopt;
  return stems_[static_cast<std::size_t>(k)];
}

std::optional<FramedSOEntry> FactBase::framed_so(int k) const {
  if (k < 1) throw InputError("SO(k) requires k >= 1");
  auto it = framed_.find(k);
  if (it == framed_.end()) return std::nullopt;
  return it->second;
}

std::optional<PinpointEntry> FactBase::pinpoint(std::string_view key) const {
  auto it = pinpoints_.find(key);
  if (it == pinpoints_.end()) return std::nullopt;
  return it->second;
}

Fact two_chi_so_vanishes(int k, const BigInt& chi, const FactBase& fb) {
  if (k < 1) throw InputError("SO(k) requires k >= 1");
  if (chi == 0) return Fact::derived(Truth::Yes, "SO-chi-zero");
  if (auto e = fb.framed_so(k); e && e->order_of_class) {
    const std::string entry = "framed_so/k=" + std::to_string(k);
    if (e->order_of_class->is_infinite()) return Fact::table(Truth::No, entry);
    BigInt twice = 2 * chi;
    return Fact::table(truth_of(mpz_divisible_p(twice.get_mpz_t(), e->order_of_class->value().get_mpz_t())), entry);
  }
  if (k % 2 == 0) return Fact::derived(Truth::Yes, "SO-even");
  BigInt twice = 2 * chi;
  if (mpz_divisible_ui_p(twice.get_mpz_t(), 24)) return Fact::derived(Truth::Yes, "SO-24");
  return Fact::derived(Truth::Unknown, "SO-24");
}

KervaireStatus kervaire_status(long n) {
  if (n < 2 || n % 2 != 0) throw InputError("kervaire_status requires an even n >= 2, got " + std::to_string(n));
  switch (n) {
    case 2: case 4: case 8: return KervaireStatus::KernelEZero;
    case 16: case 32: case 64: return KervaireStatus::ExistsOrderTwoKervaireOne;
    case 128: return KervaireStatus::Open;
    default: return KervaireStatus::NoneExists;
  }
}

}  // namespace nielsen::tables
