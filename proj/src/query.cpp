#include "nielsen/query.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "nielsen/errors.hpp"
#include "nielsen/json_lines.hpp"
#include "nielsen/projective.hpp"
#include "nielsen/spaceform.hpp"
#include "nielsen/sphere.hpp"
#include "nielsen/stiefel.hpp"
#include "nielsen/torus.hpp"
#include "nielsen/wecken.hpp"

namespace nielsen::query {

namespace {

const std::regex& decimal_re() {
  static const std::regex re("-?[0-9]+");
  return re;
}

std::string type_name(const Json& j) {
  if (j.is_number_integer()) return "integer";
  return j.type_name();
}

// Strict reader over one JSON object; every error names the full path of the offending field.
class Fields {
 public:
  Fields(const Json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw InputError(path_ + ": expected object, got " + type_name(obj_));
  }

  std::string at(const std::string& name) const { return path_.empty() ? name : path_ + "." + name; }

  const Json* find(const std::string& name) {
    seen_.insert(name);
    auto it = obj_.find(name);
    return it == obj_.end() ? nullptr : &*it;
  }
  bool has(const std::string& name) const { return obj_.contains(name); }

  const Json& required(const std::string& name) {
    const Json* j = find(name);
    if (!j) throw InputError(at(name) + ": missing required field");
    return *j;
  }

  long integer(const std::string& name) { return as_long(required(name), at(name)); }
  long integer(const std::string& name, long fallback) {
    const Json* j = find(name);
    return j ? as_long(*j, at(name)) : fallback;
  }

  BigInt big(const std::string& name) { return as_big(required(name), at(name)); }

  bool boolean(const std::string& name, bool fallback) {
    const Json* j = find(name);
    if (!j) return fallback;
    if (!j->is_boolean()) throw InputError(at(name) + ": expected boolean, got " + type_name(*j));
    return j->get<bool>();
  }

  std::string string(const std::string& name, std::optional<std::string> fallback = std::nullopt) {
    const Json* j = fallback ? find(name) : &required(name);
    if (!j) return *fallback;
    if (!j->is_string()) throw InputError(at(name) + ": expected string, got " + type_name(*j));
    return j->get<std::string>();
  }

  Fact fact(const std::string& name) {
    const Json* j = find(name);
    if (!j) return Fact::unknown();
    if (!j->is_string()) throw InputError(at(name) + ": expected \"yes\", \"no\" or \"unknown\", got " + type_name(*j));
    try {
      return Fact::user(truth_from_string(j->get<std::string>()));
    } catch (const InputError&) {
      throw InputError(at(name) + ": expected \"yes\", \"no\" or \"unknown\", got \"" + j->get<std::string>() + "\"");
    }
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!seen_.count(it.key())) throw InputError(at(it.key()) + ": unknown field");
  }

  static long as_long(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) {
      if (j.get<unsigned long long>() > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
        throw InputError(where + ": integer out of range");
      return static_cast<long>(j.get<unsigned long long>());
    }
    if (!j.is_number_integer()) throw InputError(where + ": expected integer, got " + type_name(j));
    return j.get<long>();
  }

  static BigInt as_big(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long long>()));
    if (j.is_string() && std::regex_match(j.get<std::string>(), decimal_re())) return BigInt(j.get<std::string>());
    throw InputError(where + ": expected integer or decimal string, got " + type_name(j));
  }

 private:
  const Json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

// ---------------------------------------------------------------------------

torus::TorusPairDescriptor torus_payload(Fields& f) {
  torus::TorusPairDescriptor d;
  d.m = f.integer("m");
  d.n = f.integer("n");
  const Json& h1 = f.required("h1");
  const std::string where = f.at("h1");
  if (!h1.is_array() || h1.empty()) throw InputError(where + ": expected a nonempty array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const std::string row_at = where + "[" + std::to_string(i) + "]";
    if (!h1[i].is_array() || h1[i].empty()) throw InputError(row_at + ": expected a nonempty array of integers");
    if (i > 0 && h1[i].size() != h1[0].size())
      throw InputError(row_at + ": row has " + std::to_string(h1[i].size()) + " entries, row 0 has " +
                       std::to_string(h1[0].size()));
    std::vector<BigInt> row;
    for (std::size_t c = 0; c < h1[i].size(); ++c)
      row.push_back(Fields::as_big(h1[i][c], row_at + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  d.h1_matrix = lattice::IntMatrix::from_rows(rows);
  d.source_is_torus = f.boolean("source_is_torus", true);
  d.top_cohomology_pullback_nonzero = f.fact("top_cohomology_pullback_nonzero");
  d.det_kills_top = f.fact("det_kills_top");
  f.finish();
  if (d.n < 1) throw InputError(f.at("n") + ": must be >= 1");
  if (d.m < 1) throw InputError(f.at("m") + ": must be >= 1");
  if (rows.size() != static_cast<std::size_t>(d.n))
    throw InputError(where + ": expected n = " + std::to_string(d.n) + " rows, got " + std::to_string(rows.size()));
  if (d.source_is_torus && rows[0].size() != static_cast<std::size_t>(d.m))
    throw InputError(where + ": a torus source needs m = " + std::to_string(d.m) + " columns, got " +
                     std::to_string(rows[0].size()));
  return d;
}

sphere::SphereClassDescriptor sphere_payload(Fields& f) {
  sphere::SphereClassDescriptor d;
  d.m = f.integer("m");
  d.n = f.integer("n");
  const bool by_degrees = f.has("degrees");
  const bool by_hopf = f.has("hopf_invariant");
  if (by_degrees && by_hopf) throw InputError(f.at("hopf_invariant") + ": cannot be combined with degrees");
  if (by_degrees) {
    const Json& deg = f.required("degrees");
    if (!deg.is_array() || deg.size() != 2) throw InputError(f.at("degrees") + ": expected [d1, d2]");
    d.mode = sphere::Degrees{Fields::as_big(deg[0], f.at("degrees") + "[0]"),
                             Fields::as_big(deg[1], f.at("degrees") + "[1]")};
  } else if (by_hopf) {
    if (d.m != 3 || d.n != 2) throw InputError(f.at("hopf_invariant") + ": only meaningful for (m, n) = (3, 2)");
    d = sphere::hopf_class_3_2(f.big("hopf_invariant"));
  } else {
    sphere::ClassFacts c;
    c.f1_homotopic_a_f2 = f.fact("f1_homotopic_a_f2");
    c.in_suspension_image = f.fact("in_suspension_image");
    c.stable_suspension_nonzero = f.fact("stable_suspension_nonzero");
    c.some_stable_hopf_james_nonzero = f.fact("some_stable_hopf_james_nonzero");
    d.mode = c;
  }
  f.finish();
  return d;
}

spaceform::SpaceFormPairDescriptor spaceform_payload(Fields& f) {
  spaceform::SpaceFormPairDescriptor d;
  d.m = f.integer("m");
  d.n = f.integer("n");
  d.group_order = f.big("group_order");
  d.homotopic = f.fact("homotopic");
  d.del_zero = f.fact("del_zero");
  d.e_del_zero = f.fact("e_del_zero");
  d.kervaire_one = f.fact("kervaire_one");
  if (f.has("hopf_mod4")) {
    const long h = f.integer("hopf_mod4");
    if (h < 0 || h > 3) throw InputError(f.at("hopf_mod4") + ": expected 0, 1, 2 or 3");
    d.hopf_mod4 = static_cast<int>(h);
  }
  d.in_psE_image = f.fact("in_psE_image");
  f.finish();
  return d;
}

projective::ProjectivePairDescriptor projective_payload(Fields& f) {
  projective::ProjectivePairDescriptor d;
  const std::string field = f.string("field");
  try {
    d.field = projective::field_from_string(field);
  } catch (const InputError&) {
    throw InputError(f.at("field") + ": expected \"R\", \"C\" or \"H\", got \"" + field + "\"");
  }
  d.n_prime = f.integer("n_prime");
  d.m = f.integer("m");
  d.fprime_homotopic = f.fact("fprime_homotopic");
  d.lift2_in_ker_del = f.fact("lift2_in_ker_del");
  d.lift2_in_ker_Edel = f.fact("lift2_in_ker_Edel");
  d.lift2_antipodal_selfhomotopic = f.fact("lift2_antipodal_selfhomotopic");
  d.lifts_differ_by_suspension = f.fact("lifts_differ_by_suspension");
  d.lifts_equal = f.fact("lifts_equal");
  f.finish();
  if (d.n_prime < 1) throw InputError(f.at("n_prime") + ": must be >= 1");
  return d;
}

stiefel::StiefelQuery stiefel_payload(Fields& f) {
  stiefel::StiefelQuery q;
  q.r = f.integer("r");
  q.k = f.integer("k");
  q.oriented_target = f.boolean("oriented", false);
  f.finish();
  return q;
}

wecken::WeckenQuery wecken_payload(Fields& f) {
  wecken::WeckenQuery q;
  q.m = f.integer("m");
  q.n = f.integer("n");
  const std::string fam = f.string("target_family", "Sphere");
  try {
    q.family = wecken::target_family_from_string(fam);
  } catch (const InputError& e) {
    throw InputError(f.at("target_family") + ": " + e.what());
  }
  if (const Json* facts = f.find("facts")) {
    if (q.family != wecken::TargetFamily::GeneralN)
      throw InputError(f.at("facts") + ": only allowed with target_family \"GeneralN\"");
    Fields g(*facts, f.at("facts"));
    q.facts.noncompact_or_chi_zero = g.fact("noncompact_or_chi_zero");
    if (const Json* p = g.find("pi1_size")) {
      if (p->is_string() && p->get<std::string>() == "infinite")
        q.facts.pi1_size = ExtNat::infinite();
      else if (!(p->is_string() && p->get<std::string>() == "unknown"))
        q.facts.pi1_size = ExtNat::finite(Fields::as_big(*p, g.at("pi1_size")));
      if (q.facts.pi1_size && q.facts.pi1_size->is_zero()) throw InputError(g.at("pi1_size") + ": must be >= 1");
    }
    q.facts.orientable = g.fact("orientable");
    q.facts.closed = g.boolean("closed", true);
    g.finish();
  }
  f.finish();
  return q;
}

// ---------------------------------------------------------------------------

std::string verdict_value(const Verdict& v) { return v.value ? v.value->to_string() : "unknown"; }

void fill_bundle(Answer& a, const InvariantBundle& b, long target_dim) {
  for (Invariant i : kAllInvariants) check_verdict(b.at(i));
  const auto violations = validate_bundle(b, static_cast<unsigned long>(target_dim));
  if (!violations.empty()) {
    std::string msg = "answer violates the invariant chain:";
    for (const auto& v : violations) msg += " [" + v.rule + "] " + v.message + ";";
    throw ConsistencyError(msg);
  }
  a.target_dim = target_dim;
  for (Invariant i : kAllInvariants) {
    const Verdict& v = b.at(i);
    a.invariants[std::string(invariant_key(i))] = {verdict_value(v), v.trace};
    if (v.value) continue;
    std::vector<std::string> missing;
    for (const auto& t : v.trace)
      if (t.rfind("needs:", 0) == 0) missing.push_back(t.substr(6));
    if (!missing.empty()) {
      std::string w = std::string(invariant_key(i)) + " undetermined; supply";
      for (std::size_t k = 0; k < missing.size(); ++k) w += (k ? ", " : " ") + missing[k];
      a.warnings.push_back(w);
    }
  }
}

std::string string_field_or_empty(const Json& j, const char* name) {
  if (!j.is_object()) return "";
  auto it = j.find(name);
  return it != j.end() && it->is_string() ? it->get<std::string>() : "";
}

const std::vector<std::string>& canonical_order() {
  static const std::vector<std::string> order = [] {
    std::vector<std::string> o;
    for (Invariant i : kAllInvariants) o.emplace_back(invariant_key(i));
    return o;
  }();
  return order;
}

}  // namespace

Query query_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  Query q;
  q.id = f.string("id");
  q.family = f.string("family");
  if (std::find(std::begin(kFamilies), std::end(kFamilies), q.family) == std::end(kFamilies))
    throw InputError(f.at("family") + ": unknown family \"" + q.family + "\"");
  q.payload = f.required("payload");
  if (!q.payload.is_object()) throw InputError(f.at("payload") + ": expected object, got " + type_name(q.payload));
  f.finish();
  return q;
}

Answer run_query(const Query& q, const tables::FactBase& fb) {
  Answer a;
  a.id = q.id;
  a.family = q.family;
  a.factbase_version = fb.version();
  Fields f(q.payload, "payload");

  if (q.family == "torus") {
    const auto d = torus_payload(f);
    fill_bundle(a, torus::torus_invariants(d), d.n);
  } else if (q.family == "sphere") {
    const auto d = sphere_payload(f);
    fill_bundle(a, sphere::sphere_invariants(d, fb), d.n);
  } else if (q.family == "spaceform") {
    const auto d = spaceform_payload(f);
    fill_bundle(a, spaceform::spaceform_pair_invariants(d, fb), d.n);
  } else if (q.family == "projective") {
    const auto d = projective_payload(f);
    fill_bundle(a, projective::projective_invariants(d), d.n());
  } else if (q.family == "stiefel") {
    const auto s = stiefel_payload(f);
    const auto b = stiefel::stiefel_selfcoincidence(s, fb);
    fill_bundle(a, b, s.k * (s.r - s.k));
  } else if (q.family == "wecken") {
    const auto w = wecken_payload(f);
    const auto dec = wecken::decide_wecken(w, fb);
    a.invariants["wecken_condition"] = {std::string(to_string(dec.fact.truth)), dec.trace};
  } else if (q.family == "fixedpoint") {
    const long dim = f.integer("dim");
    const BigInt chi = f.big("chi");
    f.finish();
    if (dim < 1) throw InputError(f.at("dim") + ": must be >= 1");
    const Fact w = wecken::fixed_point_wecken(dim, chi);
    a.invariants["wecken_property"] = {std::string(to_string(w.truth)), provenance_trace(w)};
  } else {
    throw InputError("family: unknown family \"" + q.family + "\"");
  }
  return a;
}

std::vector<Answer> run_batch(const Json& queries, unsigned threads, const tables::FactBase& fb) {
  if (!queries.is_array()) throw InputError("batch: expected a JSON array of queries");
  std::vector<Answer> out(queries.size());
  auto one = [&](std::size_t i) {
    const Json& j = queries[i];
    try {
      out[i] = run_query(query_from_json(j, "[" + std::to_string(i) + "]"), fb);
      return;
    } catch (const InputError& e) {
      out[i].error = AnswerError{2, e.what()};
    } catch (const ConsistencyError& e) {
      out[i].error = AnswerError{3, e.what()};
    } catch (const std::exception& e) {
      out[i].error = AnswerError{3, std::string("internal error: ") + e.what()};
    }
    out[i].id = string_field_or_empty(j, "id");
    out[i].family = string_field_or_empty(j, "family");
    out[i].factbase_version = fb.version();
    out[i].target_dim.reset();
    out[i].invariants.clear();
    out[i].warnings.clear();
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, queries.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < queries.size(); ++i) one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < queries.size(); i = next++) one(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ":" + std::to_string(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0)) +
                     ": invalid JSON: " + e.what());
  }
}

Json value_to_json(const std::string& value) {
  if (!std::regex_match(value, decimal_re())) return value;
  const BigInt v(value);
  if (v.fits_slong_p()) return v.get_si();
  return value;
}

Json to_json(const Answer& a) {
  Json j = Json::object();
  j["id"] = a.id;
  j["family"] = a.family;
  j["factbase_version"] = a.factbase_version;
  if (a.target_dim) j["target_dim"] = *a.target_dim;
  if (a.error) {
    j["error"] = {{"code", a.error->code}, {"message", a.error->message}};
    return j;
  }
  Json inv = Json::object();
  auto put = [&](const std::string& key, const AnswerEntry& e) {
    inv[key] = {{"value", value_to_json(e.value)}, {"trace", e.trace}};
  };
  for (const auto& key : canonical_order())
    if (auto it = a.invariants.find(key); it != a.invariants.end()) put(key, it->second);
  for (const auto& [key, e] : a.invariants)
    if (!inv.contains(key)) put(key, e);
  j["invariants"] = inv;
  j["warnings"] = a.warnings;
  return j;
}

Answer answer_from_json(const Json& j) {
  Fields f(j, "");
  Answer a;
  a.id = f.string("id");
  a.family = f.string("family");
  a.factbase_version = f.string("factbase_version");
  if (f.has("target_dim")) a.target_dim = f.integer("target_dim");
  if (const Json* e = f.find("error")) {
    Fields g(*e, "error");
    a.error = AnswerError{static_cast<int>(g.integer("code")), g.string("message")};
    g.finish();
  }
  if (const Json* inv = f.find("invariants")) {
    Fields g(*inv, "invariants");
    for (auto it = inv->begin(); it != inv->end(); ++it) {
      Fields h(g.required(it.key()), g.at(it.key()));
      AnswerEntry entry;
      const Json& v = h.required("value");
      if (v.is_string())
        entry.value = v.get<std::string>();
      else
        entry.value = Fields::as_big(v, h.at("value")).get_str();
      const Json& t = h.required("trace");
      if (!t.is_array()) throw InputError(h.at("trace") + ": expected array");
      for (const auto& s : t) {
        if (!s.is_string()) throw InputError(h.at("trace") + ": expected strings");
        entry.trace.push_back(s.get<std::string>());
      }
      h.finish();
      a.invariants[it.key()] = std::move(entry);
    }
    g.finish();
  }
  if (const Json* w = f.find("warnings")) {
    if (!w->is_array()) throw InputError("warnings: expected array");
    for (const auto& s : *w) {
      if (!s.is_string()) throw InputError("warnings: expected strings");
      a.warnings.push_back(s.get<std::string>());
    }
  }
  f.finish();
  return a;
}

std::string render(const Answer& a) { return to_json(a).dump(2) + "\n"; }

std::string render(const std::vector<Answer>& answers) {
  Json arr = Json::array();
  for (const auto& a : answers) arr.push_back(to_json(a));
  return arr.dump(2) + "\n";
}

std::optional<InvariantBundle> bundle_of(const Answer& a) {
  if (a.error || !a.target_dim) return std::nullopt;
  InvariantBundle b;
  for (Invariant i : kAllInvariants) {
    auto it = a.invariants.find(std::string(invariant_key(i)));
    if (it == a.invariants.end()) return std::nullopt;
    Verdict v;
    v.trace = it->second.trace;
    if (it->second.value == "infinite")
      v.value = ExtNat::infinite();
    else if (it->second.value != "unknown")
      v.value = ExtNat::finite(BigInt(it->second.value));
    b.at(i) = v;
  }
  return b;
}

}  // namespace nielsen::query
