#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nielsen/tables.hpp"
#include "nielsen/verdict.hpp"

namespace nielsen::query {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFamilies[] = {"torus",      "sphere",  "spaceform", "projective",
                                            "stiefel",    "wecken",  "fixedpoint"};

struct Query {
  std::string id;
  std::string family;
  Json payload = Json::object();
};

// A serialized verdict: "unknown", "infinite", "yes", "no" or a decimal integer.
struct AnswerEntry {
  std::string value;
  std::vector<std::string> trace;
  bool operator==(const AnswerEntry&) const = default;
};

struct AnswerError {
  int code = 2;  // 2 input, 3 internal
  std::string message;
  bool operator==(const AnswerError&) const = default;
};

struct Answer {
  std::string id;
  std::string family;
  std::string factbase_version;
  std::optional<long> target_dim;  // bundle families only
  std::map<std::string, AnswerEntry> invariants;
  std::vector<std::string> warnings;
  std::optional<AnswerError> error;
  bool operator==(const Answer&) const = default;
};

// Strict: unknown or missing fields throw InputError naming the JSON path.
Query query_from_json(const Json& j, const std::string& path = "");

// Throws InputError (schema, contradictory facts) or ConsistencyError (rule clash, chain violation).
Answer run_query(const Query& q, const tables::FactBase& fb = tables::FactBase::bundled());

// Never throws for a single malformed query; it becomes an error Answer. Results are in input order.
std::vector<Answer> run_batch(const Json& queries, unsigned threads = 1,
                              const tables::FactBase& fb = tables::FactBase::bundled());

// Reads a JSON array from a file; throws InputError if unreadable or not an array.
Json read_json_file(const std::string& path);

Json to_json(const Answer& a);
Answer answer_from_json(const Json& j);

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json value_to_json(const std::string& value);

std::string render(const Answer& a);
std::string render(const std::vector<Answer>& answers);

// Rebuilds the bundle of a bundle-family answer (for validate_bundle).
std::optional<InvariantBundle> bundle_of(const Answer& a);

}  // namespace nielsen::query
