#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "nielsen/errors.hpp"
#include "nielsen/json_lines.hpp"
#include "nielsen/tables.hpp"

using namespace nielsen;
using namespace nielsen::tables;

namespace {

std::string shipped_text() {
  std::ifstream in(NIELSEN_FACTBASE_FILE);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const FactBase& fb() { return FactBase::bundled(); }

// Replaces the value on the line that carries `pointer` (a scalar value) by `replacement`.
std::string mutate_scalar(const std::string& text, const std::string& pointer, const std::string& replacement) {
  const auto lines = json_pointer_lines(text);
  const int line = lines.at(pointer);
  std::istringstream in(text);
  std::ostringstream out;
  std::string l;
  for (int i = 1; std::getline(in, l); ++i) {
    if (i == line) {
      const auto colon = l.find(':');
      const bool comma = !l.empty() && l.back() == ',';
      l = l.substr(0, colon + 1) + " " + replacement + (comma ? "," : "");
    }
    out << l << "\n";
  }
  return out.str();
}

}  // namespace

TEST(StableStems, Examples) {
  EXPECT_EQ(fb().stable_stem(3)->order, ExtNat(24));
  EXPECT_EQ(fb().stable_stem(10)->order, ExtNat(6));
  EXPECT_EQ(fb().stable_stem(4)->order, ExtNat(1));
  EXPECT_TRUE(fb().stable_stem(0)->order.is_infinite());
  EXPECT_FALSE(fb().stable_stem(20).has_value());
}

TEST(StableStems, EveryEntryIsCited) {
  for (int k = 0; k <= fb().max_stem(); ++k) EXPECT_FALSE(fb().stable_stem(k)->citation.empty()) << k;
}

TEST(TwoChiSO, Examples) {
  EXPECT_TRUE(two_chi_so_vanishes(2, 3).yes());
  EXPECT_TRUE(two_chi_so_vanishes(3, 6).yes());
  EXPECT_TRUE(two_chi_so_vanishes(3, 3).no());
  EXPECT_TRUE(two_chi_so_vanishes(11, 5).unknown_());
  EXPECT_TRUE(two_chi_so_vanishes(11, 0).yes());
  EXPECT_TRUE(two_chi_so_vanishes(11, 12).yes()) << "24 [SO(k)] = 0";
  EXPECT_TRUE(two_chi_so_vanishes(12, 7).yes()) << "2 [SO(2l)] = 0";
}

TEST(TwoChiSO, TabulatedAnswersCarryTheirEntry) {
  const Fact f = two_chi_so_vanishes(3, 3);
  EXPECT_EQ(f.provenance, Provenance(TableLookup{"framed_so/k=3"}));
}

TEST(Kervaire, Examples) {
  EXPECT_EQ(kervaire_status(16), KervaireStatus::ExistsOrderTwoKervaireOne);
  EXPECT_EQ(kervaire_status(12), KervaireStatus::NoneExists);
  EXPECT_EQ(kervaire_status(128), KervaireStatus::Open);
  EXPECT_EQ(kervaire_status(4), KervaireStatus::KernelEZero);
  EXPECT_THROW(kervaire_status(7), InputError);
}

TEST(Kervaire, PowersOfTwoAgainstList) {
  for (long n = 2; n <= 256; n += 2) {
    const auto s = kervaire_status(n);
    if (n == 2 || n == 4 || n == 8)
      EXPECT_EQ(s, KervaireStatus::KernelEZero) << n;
    else if (n == 16 || n == 32 || n == 64)
      EXPECT_EQ(s, KervaireStatus::ExistsOrderTwoKervaireOne) << n;
    else if (n == 128)
      EXPECT_EQ(s, KervaireStatus::Open);
    else
      EXPECT_EQ(s, KervaireStatus::NoneExists) << n;
  }
}

TEST(Pinpoint, Examples) {
  EXPECT_TRUE(fb().pinpoint("pi_10_S^6")->is_trivial.yes());
  const auto p = fb().pinpoint("pi_10_S^5");
  ASSERT_TRUE(p);
  EXPECT_TRUE(p->is_trivial.no());
  EXPECT_EQ(*p->order, ExtNat(2));
  EXPECT_FALSE(fb().pinpoint("pi_99_S^50").has_value());
  EXPECT_EQ(pinpoint_sphere_key(10, 6), "pi_10_S^6");
}

TEST(Linter, ShippedFileIsClean) {
  const auto issues = lint_factbase(shipped_text());
  for (const auto& i : issues) ADD_FAILURE() << i.to_string("factbase.json");
  EXPECT_TRUE(issues.empty());
}

TEST(Linter, EverySOOrderMutationIsCaughtWithItsLine) {
  const std::string text = shipped_text();
  const auto doc = nlohmann::json::parse(text);
  const auto lines = json_pointer_lines(text);
  int mutated = 0;
  for (std::size_t i = 0; i < doc["framed_so"].size(); ++i) {
    const std::string ptr = "/framed_so/" + std::to_string(i) + "/order_of_class";
    for (const char* bad : {"5", "7", "9", "16", "48", "25"}) {
      const auto issues = lint_factbase(mutate_scalar(text, ptr, bad));
      bool hit = false;
      for (const auto& is : issues) hit |= is.path == ptr && is.line == lines.at(ptr);
      EXPECT_TRUE(hit) << ptr << " := " << bad;
      ++mutated;
    }
  }
  EXPECT_GE(mutated, 6 * 9);
}

TEST(Linter, StructuralProblems) {
  const std::string text = shipped_text();
  // an uncited stem
  auto issues = lint_factbase(mutate_scalar(text, "/stable_stems/3/citation", "\"\""));
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues[0].path, "/stable_stems/3/citation");
  // order 24 with exponent 2
  issues = lint_factbase(mutate_scalar(text, "/stable_stems/3/exponent_divides_two", "\"yes\""));
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues[0].path, "/stable_stems/3/exponent_divides_two");
  // an order that no longer divides the stem
  issues = lint_factbase(mutate_scalar(text, "/stable_stems/3/order", "8"));
  bool framed_hit = false;
  for (const auto& is : issues) framed_hit |= is.path.rfind("/framed_so/", 0) == 0;
  EXPECT_TRUE(framed_hit) << "[SO(3)] of order 12 cannot live in a group of order 8";
  // malformed JSON reports a line
  issues = lint_factbase("{\n  \"version\": \"x\",\n  oops\n}");
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].line, 3);
}

TEST(Linter, LoaderRejectsWithLinePrecision) {
  const std::string text = shipped_text();
  const int line = json_pointer_lines(text).at("/framed_so/2/order_of_class");
  try {
    FactBase::from_text(mutate_scalar(text, "/framed_so/2/order_of_class", "7"), "fb.json");
    FAIL() << "mutated file accepted";
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("fb.json:" + std::to_string(line) + ": /framed_so/2/order_of_class", 0), 0u)
        << e.what();
  }
}

TEST(JsonLines, PointersMapToLines) {
  const std::string text = "{\n  \"a\": [\n    1,\n    {\"b\": 2}\n  ],\n  \"c/d\": 3\n}\n";
  const auto lines = json_pointer_lines(text);
  EXPECT_EQ(lines.at(""), 1);
  EXPECT_EQ(lines.at("/a"), 2);
  EXPECT_EQ(lines.at("/a/0"), 3);
  EXPECT_EQ(lines.at("/a/1/b"), 4);
  EXPECT_EQ(lines.at("/c~1d"), 6);
}

TEST(Witnesses, ShippedRegressionData) {
  ASSERT_FALSE(fb().witnesses().empty());
  const auto& w = fb().witnesses().front();
  EXPECT_EQ(w.n_values, (std::vector<int>{4, 8, 12, 14, 16, 20}));
}
