#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nielsen/verdict.hpp"

namespace nielsen::projective {

enum class Field { R, C, H };
std::string_view to_string(Field f);
Field field_from_string(std::string_view s);
int real_dimension(Field f);  // d = 1, 2, 4

// Pair f_1, f_2: S^m -> KP(n'), described through lifts f~_i: S^m -> S^{n+d-1}.
struct ProjectivePairDescriptor {
  Field field = Field::R;
  long n_prime = 2;
  long m = 2;
  Fact fprime_homotopic = Fact::unknown();
  Fact lift2_in_ker_del = Fact::unknown();
  Fact lift2_in_ker_Edel = Fact::unknown();
  Fact lift2_antipodal_selfhomotopic = Fact::unknown();  // R only
  Fact lifts_differ_by_suspension = Fact::unknown();     // R only
  Fact lifts_equal = Fact::unknown();                    // C, H only

  long n() const { return n_prime * real_dimension(field); }
};

// Validates and completes the descriptor; throws InputError naming the clash on contradictions.
ProjectivePairDescriptor resolve(const ProjectivePairDescriptor& d);

// Truth of each row's condition (index 0 = row 1), after resolution.
std::vector<Truth> row_conditions(const ProjectivePairDescriptor& resolved);

// The unique row 1..7, or nullopt when the facts do not decide it.
std::optional<int> projective_classify(const ProjectivePairDescriptor& d);

struct RowValues {
  ExtNat n_sharp, mcc, mc;
};
RowValues row_values(int row);

InvariantBundle projective_invariants(const ProjectivePairDescriptor& d);

// del_N = 0 on all of pi_m(KP(n')) for odd n'; otherwise silent.
Fact del_vanishes_by_dimension(Field field, long n_prime);

}  // namespace nielsen::projective
