#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nielsen/ext_nat.hpp"

namespace nielsen::lattice {

// Dense row-major integer matrix, at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& b) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& b) const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

// Z^free_rank + sum Z/d_i, with d_i >= 2 and d_i | d_{i+1}.
struct FGAbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  ExtNat cardinality() const;
  std::string to_string() const;
  bool operator==(const FGAbelianGroup&) const = default;
};

// D = U * a * V with U, V unimodular and D diagonal: d_1 | d_2 | ... , zeros last, all >= 0.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// |det| when a has full row rank (product of Smith divisors), 0 otherwise.
BigInt abs_det_of_image(const IntMatrix& a);

// Z^rows / image(a).
FGAbelianGroup cokernel(const IntMatrix& a);

// Index of image(a) in Z^rows by explicit enumeration of coset representatives.
// Independent of smith_normal_form; intended as a test oracle.
// Requires rows, cols <= 4 and |a_ij| <= box; rejects inputs whose enumeration region is too large.
ExtNat cokernel_bruteforce_oracle(const IntMatrix& a, const BigInt& box);

}  // namespace nielsen::lattice
