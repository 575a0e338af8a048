#include "nielsen/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "nielsen/errors.hpp"

namespace nielsen::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix must have at least one row and one column");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("matrix must have at least one row and one column");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  IntMatrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix c = *this;
  for (auto& x : c.data_) x = -x;
  return c;
}

bool IntMatrix::operator==(const IntMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

ExtNat FGAbelianGroup::cardinality() const {
  if (free_rank > 0) return ExtNat::infinite();
  BigInt n = 1;
  for (const auto& d : torsion) n *= d;
  return ExtNat::finite(n);
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + d.get_str());
  for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
  return s;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void axpy_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t R = a.rows(), C = a.cols();
  SmithDecomposition s{a, IntMatrix::identity(R), IntMatrix::identity(C)};
  IntMatrix& D = s.d;

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (D(i, j) != 0 && (pi == R || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) pi = i, pj = j;
    if (pi == R) break;
    swap_rows(D, t, pi), swap_rows(s.u, t, pi);
    swap_cols(D, t, pj), swap_cols(s.v, t, pj);

    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        axpy_row(D, i, t, q), axpy_row(s.u, i, t, q);
        if (D(i, t) != 0) swap_rows(D, t, i), swap_rows(s.u, t, i), again = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        axpy_col(D, j, t, q), axpy_col(s.v, j, t, q);
        if (D(t, j) != 0) swap_cols(D, t, j), swap_cols(s.v, t, j), again = true;
      }
      if (again) continue;
      // Pivot row and column are clear; enforce divisibility of the trailing block.
      for (std::size_t i = t + 1; i < R && !again; ++i)
        for (std::size_t j = t + 1; j < C && !again; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            axpy_row(D, t, i, BigInt(-1)), axpy_row(s.u, t, i, BigInt(-1));
            again = true;
          }
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < R; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

BigInt abs_det_of_image(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  if (s.rank() < a.rows()) return 0;
  BigInt p = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) p *= s.d(i, i);
  return p;
}

FGAbelianGroup cokernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  FGAbelianGroup g;
  std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (s.d(i, i) != 1) g.torsion.push_back(s.d(i, i));
  g.free_rank = a.rows() - r;
  return g;
}

// ---------------------------------------------------------------------------
// Brute-force index. Picks a square basis B from the columns, enumerates the
// integer points of the half-open parallelepiped B[0,1)^n (one per coset of
// B Z^n), then glues cosets that differ by a column of a.

namespace {

using Vec = std::vector<BigInt>;
using Square = std::vector<Vec>;

BigInt cofactor_det(const Square& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Square minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    BigInt c = m[0][j] * cofactor_det(minor);
    d += (j % 2 ? -c : c);
  }
  return d;
}

Square adjugate(const Square& m) {
  const std::size_t n = m.size();
  Square adj(n, Vec(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Square minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      BigInt c = cofactor_det(minor);
      adj[j][i] = ((i + j) % 2 ? -c : c);
    }
  return adj;
}

// Rank by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t R = rows.size(), C = rows[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && rows[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t k = c + 1; k < C; ++k)
        rows[i][k] = (rows[rank][c] * rows[i][k] - rows[i][c] * rows[rank][k]) / prev;
      rows[i][c] = 0;
    }
    prev = rows[rank][c];
    ++rank;
  }
  return rank;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr unsigned long kMaxRegionPoints = 1ul << 22;

}  // namespace

ExtNat cokernel_bruteforce_oracle(const IntMatrix& a, const BigInt& box) {
  const std::size_t n = a.rows(), C = a.cols();
  if (n > 4 || C > 4) throw InputError("brute-force oracle accepts at most 4 rows and 4 columns");
  if (box < 0) throw InputError("box must be non-negative");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (mpz_cmpabs(a(i, j).get_mpz_t(), BigInt(box).get_mpz_t()) > 0) throw InputError("entry exceeds the box bound");

  // Greedy choice of independent columns, as rows of the transpose.
  std::vector<std::size_t> basis;
  std::vector<Vec> chosen;
  for (std::size_t j = 0; j < C && basis.size() < n; ++j) {
    Vec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = a(i, j);
    chosen.push_back(col);
    if (bareiss_rank(chosen) == chosen.size())
      basis.push_back(j);
    else
      chosen.pop_back();
  }
  if (basis.size() < n) return ExtNat::infinite();

  Square B(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) B[i][k] = a(i, basis[k]);
  const BigInt det = cofactor_det(B);
  const Square adj = adjugate(B);

  std::vector<long> lo(n), hi(n);
  BigInt volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 0, h = 0;
    for (std::size_t k = 0; k < n; ++k) (B[i][k] < 0 ? l : h) += B[i][k];
    volume *= h - l + 1;
    if (volume > kMaxRegionPoints) throw InputError("enumeration region too large for the brute-force oracle");
    lo[i] = l.get_si(), hi[i] = h.get_si();
  }

  auto coords = [&](const Vec& p) {  // adj * p; p is in the region iff coords / det in [0,1)^n
    Vec t(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) t[j] += adj[j][i] * p[i];
    return t;
  };
  auto inside = [&](const Vec& t) {
    for (const auto& x : t)
      if (det > 0 ? (x < 0 || x >= det) : (x > 0 || x <= det)) return false;
    return true;
  };

  std::map<Vec, std::size_t> index;
  Vec p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = lo[i];
  for (;;) {
    if (inside(coords(p))) index.emplace(p, index.size());
    std::size_t i = 0;
    while (i < n && p[i] == hi[i]) p[i] = lo[i], ++i;
    if (i == n) break;
    p[i] += 1;
  }
  if (BigInt(static_cast<unsigned long>(index.size())) != abs(det))
    throw ConsistencyError("brute-force oracle: parallelepiped point count differs from |det|");

  DisjointSets sets(index.size());
  for (const auto& [rep, id] : index) {
    for (std::size_t j = 0; j < C; ++j) {
      Vec q = rep;
      for (std::size_t i = 0; i < n; ++i) q[i] += a(i, j);
      Vec t = coords(q);
      for (std::size_t k = 0; k < n; ++k) {
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), t[k].get_mpz_t(), det.get_mpz_t());
        if (f != 0)
          for (std::size_t i = 0; i < n; ++i) q[i] -= B[i][k] * f;
      }
      sets.unite(id, index.at(q));
    }
  }
  return ExtNat::finite(BigInt(static_cast<unsigned long>(sets.components())));
}

}  // namespace nielsen::lattice
