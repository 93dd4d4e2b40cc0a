#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toruscalc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.  All arithmetic in this
/// module is exact; there is no floating point anywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Smith normal form U * M * V = diag(d) with U, V unimodular, d a
/// divisibility chain d1 | d2 | ... of nonnegative integers of length
/// min(rows, cols).
struct SnfResult {
  std::vector<BigInt> d;
  IntMatrix u;
  IntMatrix v;
};

/// Elementary matrix I + k*E(i,j), i != j, with 1-based positions: the shear
/// adding k times row j to row i under left multiplication.
struct Transvection {
  std::size_t i = 1;
  std::size_t j = 2;
  long long k = 1;

  IntMatrix matrix(std::size_t n = 3) const;

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

/// Abelian group given by its invariant-factor decomposition: d1 | d2 | ...,
/// each factor >= 0 with 0 encoding a Z summand; factors equal to 1 are
/// omitted, so the trivial group has an empty list.
struct AbelianInvariants {
  std::vector<BigInt> invariant_factors;

  std::size_t free_rank() const;
  bool trivial() const { return invariant_factors.empty(); }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) =
      default;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument if m is not square.
BigInt determinant(const IntMatrix& m);

/// Factors a matrix of determinant +1 into unit transvections (k = +1 or -1)
/// whose left-to-right product equals the input.  The identity factors as the
/// empty list.  Deterministic: integer Gaussian elimination to the identity
/// with pivots chosen by smallest |entry|, then lowest row index.
/// Throws std::invalid_argument unless m is square with determinant +1.
std::vector<Transvection> factor_transvections(const IntMatrix& m);

/// Invariants of Z^cols / (row space of m): the cokernel of the relation
/// matrix whose rows are relations on cols generators.
AbelianInvariants cokernel_invariants(const IntMatrix& m);

/// Row-major text form: rows separated by ';', entries by ','
/// (e.g. "2,1,0;1,1,0;0,0,1").
IntMatrix parse_matrix(std::string_view text);
std::string to_string(const IntMatrix& m);

std::string to_string(const AbelianInvariants& a);

}  // namespace toruscalc
