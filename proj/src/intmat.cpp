#include "toruscalc/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace toruscalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.at(c, r) = at(r, c);
    }
  }
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) {
    return false;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (at(r, c) != at(c, r)) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const BigInt& a = lhs.at(r, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        out.at(r, c) += a * rhs.at(k, c);
      }
    }
  }
  return out;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw std::invalid_argument("matrix difference dimension mismatch");
  }
  IntMatrix out(lhs.rows(), lhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      out.at(r, c) = lhs.at(r, c) - rhs.at(r, c);
    }
  }
  return out;
}

IntMatrix Transvection::matrix(std::size_t n) const {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("transvection indices must be distinct and in range");
  }
  IntMatrix m = IntMatrix::identity(n);
  m.at(i - 1, j - 1) = k;
  return m;
}

std::size_t AbelianInvariants::free_rank() const {
  return static_cast<std::size_t>(
      std::count(invariant_factors.begin(), invariant_factors.end(), BigInt(0)));
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Row/column operation helpers that mirror every move on the transform
// matrices, so U*M*V = A stays invariant throughout the reduction.
struct SnfWork {
  IntMatrix a, u, v;

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(r1, c), u.at(r2, c));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, c1), v.at(r, c2));
  }
  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
  }
  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = -a.at(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  SnfWork w{m, IntMatrix::identity(nr), IntMatrix::identity(nc)};

  const std::size_t steps = std::min(nr, nc);
  for (std::size_t t = 0; t < steps; ++t) {
    // Smallest nonzero |entry| of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < nr; ++r) {
      for (std::size_t c = t; c < nc; ++c) {
        if (w.a.at(r, c) == 0) continue;
        if (!found || abs_big(w.a.at(r, c)) < abs_big(w.a.at(pr, pc))) {
          found = true;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) {
      break;  // trailing block is zero; remaining diagonal stays 0
    }
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      // Euclidean clearing of column t, then row t; a nonzero remainder
      // yields a strictly smaller pivot and restarts the cycle.
      bool restart = false;
      for (std::size_t r = t + 1; r < nr && !restart; ++r) {
        if (w.a.at(r, t) == 0) continue;
        BigInt q = w.a.at(r, t) / w.a.at(t, t);
        w.add_row(r, t, -q);
        if (w.a.at(r, t) != 0) {
          w.swap_rows(t, r);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t c = t + 1; c < nc && !restart; ++c) {
        if (w.a.at(t, c) == 0) continue;
        BigInt q = w.a.at(t, c) / w.a.at(t, t);
        w.add_col(c, t, -q);
        if (w.a.at(t, c) != 0) {
          w.swap_cols(t, c);
          restart = true;
        }
      }
      if (restart) continue;

      // Pivot must divide the whole trailing block for the divisibility
      // chain; folding an offending row into row t shrinks the pivot.
      bool divides = true;
      for (std::size_t r = t + 1; r < nr && divides; ++r) {
        for (std::size_t c = t + 1; c < nc && divides; ++c) {
          if (w.a.at(r, c) % w.a.at(t, t) != 0) {
            w.add_row(t, r, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (w.a.at(t, t) < 0) {
      w.negate_row(t);
    }
  }

  SnfResult result;
  result.d.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    result.d.push_back(w.a.at(t, t));
  }
  result.u = std::move(w.u);
  result.v = std::move(w.v);
  return result;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant requires a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) {
        return 0;
      }
      for (std::size_t c = k; c < n; ++c) std::swap(a.at(k, c), a.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: exact division by the previous pivot.
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Records row operations "row i += s * row j" (s = +-1) applied to reach the
// identity; each is left multiplication by the unit transvection I + s*E(i,j).
struct TransvectionRecorder {
  IntMatrix a;
  std::vector<Transvection> ops;

  // row dst += q * row src, emitted as |q| unit steps
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    const int s = q < 0 ? -1 : 1;
    for (BigInt step = 0; step < abs_big(q); ++step) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        a.at(dst, c) += s * a.at(src, c);
      }
      ops.push_back(Transvection{dst + 1, src + 1, s});
    }
  }
};

}  // namespace

std::vector<Transvection> factor_transvections(const IntMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("transvection factorization requires a square matrix");
  }
  if (determinant(m) != 1) {
    throw std::invalid_argument("transvection factorization requires determinant +1");
  }
  const std::size_t n = m.rows();
  TransvectionRecorder rec{m, {}};

  // Forward pass: unit upper triangular, column by column.  The trailing
  // block keeps determinant +1, so the gcd of each working column is 1.
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t nonzero = 0, last = c;
      for (std::size_t r = c; r < n; ++r) {
        if (rec.a.at(r, c) != 0) {
          ++nonzero;
          last = r;
        }
      }
      assert(nonzero > 0);
      if (nonzero == 1) {
        const BigInt v = rec.a.at(last, c);
        if (last == c && v == 1) {
          break;
        }
        if (last != c) {
          // |v| = 1 since it generates the column gcd.
          assert(abs_big(v) == 1);
          rec.add_row(c, last, v);        // a(c,c) = v^2 = 1
          rec.add_row(last, c, -v);       // clears a(last,c)
          break;
        }
        // Single nonzero on the diagonal with v = -1; flip the sign with a
        // helper row below (the last column cannot reach here: determinant
        // +1 forces its diagonal entry to be +1).
        assert(v == -1 && c + 1 < n);
        const std::size_t h = c + 1;
        rec.add_row(h, c, 1);             // a(h,c) = -1
        rec.add_row(c, h, -2);            // a(c,c) = 1
        rec.add_row(h, c, 1);             // a(h,c) = 0
        break;
      }
      // Euclid across the rows: reduce everything modulo the smallest entry.
      std::size_t pivot = c;
      for (std::size_t r = c; r < n; ++r) {
        if (rec.a.at(r, c) == 0) continue;
        if (rec.a.at(pivot, c) == 0 ||
            abs_big(rec.a.at(r, c)) < abs_big(rec.a.at(pivot, c))) {
          pivot = r;
        }
      }
      for (std::size_t r = c; r < n; ++r) {
        if (r == pivot || rec.a.at(r, c) == 0) continue;
        BigInt q = rec.a.at(r, c) / rec.a.at(pivot, c);
        rec.add_row(r, pivot, -q);
      }
    }
  }

  // Back substitution: clear above the diagonal from the last column; at
  // each step row c is already the unit vector e_c.
  for (std::size_t c = n; c-- > 1;) {
    for (std::size_t r = 0; r < c; ++r) {
      if (rec.a.at(r, c) != 0) {
        rec.add_row(r, c, -rec.a.at(r, c));
      }
    }
  }
  assert(rec.a == IntMatrix::identity(n));

  // E_s ... E_1 * M = I, so M = inv(E_1) * ... * inv(E_s): invert each
  // recorded op in order.
  std::vector<Transvection> factors;
  factors.reserve(rec.ops.size());
  for (const auto& op : rec.ops) {
    factors.push_back(Transvection{op.i, op.j, -op.k});
  }
  return factors;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const BigInt& d : snf.d) {
    if (d != 0) {
      ++rank;
      if (d != 1) {
        inv.invariant_factors.push_back(d);
      }
    }
  }
  for (std::size_t i = rank; i < m.cols(); ++i) {
    inv.invariant_factors.push_back(0);
  }
  return inv;
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<BigInt> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t row_end = text.find(';', pos);
    if (row_end == std::string_view::npos) {
      row_end = text.size();
    }
    std::string_view row = text.substr(pos, row_end - pos);
    std::size_t row_cols = 0;
    std::size_t at = 0;
    while (at <= row.size()) {
      std::size_t entry_end = row.find(',', at);
      if (entry_end == std::string_view::npos) {
        entry_end = row.size();
      }
      std::string entry(row.substr(at, entry_end - at));
      // trim
      while (!entry.empty() && std::isspace(static_cast<unsigned char>(entry.front())))
        entry.erase(entry.begin());
      while (!entry.empty() && std::isspace(static_cast<unsigned char>(entry.back())))
        entry.pop_back();
      if (entry.empty()) {
        throw std::invalid_argument("empty matrix entry");
      }
      std::size_t digits = entry[0] == '-' || entry[0] == '+' ? 1 : 0;
      if (digits == entry.size()) {
        throw std::invalid_argument("bad matrix entry '" + entry + "'");
      }
      for (std::size_t i = digits; i < entry.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(entry[i]))) {
          throw std::invalid_argument("bad matrix entry '" + entry + "'");
        }
      }
      entries.emplace_back(entry);
      ++row_cols;
      if (entry_end == row.size()) break;
      at = entry_end + 1;
    }
    ++rows;
    if (cols == 0) {
      cols = row_cols;
    } else if (cols != row_cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    if (row_end == text.size()) break;
    pos = row_end + 1;
  }
  return IntMatrix(rows, cols, std::move(entries));
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += m.at(r, c).str();
    }
  }
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.trivial()) {
    return "0";
  }
  std::string out;
  std::size_t zeros = 0;
  for (const BigInt& d : a.invariant_factors) {
    if (d == 0) {
      ++zeros;
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  if (zeros > 0) {
    if (!out.empty()) out += " + ";
    out += zeros == 1 ? "Z" : "Z^" + std::to_string(zeros);
  }
  return out;
}

}  // namespace toruscalc
