#include "toruscalc/framed_link.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toruscalc {

namespace {

void check_index(const FramedLink& l, std::size_t i, const char* what) {
  if (i >= l.components())
    throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

FramedLink::FramedLink(IntMatrix lk_, std::vector<std::string> labels_)
    : lk(std::move(lk_)), labels(std::move(labels_)) {
  if (lk.rows() != lk.cols())
    throw std::invalid_argument("linking matrix must be square");
  if (!lk.is_symmetric())
    throw std::invalid_argument("linking matrix must be symmetric");
  if (labels.size() != lk.rows())
    throw std::invalid_argument("one label per link component required");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw std::invalid_argument("duplicate component label: " + labels[i]);
}

FramedLink build_Y(long long m, long long n) {
  IntMatrix lk(5, 5);
  lk.at(3, 3) = m;  // mu_a framing
  lk.at(4, 4) = n;  // mu_b framing
  lk.at(0, 3) = lk.at(3, 0) = 1;  // mu_a circles B1
  lk.at(1, 4) = lk.at(4, 1) = 1;  // mu_b circles B2
  return FramedLink(std::move(lk), {"B1", "B2", "B3", "mu_a", "mu_b"});
}

AbelianInvariants link_h1(const FramedLink& l) {
  return cokernel_invariants(l.lk);
}

FramedLink handle_slide(const FramedLink& l, std::size_t i, std::size_t j,
                        int sign) {
  check_index(l, i, "slide");
  check_index(l, j, "slide");
  if (i == j) throw std::invalid_argument("cannot slide a component over itself");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("slide sign must be +1 or -1");

  const std::size_t n = l.components();
  IntMatrix e = IntMatrix::identity(n);
  e.at(j, i) = sign;  // column operation C_i <- C_i + sign*C_j
  return FramedLink(e.transpose() * l.lk * e, l.labels);
}

FramedLink cancel_pair(const FramedLink& l, std::size_t i, std::size_t j) {
  check_index(l, i, "cancel");
  check_index(l, j, "cancel");
  if (i == j) throw std::invalid_argument("cancel needs two distinct components");
  if (l.lk.at(i, i) != 0)
    throw std::invalid_argument("cancel: framing of " + l.labels[i] +
                                " must be 0");
  const BigInt& linking = l.lk.at(i, j);
  if (linking != 1 && linking != -1)
    throw std::invalid_argument("cancel: " + l.labels[i] + " and " +
                                l.labels[j] + " must link exactly once");
  for (std::size_t k = 0; k < l.components(); ++k) {
    if (k == i || k == j) continue;
    if (l.lk.at(i, k) != 0)
      throw std::invalid_argument("cancel: " + l.labels[i] + " still links " +
                                  l.labels[k]);
    if (l.lk.at(j, k) != 0)
      throw std::invalid_argument("cancel: " + l.labels[j] + " still links " +
                                  l.labels[k]);
  }

  const std::size_t n = l.components();
  IntMatrix lk(n - 2, n - 2);
  std::vector<std::string> labels;
  std::size_t r = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == i || a == j) continue;
    std::size_t c = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == i || b == j) continue;
      lk.at(r, c) = l.lk.at(a, b);
      ++c;
    }
    labels.push_back(l.labels[a]);
    ++r;
  }
  return FramedLink(std::move(lk), std::move(labels));
}

}  // namespace toruscalc
