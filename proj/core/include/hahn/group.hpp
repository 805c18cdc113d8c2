#pragma once

/// \file group.hpp
/// The value group: Q^I under lexicographic order for a finite index set
/// I = {0, ..., size-1}. Index 0 is the dominant coordinate, so elements
/// supported only at high indices are archimedean-small. Archimedean
/// classes of nonzero elements are decided by the least supported index;
/// over the full divisible group Q^I the integer-multiple and
/// rational-multiple notions of "same class" coincide, so one rule serves
/// both.

#include <hahn/scalar.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hahn {

/// Finite index set {0, ..., size-1}; must be nonempty.
class IndexSet {
 public:
  explicit IndexSet(std::size_t size) : size_(size) {
    if (size == 0) throw std::invalid_argument("index set must be nonempty");
  }

  std::size_t size() const { return size_; }

  friend bool operator==(IndexSet a, IndexSet b) { return a.size_ == b.size_; }
  friend bool operator!=(IndexSet a, IndexSet b) { return !(a == b); }

 private:
  std::size_t size_;
};

/// Element of Q^I, stored sparsely; zero coefficients are never kept.
/// Ordered lexicographically: the least index where two elements differ
/// decides, so e_0 >> e_1 >> ... in the archimedean sense.
class GroupElement {
 public:
  explicit GroupElement(IndexSet index) : index_(index) {}

  static GroupElement zero(IndexSet index) { return GroupElement(index); }

  /// c * e_i.
  static GroupElement unit(IndexSet index, std::size_t i, Scalar c = 1);

  /// Build from one coefficient per index; throws if sizes mismatch.
  static GroupElement from_dense(IndexSet index,
                                 const std::vector<Scalar>& coeffs);

  IndexSet index_set() const { return index_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient at i (zero if unsupported); throws std::out_of_range if
  /// i is not in the index set.
  const Scalar& coeff(std::size_t i) const;

  /// One coefficient per index, zeros included.
  std::vector<Scalar> dense() const;

  /// Supported indices with their nonzero coefficients, ascending.
  const std::map<std::size_t, Scalar>& support() const { return coeffs_; }

  void set_coeff(std::size_t i, const Scalar& c);

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& rhs);
  GroupElement& operator-=(const GroupElement& rhs);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) {
    a += b;
    return a;
  }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) {
    a -= b;
    return a;
  }

  /// Scalar multiple c * gamma.
  GroupElement scaled(const Scalar& c) const;

  std::strong_ordering operator<=>(const GroupElement& rhs) const;
  bool operator==(const GroupElement& rhs) const {
    return (*this <=> rhs) == std::strong_ordering::equal;
  }

  /// "(1, -5/2, 0)" style rendering, dense.
  std::string to_string() const;

 private:
  void require_same_index(const GroupElement& rhs) const;

  IndexSet index_;
  std::map<std::size_t, Scalar> coeffs_;
};

inline GroupElement operator*(const Scalar& c, const GroupElement& g) {
  return g.scaled(c);
}

/// Least supported index of a nonzero element, i.e. its archimedean class;
/// throws std::domain_error on zero.
std::size_t arch_class(const GroupElement& g);

/// Compare archimedean classes of two nonzero elements. Returns `less`
/// when [g] < [h], i.e. n*|g| < |h| for every positive integer n, which
/// over lexicographic Q^I happens exactly when g's least supported index
/// is larger than h's. Throws std::domain_error if either argument is zero.
std::strong_ordering class_compare(const GroupElement& g,
                                   const GroupElement& h);

/// g + c * h.
GroupElement linear_combine(const GroupElement& g, const GroupElement& h,
                            const Scalar& c);

}  // namespace hahn
