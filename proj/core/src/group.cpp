#include <hahn/group.hpp>

#include <sstream>

namespace hahn {

GroupElement GroupElement::unit(IndexSet index, std::size_t i, Scalar c) {
  GroupElement g(index);
  g.set_coeff(i, c);
  return g;
}

GroupElement GroupElement::from_dense(IndexSet index,
                                      const std::vector<Scalar>& coeffs) {
  if (coeffs.size() != index.size())
    throw std::invalid_argument("dense coefficient count does not match index set");
  GroupElement g(index);
  for (std::size_t i = 0; i < coeffs.size(); ++i) g.set_coeff(i, coeffs[i]);
  return g;
}

const Scalar& GroupElement::coeff(std::size_t i) const {
  if (i >= index_.size())
    throw std::out_of_range("coefficient index outside the index set");
  static const Scalar kZero = 0;
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? kZero : it->second;
}

std::vector<Scalar> GroupElement::dense() const {
  std::vector<Scalar> out(index_.size(), Scalar(0));
  for (const auto& [i, c] : coeffs_) out[i] = c;
  return out;
}

void GroupElement::set_coeff(std::size_t i, const Scalar& c) {
  if (i >= index_.size())
    throw std::out_of_range("coefficient index outside the index set");
  if (c == 0)
    coeffs_.erase(i);
  else
    coeffs_[i] = c;
}

GroupElement GroupElement::operator-() const {
  GroupElement out(index_);
  for (const auto& [i, c] : coeffs_) out.coeffs_.emplace(i, -c);
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& rhs) {
  require_same_index(rhs);
  for (const auto& [i, c] : rhs.coeffs_) {
    auto it = coeffs_.find(i);
    if (it == coeffs_.end()) {
      coeffs_.emplace(i, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& rhs) {
  return *this += -rhs;
}

GroupElement GroupElement::scaled(const Scalar& c) const {
  GroupElement out(index_);
  if (c == 0) return out;
  for (const auto& [i, x] : coeffs_) out.coeffs_.emplace(i, c * x);
  return out;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& rhs) const {
  require_same_index(rhs);
  auto a = coeffs_.begin(), b = rhs.coeffs_.begin();
  while (a != coeffs_.end() || b != rhs.coeffs_.end()) {
    // The side whose next supported index is smaller holds the deciding
    // coordinate: the other side is zero there.
    if (b == rhs.coeffs_.end() || (a != coeffs_.end() && a->first < b->first)) {
      int s = sign(a->second);
      if (s != 0) return s > 0 ? std::strong_ordering::greater
                               : std::strong_ordering::less;
      ++a;
    } else if (a == coeffs_.end() || b->first < a->first) {
      int s = sign(b->second);
      if (s != 0) return s > 0 ? std::strong_ordering::less
                               : std::strong_ordering::greater;
      ++b;
    } else {
      if (a->second != b->second)
        return a->second < b->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      ++a;
      ++b;
    }
  }
  return std::strong_ordering::equal;
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << ", ";
    out << d[i].str();
  }
  out << ')';
  return out.str();
}

void GroupElement::require_same_index(const GroupElement& rhs) const {
  if (index_ != rhs.index_)
    throw std::invalid_argument("group elements from different index sets");
}

std::size_t arch_class(const GroupElement& g) {
  if (g.is_zero())
    throw std::domain_error("archimedean class of zero is undefined");
  return g.support().begin()->first;
}

std::strong_ordering class_compare(const GroupElement& g,
                                   const GroupElement& h) {
  std::size_t gi = arch_class(g), hi = arch_class(h);
  // Lower index means archimedean-larger, so the index order is reversed.
  if (gi > hi) return std::strong_ordering::less;
  if (gi < hi) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GroupElement linear_combine(const GroupElement& g, const GroupElement& h,
                            const Scalar& c) {
  return g + h.scaled(c);
}

}  // namespace hahn
