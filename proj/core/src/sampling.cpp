#include <hahn/sampling.hpp>

#include <stdexcept>

namespace hahn {

long long Sampler::int_in(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng_() % span);
}

std::size_t Sampler::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty sampling range");
  return static_cast<std::size_t>(rng_() % n);
}

Scalar Sampler::rational(long long max_num, long long max_den) {
  long long num = int_in(-max_num, max_num);
  long long den = int_in(1, max_den);
  return Scalar(num) / den;
}

Scalar Sampler::nonzero_rational(long long max_num, long long max_den) {
  long long num = int_in(1, max_num);
  if (coin()) num = -num;
  long long den = int_in(1, max_den);
  return Scalar(num) / den;
}

GroupElement Sampler::element(IndexSet index, long long max_num,
                              long long max_den) {
  GroupElement g(index);
  for (std::size_t i = 0; i < index.size(); ++i)
    g.set_coeff(i, rational(max_num, max_den));
  return g;
}

GroupElement Sampler::nonzero_element(IndexSet index, long long max_num,
                                      long long max_den) {
  for (;;) {
    GroupElement g = element(index, max_num, max_den);
    if (!g.is_zero()) return g;
  }
}

}  // namespace hahn
