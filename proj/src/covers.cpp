#include "knotcert/covers.hpp"

namespace knotcert {

namespace {

bool is_prime_power(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // n itself is prime
}

// (t^n - 1) / (t - 1) = 1 + t + ... + t^(n-1).
LaurentPoly root_column(unsigned n) {
  std::vector<Rational> ones(n, Rational(1));
  return LaurentPoly::from_coeffs(ones);
}

}  // namespace

std::optional<Integer> branched_cover_order(const KnotDescriptor& k, unsigned n) {
  if (n < 2) throw std::invalid_argument("branched cover index must be at least 2");
  LaurentPoly delta = alexander_polynomial(k);
  Rational res = resultant(root_column(n), delta);
  if (res == 0) return std::nullopt;
  Integer order = abs(res.get_num());
  if (res.get_den() != 1)
    throw std::logic_error("cover order resultant must be an integer");
  return order;
}

CoverScreen prime_power_cover_screen(const KnotDescriptor& k, unsigned bound) {
  CoverScreen screen;
  for (unsigned n = 2; n <= bound; ++n) {
    if (!is_prime_power(n)) continue;
    auto order = branched_cover_order(k, n);
    if (!order.has_value())
      throw std::logic_error("prime-power cover came out infinite");
    if (*order != 1) screen.all_trivial = false;
    screen.orders.emplace_back(n, *order);
  }
  return screen;
}

}  // namespace knotcert
