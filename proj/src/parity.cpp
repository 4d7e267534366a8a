#include "knotcert/parity.hpp"

namespace knotcert {

int arf(const KnotDescriptor& k) {
  Rational det = alexander_polynomial(k).evaluate(Rational(-1));
  Integer d = abs(det.get_num());
  if (det.get_den() != 1 || d % 2 == 0)
    throw std::invalid_argument("knot determinant must be an odd integer");
  const unsigned long residue = mpz_class(d % 8).get_ui();
  return (residue == 1 || residue == 7) ? 0 : 1;
}

bool is_stably_doubly_slice(const KnotDescriptor& k) { return arf(k) == 0; }

}  // namespace knotcert
