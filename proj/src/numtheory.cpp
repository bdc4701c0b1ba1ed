#include "mackey/numtheory.hpp"

#include "mackey/errors.hpp"

namespace mackey {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

unsigned long long integer_p_part(unsigned long long n, unsigned long long p) {
  if (n == 0) throw error("integer_p_part: n must be positive");
  if (!is_prime(p)) throw error("integer_p_part: p must be prime");
  unsigned long long part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

unsigned long long euler_phi(unsigned long long n) {
  if (n == 0) throw error("euler_phi: n must be positive");
  unsigned long long result = n;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    result -= result / d;
    while (n % d == 0) n /= d;
  }
  if (n > 1) result -= result / n;
  return result;
}

} // namespace mackey
