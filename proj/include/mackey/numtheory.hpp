#pragma once

namespace mackey {

bool is_prime(unsigned long long n);

// Largest power of p dividing n.  Requires n >= 1 and p prime.
unsigned long long integer_p_part(unsigned long long n, unsigned long long p);

// Euler totient.  Requires n >= 1.
unsigned long long euler_phi(unsigned long long n);

} // namespace mackey
