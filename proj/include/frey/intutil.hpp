#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frey {

bool is_prime(long n);
bool is_prime(const mpz_class& n);
bool is_squarefree(long n);

// Simple sieve, returns all primes <= n.
std::vector<long> primes_up_to(long n);

// Kronecker symbol (a/n).
int kronecker(const mpz_class& a, long n);

// b^e mod m for m < 2^31.
long powmod(long b, long e, long m);

// Square root of a mod ell (ell an odd prime), canonicalized to the
// smaller of the two roots. Returns -1 when a is a non-residue.
long sqrt_mod_prime(long a, long ell);

bool is_perfect_square(const mpz_class& n);
mpz_class isqrt(const mpz_class& n);

// FNV-1a, used for certificate body digests.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace frey
