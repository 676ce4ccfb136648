#ifndef IHPAIR_RAT_HPP
#define IHPAIR_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ihpair {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through these helpers.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& num, const std::string& den) {
  Rat q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw std::invalid_argument("rat: zero denominator");
  q.canonicalize();
  return q;
}

// b^e with e possibly negative (then b must be nonzero).
inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && b == 0) throw std::domain_error("rat_pow: 0^negative");
  Rat p;
  mpz_pow_ui(p.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(p.get_den_mpz_t(), b.get_den_mpz_t(), k);
  if (inv) {
    Rat r;
    mpq_inv(r.get_mpq_t(), p.get_mpq_t());
    return r;
  }
  return p;
}

inline Rat rat_factorial(long n) {
  if (n < 0) throw std::domain_error("rat_factorial: negative");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

inline Rat rat_binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

// Decimal-free "p/q" (plain "p" when q = 1).
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ihpair

#endif
