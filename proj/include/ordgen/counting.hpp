#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace ordgen {

/// Number of generating tuples; always a nonnegative integer.
using GenCount = mpz_class;

struct CountBound {
  /// Clamped at zero.
  mpz_class lower;
  /// Present when a closed form exists (n <= 3).
  std::optional<GenCount> exact;
};

inline constexpr int kMaxExactRank = 3;

mpz_class ipow(const mpz_class& base, unsigned long exp);

int mobius(long long r);
std::vector<long long> divisors(long long r);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
mpz_class gl_order(int n, const mpz_class& q);
/// |PGL_n(F_q)| = |GL_n(F_q)| / (q - 1).
mpz_class pgl_order(int n, const mpz_class& q);

/// Generating k-tuples of M_n(F_q) over F_q, closed forms for n <= 3.
/// Throws UnsupportedRank for n >= 4.
GenCount gen_count_exact(int k, int n, const mpz_class& q);

/// q^{kn^2} - 2^{(n+6)/2} q^{n^2 k - (k-1)(n-1)} clamped at zero; for odd n the
/// irrational constant is rounded so the result stays a valid lower bound.
CountBound gen_count_lower(int k, int n, const mpz_class& q);

/// Generating k-tuples of M_n(F_{q^r}) over F_q, by Moebius inversion over
/// the subfields F_{q^s}, s | r.
GenCount gen_count_twisted(int k, int n, const mpz_class& q, int r);

/// Lower bound on gen_count_twisted valid for every n (uses gen_count_lower
/// for the top field and drops nothing it cannot bound).
mpz_class gen_count_twisted_lower(int k, int n, const mpz_class& q, int r);

/// floor(g_k(n,q,s) / (s |PGL_n(F_{q^s})|)): the largest m with M_n(F_{q^s})^m
/// k-generated over F_q.
mpz_class copy_capacity(int k, int n, const mpz_class& q, int s);

/// Generating k-tuples of M_n(F_{q^s})^m over F_q; zero beyond capacity.
GenCount gen_count_power(int k, int n, const mpz_class& q, int s, const mpz_class& copies);

/// Smallest k >= 1 whose capacity reaches `copies`.
int min_k_for_copies(int n, const mpz_class& q, int s, const mpz_class& copies);

/// Coefficients (ascending in x = 1/Q) of g_k(n, Q) / Q^{k n^2} for n <= 3.
std::vector<mpz_class> normalized_count_poly(int k, int n);

/// Evaluates an integer polynomial at a rational point.
mpq_class eval_poly(const std::vector<mpz_class>& coeffs, const mpq_class& x);

}  // namespace ordgen
