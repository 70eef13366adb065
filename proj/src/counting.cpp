#include "ordgen/counting.hpp"

#include <string>

#include "ordgen/errors.hpp"

namespace ordgen {

mpz_class ipow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

int mobius(long long r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "mobius of nonpositive integer");
  int sign = 1;
  for (long long d = 2; d * d <= r; ++d) {
    if (r % d) continue;
    r /= d;
    if (r % d == 0) return 0;
    sign = -sign;
  }
  if (r > 1) sign = -sign;
  return sign;
}

std::vector<long long> divisors(long long r) {
  std::vector<long long> out;
  for (long long d = 1; d <= r; ++d)
    if (r % d == 0) out.push_back(d);
  return out;
}

mpz_class gl_order(int n, const mpz_class& q) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const mpz_class qn = ipow(q, n);
  mpz_class r = 1;
  for (int i = 0; i < n; ++i) r *= qn - ipow(q, i);
  return r;
}

mpz_class pgl_order(int n, const mpz_class& q) {
  mpz_class r = gl_order(n, q);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), mpz_class(q - 1).get_mpz_t());
  return r;
}

namespace {

void check_args(int k, int n, const mpz_class& q) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
}

void check_rank(int n) {
  if (n > kMaxExactRank) {
    throw Error(ErrorKind::UnsupportedRank,
                "no closed form for n=" + std::to_string(n) + " (only n <= 3)");
  }
}

}  // namespace

GenCount gen_count_exact(int k, int n, const mpz_class& q) {
  check_args(k, n, q);
  check_rank(n);
  const auto K = static_cast<unsigned long>(k);
  switch (n) {
    case 1:
      return ipow(q, K);
    case 2:
      return ipow(q, 2 * K + 1) * (ipow(q, K - 1) - 1) * (ipow(q, K) - 1);
    default: {
      // The q^{k-2} term is only reached with k = 1, where (q^{k-1} - 1) = 0.
      if (k == 1) return 0;
      const mpz_class tail = ipow(q, 3 * K - 2) + ipow(q, 2 * K - 2) - ipow(q, K) -
                             2 * ipow(q, K - 1) - ipow(q, K - 2) + q + 1;
      return ipow(q, 3 * K + 4) * (ipow(q, K - 1) - 1) * (ipow(q, K - 1) + 1) * (ipow(q, K) - 1) *
             tail;
    }
  }
}

CountBound gen_count_lower(int k, int n, const mpz_class& q) {
  check_args(k, n, q);
  const auto K = static_cast<unsigned long>(k);
  const auto N = static_cast<unsigned long>(n);
  const mpz_class top = ipow(q, K * N * N);
  const mpz_class x = ipow(q, K * N * N - (K - 1) * (N - 1));
  mpz_class sub;
  if ((n + 6) % 2 == 0) {
    sub = ipow(2, (N + 6) / 2) * x;
  } else {
    // ceil(sqrt(2) * 2^{(n+5)/2} * x); sqrt(2) y is never an integer for y > 0.
    const mpz_class y = ipow(2, (N + 5) / 2) * x;
    mpz_class two_y2 = 2 * y * y;
    mpz_sqrt(sub.get_mpz_t(), two_y2.get_mpz_t());
    sub += 1;
  }
  CountBound b;
  b.lower = top - sub;
  if (b.lower < 0) b.lower = 0;
  if (n <= kMaxExactRank) b.exact = gen_count_exact(k, n, q);
  return b;
}

GenCount gen_count_twisted(int k, int n, const mpz_class& q, int r) {
  check_args(k, n, q);
  check_rank(n);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  mpq_class sum = 0;
  for (long long s : divisors(r)) {
    const int mu = mobius(r / s);
    if (!mu) continue;
    const mpz_class qs = ipow(q, static_cast<unsigned long>(s));
    sum += mpq_class(mu * gen_count_exact(k, n, qs), pgl_order(n, qs));
  }
  sum.canonicalize();
  const mpq_class total = sum * mpq_class(pgl_order(n, ipow(q, static_cast<unsigned long>(r))));
  if (total.get_den() != 1 || total < 0) {
    throw Error(ErrorKind::InvalidArgument, "inversion produced a non-integer count");
  }
  return total.get_num();
}

mpz_class gen_count_twisted_lower(int k, int n, const mpz_class& q, int r) {
  check_args(k, n, q);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  if (n <= kMaxExactRank) return gen_count_twisted(k, n, q, r);
  const auto R = static_cast<unsigned long>(r);
  const mpz_class qr = ipow(q, R);
  mpz_class lower = gen_count_lower(k, n, qr).lower;
  // Tuples generating over F_{q^r} but spanning a conjugate of M_n(F_{q^s}),
  // s < r: at most q^{k s n^2} per conjugate.
  const mpz_class pgl_r = pgl_order(n, qr);
  for (long long s : divisors(r)) {
    if (s == r) continue;
    const auto S = static_cast<unsigned long>(s);
    const mpz_class qs = ipow(q, S);
    mpz_class conj = pgl_r;
    mpz_divexact(conj.get_mpz_t(), conj.get_mpz_t(), pgl_order(n, qs).get_mpz_t());
    lower -= ipow(q, static_cast<unsigned long>(k) * S * n * n) * conj;
  }
  return lower < 0 ? mpz_class(0) : lower;
}

mpz_class copy_capacity(int k, int n, const mpz_class& q, int s) {
  const mpz_class g = gen_count_twisted(k, n, q, s);
  const mpz_class d = s * pgl_order(n, ipow(q, static_cast<unsigned long>(s)));
  mpz_class cap;
  mpz_fdiv_q(cap.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  return cap;
}

GenCount gen_count_power(int k, int n, const mpz_class& q, int s, const mpz_class& copies) {
  if (copies < 0) throw Error(ErrorKind::InvalidArgument, "copies must be nonnegative");
  const mpz_class g = gen_count_twisted(k, n, q, s);
  const mpz_class d = s * pgl_order(n, ipow(q, static_cast<unsigned long>(s)));
  mpz_class cap;
  mpz_fdiv_q(cap.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  if (copies > cap) return 0;
  mpz_class r = 1;
  for (mpz_class i = 0; i < copies; ++i) r *= g - i * d;
  return r;
}

int min_k_for_copies(int n, const mpz_class& q, int s, const mpz_class& copies) {
  if (copies < 1) throw Error(ErrorKind::InvalidArgument, "copies must be positive");
  check_rank(n);
  // Capacity grows at least geometrically in k once k >= 2.
  for (int k = 1; k <= 4096; ++k) {
    if (copy_capacity(k, n, q, s) >= copies) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "capacity never reaches the requested copies");
}

namespace {

using Poly = std::vector<mpz_class>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly sparse(std::initializer_list<std::pair<int, long>> terms) {
  int deg = 0;
  for (auto [e, c] : terms) deg = std::max(deg, e);
  Poly p(deg + 1, 0);
  for (auto [e, c] : terms) p[e] += c;
  return p;
}

}  // namespace

std::vector<mpz_class> normalized_count_poly(int k, int n) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  check_rank(n);
  Poly p;
  switch (n) {
    case 1:
      p = {1};
      break;
    case 2:
      p = poly_mul(sparse({{0, 1}, {k - 1, -1}}), sparse({{0, 1}, {k, -1}}));
      break;
    default:
      p = poly_mul(sparse({{0, 1}, {k - 1, -1}}), sparse({{0, 1}, {k - 1, 1}}));
      p = poly_mul(p, sparse({{0, 1}, {k, -1}}));
      p = poly_mul(p, sparse({{0, 1},
                              {k, 1},
                              {2 * k - 2, -1},
                              {2 * k - 1, -2},
                              {2 * k, -1},
                              {3 * k - 3, 1},
                              {3 * k - 2, 1}}));
      break;
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

mpq_class eval_poly(const std::vector<mpz_class>& coeffs, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + mpq_class(coeffs[i]);
  acc.canonicalize();
  return acc;
}

}  // namespace ordgen
