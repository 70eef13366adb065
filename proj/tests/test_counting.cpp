#include "doctest.h"

#include "ordgen/counting.hpp"
#include "ordgen/errors.hpp"
#include "ordgen/finalg.hpp"

using namespace ordgen;

namespace {

PrimePower pp(std::uint64_t q) { return *PrimePower::from_q(q); }

FiniteAlgebra power_of(const FiniteAlgebra& a, int copies) {
  FiniteAlgebra out = a;
  for (int i = 1; i < copies; ++i) out = product_algebra(out, a);
  return out;
}

}  // namespace

TEST_CASE("small number theory helpers") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
  CHECK(gl_order(2, 2) == 6);
  CHECK(pgl_order(2, 3) == 24);
  CHECK(pgl_order(3, 2) == 168);
}

TEST_CASE("closed forms agree with the exhaustive oracle") {
  CHECK(gen_count_exact(1, 1, 7) == 7);
  CHECK(gen_count_exact(2, 2, 2) == brute_gen_count(matrix_algebra(2, pp(2)), 2));
  CHECK(gen_count_exact(2, 2, 2) == 96);
  CHECK(gen_count_exact(2, 2, 3) == brute_gen_count(matrix_algebra(2, pp(3)), 2));
  CHECK(gen_count_exact(1, 2, 3) == 0);
  CHECK(gen_count_exact(3, 2, 2) == brute_gen_count(matrix_algebra(2, pp(2)), 3));
  OracleOptions opt;
  opt.workers = 4;
  CHECK(gen_count_exact(2, 2, 4) == brute_gen_count(matrix_algebra(2, pp(4)), 2, opt));
  CHECK(gen_count_exact(2, 3, 2) == brute_gen_count(matrix_algebra(3, pp(2)), 2, opt));
  CHECK(gen_count_exact(1, 3, 5) == 0);
}

TEST_CASE("closed forms raise UnsupportedRank beyond n = 3") {
  try {
    gen_count_exact(2, 4, 2);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedRank);
  }
}

TEST_CASE("lower bound never exceeds the exact count") {
  for (int n = 1; n <= 3; ++n)
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11})
      for (int k = 1; k <= 6; ++k) {
        const auto b = gen_count_lower(k, n, q);
        REQUIRE(b.exact.has_value());
        CHECK(b.lower <= *b.exact);
        CHECK(b.lower >= 0);
      }
  for (int n = 4; n <= 7; ++n) {
    const auto b = gen_count_lower(3, n, 5);
    CHECK_FALSE(b.exact.has_value());
    CHECK(b.lower > 0);
    CHECK(b.lower < ipow(5, 3 * n * n));
  }
}

TEST_CASE("twisted counts agree with the exhaustive oracle") {
  OracleOptions opt;
  opt.workers = 4;
  CHECK(gen_count_twisted(1, 1, 2, 2) == brute_gen_count(matrix_algebra(1, pp(2), 2), 1));
  CHECK(gen_count_twisted(1, 1, 2, 2) == 2);
  CHECK(gen_count_twisted(2, 1, 2, 2) == 12);
  CHECK(gen_count_twisted(1, 1, 3, 3) == brute_gen_count(matrix_algebra(1, pp(3), 3), 1));
  CHECK(gen_count_twisted(2, 1, 2, 4) == brute_gen_count(matrix_algebra(1, pp(2), 4), 2, opt));
  CHECK(gen_count_twisted(2, 2, 2, 2) == brute_gen_count(matrix_algebra(2, pp(2), 2), 2, opt));
  CHECK(gen_count_twisted(2, 2, 2, 1) == 96);
}

TEST_CASE("pre-inversion identity") {
  for (int n = 1; n <= 3; ++n)
    for (int q : {2, 3, 4})
      for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k) {
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(r);
          CAPTURE(k);
          mpq_class lhs = 0;
          for (long long s : divisors(r)) {
            const mpz_class qs = ipow(q, static_cast<unsigned long>(s));
            lhs += mpq_class(gen_count_twisted(k, n, q, static_cast<int>(s)), pgl_order(n, qs));
          }
          lhs.canonicalize();
          const mpz_class qr = ipow(q, static_cast<unsigned long>(r));
          mpq_class rhs(gen_count_exact(k, n, qr), pgl_order(n, qr));
          rhs.canonicalize();
          CHECK(lhs == rhs);
        }
}

TEST_CASE("twisted lower bound for n <= 3 is exact and below the count for n >= 4") {
  CHECK(gen_count_twisted_lower(2, 2, 3, 2) == gen_count_twisted(2, 2, 3, 2));
  for (int r = 1; r <= 3; ++r) {
    const auto lo = gen_count_twisted_lower(3, 4, 3, r);
    CHECK(lo > 0);
    CHECK(lo <= gen_count_lower(3, 4, ipow(3, static_cast<unsigned long>(r))).lower);
  }
}

TEST_CASE("power counts agree with the exhaustive oracle") {
  const auto f2 = matrix_algebra(1, pp(2));
  const auto f4 = matrix_algebra(1, pp(2), 2);
  CHECK(gen_count_power(1, 1, 2, 1, 2) == brute_gen_count(power_of(f2, 2), 1));
  CHECK(gen_count_power(1, 1, 2, 1, 2) == 2);
  CHECK(gen_count_power(1, 1, 2, 1, 3) == 0);
  CHECK(gen_count_power(1, 1, 2, 1, 3) == brute_gen_count(power_of(f2, 3), 1));
  CHECK(gen_count_power(2, 1, 2, 1, 3) == brute_gen_count(power_of(f2, 3), 2));
  CHECK(gen_count_power(1, 1, 2, 2, 2) == brute_gen_count(power_of(f4, 2), 1));
  CHECK(gen_count_power(2, 1, 2, 2, 2) == brute_gen_count(power_of(f4, 2), 2));
  CHECK(gen_count_power(2, 1, 2, 2, 2) == 120);
  OracleOptions opt;
  opt.workers = 4;
  const auto m = matrix_algebra(2, pp(2));
  CHECK(gen_count_power(2, 2, 2, 1, 2) == brute_gen_count(power_of(m, 2), 2, opt));
  CHECK(gen_count_power(2, 2, 2, 1, 0) == 1);
}

TEST_CASE("capacity is nondecreasing in k") {
  for (int n = 1; n <= 3; ++n)
    for (int q : {2, 3, 4, 5, 7, 8, 9})
      for (int s = 1; s <= 3; ++s) {
        mpz_class prev = 0;
        for (int k = 1; k <= 6; ++k) {
          const auto c = copy_capacity(k, n, q, s);
          CHECK(c >= prev);
          prev = c;
        }
      }
}

TEST_CASE("min_k_for_copies") {
  CHECK(min_k_for_copies(1, 2, 1, 2) == 1);
  CHECK(min_k_for_copies(1, 2, 1, 3) == 2);
  CHECK(min_k_for_copies(2, 2, 1, 16) == 2);
  CHECK(min_k_for_copies(2, 2, 1, 17) == 3);
  CHECK(min_k_for_copies(2, 2, 1, 448) == 3);
  CHECK(min_k_for_copies(2, 2, 1, 449) == 4);
  CHECK(copy_capacity(2, 2, 2, 1) == 16);
  CHECK(copy_capacity(3, 2, 2, 1) == 448);
  CHECK(copy_capacity(3, 2, 3, 1) == 18954);
}

TEST_CASE("normalized polynomial reproduces the closed forms") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k) {
      const auto poly = normalized_count_poly(k, n);
      for (int q : {2, 3, 5, 9}) {
        const mpq_class v = eval_poly(poly, mpq_class(1, q));
        mpq_class expect(gen_count_exact(k, n, q), ipow(q, static_cast<unsigned long>(k * n * n)));
        expect.canonicalize();
        CHECK(v == expect);
      }
    }
}
