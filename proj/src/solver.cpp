#include "ordgen/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordgen/counting.hpp"
#include "ordgen/errors.hpp"

namespace ordgen {

mpq_class eval_deficiency(const std::vector<DeficiencyTerm>& terms, const mpz_class& q) {
  mpq_class acc = 0;
  for (const auto& t : terms) {
    acc += mpq_class(t.coeff, ipow(q, static_cast<unsigned long>(t.exponent)));
  }
  acc.canonicalize();
  return acc;
}

namespace {

using GroupKey = std::pair<int, int>;

// Worst-case copy counts over all splitting patterns at non-special primes,
// where every entry has m = e = 1 and n = delta.
std::map<GroupKey, std::int64_t> generic_groups(const OrderSpec& spec) {
  std::map<GroupKey, std::int64_t> out;
  for (const auto& fac : spec.factors) {
    const int deg = fac.center_degree();
    for (int r = 1; r <= deg; ++r) out[{fac.degree, r}] += fac.copies * (deg / r);
  }
  return out;
}

void add_term(std::vector<DeficiencyTerm>& terms, const mpz_class& c, long a) {
  if (c == 0) return;
  for (auto& t : terms) {
    if (t.exponent == a) {
      t.coeff += c;
      return;
    }
  }
  terms.push_back({c, a});
}

void sort_terms(std::vector<DeficiencyTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const DeficiencyTerm& a, const DeficiencyTerm& b) { return a.exponent < b.exponent; });
}

// Bound on 1 - g_k(n,q,r)/q^{k n^2 r}, before the copy term.
std::vector<DeficiencyTerm> base_terms(int n, int r, int k) {
  std::vector<DeficiencyTerm> terms;
  if (n <= kMaxExactRank) {
    const auto poly = normalized_count_poly(k, n);
    add_term(terms, 1 - poly[0], 0);
    for (std::size_t j = 1; j < poly.size(); ++j) {
      if (poly[j] < 0) add_term(terms, -poly[j], static_cast<long>(r * j));
    }
  } else {
    add_term(terms, ipow(2, static_cast<unsigned long>((n + 7) / 2)),
             static_cast<long>(r) * (k - 1) * (n - 1));
  }
  // Tuples generating only over a subfield: |PGL_n| >= Q^{n^2-1}/2 for n >= 2.
  const long w = static_cast<long>(n) * n * (k - 1) + 1;
  for (long long s : divisors(r)) {
    if (s < r) add_term(terms, n >= 2 ? 2 : 1, (r - s) * w);
  }
  return terms;
}

long copy_exponent(int n, int r, int k) { return static_cast<long>(r) * (static_cast<long>(n) * n * (k - 1) + 1); }

std::vector<DeficiencyTerm> last_term(int n, int r, int k, std::int64_t copies) {
  auto terms = base_terms(n, r, k);
  add_term(terms, mpz_class(static_cast<long>(r)) * static_cast<long>(copies - 1), copy_exponent(n, r, k));
  sort_terms(terms);
  return terms;
}

// Sum over the copies i < M of the per-copy bounds.
std::vector<DeficiencyTerm> total_terms(int n, int r, int k, std::int64_t copies) {
  std::vector<DeficiencyTerm> terms;
  for (const auto& t : base_terms(n, r, k)) add_term(terms, t.coeff * static_cast<long>(copies), t.exponent);
  mpz_class pairs = mpz_class(static_cast<long>(copies)) * static_cast<long>(copies - 1) / 2;
  add_term(terms, pairs * r, copy_exponent(n, r, k));
  sort_terms(terms);
  return terms;
}

// Smallest q >= 2 with D(q) < 1; D is decreasing in q.
std::uint64_t smallest_passing_q(const std::vector<DeficiencyTerm>& terms) {
  auto passes = [&](std::uint64_t q) {
    return eval_deficiency(terms, mpz_class(static_cast<unsigned long>(q))) < 1;
  };
  if (passes(2)) return 2;
  std::uint64_t lo = 2;
  std::uint64_t hi = 4;
  while (!passes(hi)) {
    lo = hi;
    if (hi > (std::uint64_t{1} << 40)) throw Error(ErrorKind::NoCutoff, "cutoff beyond 2^40");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

CutoffCertificate prime_cutoff(const OrderSpec& spec, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  spec.validate();
  CutoffCertificate cert;
  cert.k = k;
  for (const auto& [key, copies] : generic_groups(spec)) {
    if (copies == 0) continue;
    GroupBound g;
    g.n = key.first;
    g.r = key.second;
    g.worst_copies = copies;
    g.last_term = last_term(g.n, g.r, k, copies);
    for (const auto& t : g.last_term) {
      if (t.exponent == 0) {
        throw Error(ErrorKind::NoCutoff, "k=" + std::to_string(k) + " cannot fit M_" + std::to_string(g.n) +
                                             " at any prime (bound does not decay)");
      }
    }
    cert.q0 = std::max(cert.q0, smallest_passing_q(g.last_term));
    cert.groups.push_back(std::move(g));
  }
  const mpz_class q0(static_cast<unsigned long>(cert.q0));
  cert.margin_at_q0 = 0;
  for (const auto& g : cert.groups) cert.margin_at_q0 = std::max(cert.margin_at_q0, eval_deficiency(g.last_term, q0));
  if (cert.q0 > 2) {
    mpq_class below = 0;
    for (const auto& g : cert.groups) below = std::max(below, eval_deficiency(g.last_term, q0 - 1));
    cert.margin_below_q0 = below;
  }
  return cert;
}

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Exact:
      return "EXACT";
    case VerdictKind::TwoOrThree:
      return "TWO_OR_THREE";
    case VerdictKind::OneOrTwo:
      return "ONE_OR_TWO";
  }
  return "?";
}

Verdict smallest_h(const OrderSpec& spec) {
  spec.validate();
  const auto special = special_primes(spec);
  std::map<std::uint64_t, LocalMinK> cache;
  auto local_k = [&](std::uint64_t p) -> const LocalMinK& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, min_k_local(classify(local_data(spec, p)))).first;
    return it->second;
  };

  for (int k = 1; k <= 4096; ++k) {
    CutoffCertificate cert;
    try {
      cert = prime_cutoff(spec, k);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoCutoff) continue;
      throw;
    }
    std::set<std::uint64_t> to_check(special.begin(), special.end());
    for (auto p : primes_below(cert.q0)) to_check.insert(p);
    bool ok = true;
    for (auto p : to_check) {
      if (local_k(p).k > k) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    Verdict v;
    v.h = k;
    v.cutoff = std::move(cert);
    for (auto p : to_check) {
      const auto& lk = local_k(p);
      v.checked.push_back({p, lk.k, lk.approximate});
      if (lk.k == k) v.critical_primes.push_back(p);
      if (lk.approximate) v.approximate = true;
    }
    bool has_degree_two = false;
    bool all_commutative = true;
    for (const auto& fac : spec.factors) {
      if (fac.degree == 2) has_degree_two = true;
      if (fac.degree != 1) all_commutative = false;
      if (fac.degree > kMaxExactRank) v.approximate = true;
    }
    v.r_k = all_commutative ? 1 : 2;
    if (k >= 3) {
      v.kind = VerdictKind::Exact;
    } else if (k == 2) {
      v.kind = VerdictKind::TwoOrThree;
      if (has_degree_two) {
        v.annotation = "a simple factor has dimension 4 over its center; no refinement";
      } else if (spec.free_over_base) {
        v.refined = 2;
      } else {
        v.annotation = "2 if the density of generating pairs is positive (Lambda not asserted free)";
      }
    } else {
      v.kind = VerdictKind::OneOrTwo;
    }
    return v;
  }
  throw Error(ErrorKind::InvalidArgument, "no k <= 4096 satisfies the capacity conditions");
}

// --- density ----------------------------------------------------------------------

std::uint64_t density_min_bound(const OrderSpec& spec) {
  std::uint64_t t = 0;
  std::uint64_t r = 1;
  int n = 1;
  for (const auto& fac : spec.factors) {
    t += static_cast<std::uint64_t>(fac.copies);
    r = std::max<std::uint64_t>(r, static_cast<std::uint64_t>(fac.center_degree()));
    n = std::max(n, fac.degree);
  }
  std::uint64_t rn = 1;
  for (int i = 0; i < n && rn < (std::uint64_t{1} << 40); ++i) rn *= r;
  std::uint64_t b = std::max<std::uint64_t>({25, t * r, rn});
  for (auto p : special_primes(spec)) b = std::max(b, p);
  return b;
}

DensityInterval density(const OrderSpec& spec, int k, std::uint64_t bound) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  spec.validate();
  DensityInterval out;
  out.k = k;
  out.bound = bound;
  if (!spec.free_over_base) {
    out.notes.push_back("Lambda is not asserted free over Z; the interval bounds the Euler product only");
  }
  for (const auto& fac : spec.factors) {
    if (fac.degree == 2 && k == 2) {
      out.zero = true;
      out.zero_reason = "factor '" + fac.name +
                        "' has degree 2: at k=2 its local factors are (1-1/p)(1-1/p^2) at almost all p, "
                        "so the product diverges to 0";
      out.lower = 0;
      out.upper = 0;
      return out;
    }
  }
  for (const auto& fac : spec.factors) {
    if (fac.degree > kMaxExactRank) {
      throw Error(ErrorKind::UnsupportedRank, "density needs exact local counts; factor '" + fac.name +
                                                  "' has degree " + std::to_string(fac.degree));
    }
  }
  const std::uint64_t need = density_min_bound(spec);
  if (bound < need) {
    throw Error(ErrorKind::BoundTooSmall,
                "prime bound " + std::to_string(bound) + " is below " + std::to_string(need));
  }

  const mpz_class d = spec.total_dimension();
  const unsigned long dk = d.get_ui() * static_cast<unsigned long>(k);
  mpq_class upper = 1;
  for (auto p : primes_below(bound + 1)) {
    const mpz_class q(static_cast<unsigned long>(p));
    mpq_class f(gen_count_local(k, classify(local_data(spec, p))), ipow(q, dk));
    f.canonicalize();
    out.factors.push_back({p, f});
    upper *= f;
    if (f == 0) {
      out.zero = true;
      out.zero_reason = "the local factor at p=" + std::to_string(p) + " vanishes";
      out.lower = 0;
      out.upper = 0;
      return out;
    }
  }
  upper.canonicalize();
  out.upper = upper;

  std::vector<DeficiencyTerm> tail_terms;
  for (const auto& [key, copies] : generic_groups(spec)) {
    if (copies == 0) continue;
    for (const auto& t : total_terms(key.first, key.second, k, copies)) add_term(tail_terms, t.coeff, t.exponent);
  }
  sort_terms(tail_terms);
  mpq_class tail = 0;
  for (const auto& t : tail_terms) {
    if (t.exponent <= 1) {
      out.notes.push_back("tail bound not summable at k=" + std::to_string(k) + " (a term decays like 1/p" +
                          (t.exponent == 0 ? "^0" : "") + "); lower bound set to 0");
      out.lower = 0;
      return out;
    }
    // sum_{p > B} p^{-a} <= integral_B^inf x^{-a} dx = B^{1-a}/(a-1).
    tail += mpq_class(t.coeff, ipow(mpz_class(static_cast<unsigned long>(bound)),
                                    static_cast<unsigned long>(t.exponent - 1)) *
                                   (t.exponent - 1));
  }
  tail.canonicalize();
  out.tail = tail;
  out.lower = tail >= 1 ? mpq_class(0) : mpq_class(upper * (1 - tail));
  out.lower.canonicalize();
  return out;
}

// --- quaternion family ----------------------------------------------------------------

OrderSpec quaternion_spec(const std::vector<std::uint64_t>& ramified, std::int64_t copies) {
  if (ramified.empty()) throw Error(ErrorKind::InvalidArgument, "ramified set must be nonempty");
  SimpleFactorSpec fac;
  fac.name = "B";
  fac.center_minpoly = {0, 1};
  fac.degree = 2;
  fac.copies = copies;
  for (auto p : ramified) fac.local_indices[p] = {2};
  OrderSpec spec;
  spec.factors.push_back(std::move(fac));
  spec.free_over_base = true;
  spec.validate();
  return spec;
}

QuaternionTable quaternion_example(const std::vector<std::uint64_t>& ramified, std::int64_t m_max) {
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "m_max must be positive");
  QuaternionTable t;
  t.ramified = ramified;
  std::sort(t.ramified.begin(), t.ramified.end());
  t.m_max = m_max;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const int h = smallest_h(quaternion_spec(t.ramified, m)).h;
    t.h.push_back(h);
    if (t.ranges.empty() || t.ranges.back().h != h) {
      t.ranges.push_back({h, m, m});
    } else {
      t.ranges.back().m_to = m;
    }
  }
  t.ranges.back().open = smallest_h(quaternion_spec(t.ramified, m_max + 1)).h == t.ranges.back().h;
  return t;
}

}  // namespace ordgen
