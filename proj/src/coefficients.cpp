#include "twistlab/coefficients.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "twistlab/discriminant.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::string curve_key(const Curve& E) {
  std::string k = std::to_string(E.conductor);
  for (auto v : E.a) k += "," + std::to_string(v);
  for (const auto& [p, r] : E.bad_override)
    k += ";" + std::to_string(p) + ":" + std::to_string(static_cast<int>(r));
  return k;
}

struct ApCache {
  std::int64_t limit = 0;
  std::shared_ptr<const std::vector<std::int32_t>> ap;
};

}  // namespace

std::vector<std::int32_t> primes_up_to(std::int64_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::int32_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::int32_t>(i));
    for (std::int64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

std::shared_ptr<const std::vector<std::int32_t>> ap_table(const Curve& E,
                                                           std::int64_t limit) {
  static std::map<std::string, ApCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  ApCache& c = cache[curve_key(E)];
  if (c.limit < limit) {
    auto primes = primes_up_to(limit);
    auto ap = std::make_shared<std::vector<std::int32_t>>(primes.size());
    for (size_t i = 0; i < primes.size(); ++i)
      (*ap)[i] = trace_at(E, primes[i]);
    c.limit = limit;
    c.ap = std::move(ap);
  }
  return c.ap;
}

std::vector<std::int64_t> coeff_A(const Curve& E, std::int64_t count) {
  check(count >= 1, Errc::insufficient_coefficients, "need at least one coefficient");
  auto ap_ptr = ap_table(E, count);
  const auto& ap = *ap_ptr;
  auto primes = primes_up_to(count);
  // Smallest prime factor sieve.
  std::vector<std::int32_t> spf(count + 1, 0);
  for (size_t i = 0; i < primes.size(); ++i) {
    std::int64_t p = primes[i];
    for (std::int64_t j = p; j <= count; j += p)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(p);
  }
  std::vector<std::int64_t> A(count + 1, 0);
  A[1] = 1;
  // Prime index lookup aligned with `primes`.
  std::map<std::int64_t, std::int64_t> pidx;
  for (size_t i = 0; i < primes.size(); ++i) pidx[primes[i]] = i;
  for (std::int64_t n = 2; n <= count; ++n) {
    std::int64_t p = spf[n];
    std::int64_t pk = p, m = n / p;
    while (m % p == 0) {
      pk *= p;
      m /= p;
    }
    if (m > 1) {
      A[n] = A[pk] * A[m];
      continue;
    }
    // n = p^k.
    std::int64_t apv = ap[pidx[p]];
    if (n == p) {
      A[n] = apv;
    } else if (E.conductor % p == 0) {
      A[n] = apv * A[n / p];
    } else {
      A[n] = apv * A[n / p] - p * A[n / (p * p)];
    }
  }
  return A;
}

std::vector<double> twisted_a(const Curve& E, std::int64_t d, std::int64_t count) {
  auto A = coeff_A(E, count);
  std::vector<double> a(count + 1, 0.0);
  for (std::int64_t n = 1; n <= count; ++n)
    a[n] = kronecker(d, n) * static_cast<double>(A[n]) / std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace twistlab
