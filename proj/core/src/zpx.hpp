#ifndef SUMBOUND_SRC_ZPX_HPP
#define SUMBOUND_SRC_ZPX_HPP

// Minimal GF(p)[x] toolkit on raw coefficient vectors, used by the extension
// field internals: modulus reduction, inversion, Rabin irreducibility and the
// canonical modulus scan. Coefficient i sits at index i; no trailing zeros,
// so the zero polynomial is the empty vector. Requires p < 2^31.

#include <cstdint>
#include <utility>
#include <vector>

namespace sumbound::zpx {

using Poly = std::vector<std::uint32_t>;
using u64 = std::uint64_t;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline u64 inv_mod_p(u64 a, u64 p) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  long long res = t % static_cast<long long>(p);
  if (res < 0) res += static_cast<long long>(p);
  return static_cast<u64>(res);
}

inline Poly add(u64 p, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<std::uint32_t>((static_cast<u64>(a[i]) + b[i]) % p);
  trim(a);
  return a;
}

inline Poly sub(u64 p, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<std::uint32_t>((static_cast<u64>(a[i]) + p - b[i]) % p);
  trim(a);
  return a;
}

inline Poly mul(u64 p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  trim(r);
  return r;
}

// b must be nonzero.
inline std::pair<Poly, Poly> divrem(u64 p, Poly a, const Poly& b) {
  if (a.size() < b.size()) return {Poly{}, std::move(a)};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 binv = inv_mod_p(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const u64 c = static_cast<u64>(a.back()) * binv % p;
    const std::size_t k = a.size() - b.size();
    q[k] = static_cast<std::uint32_t>(c);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const u64 cb = c * b[i] % p;
      a[k + i] = static_cast<std::uint32_t>((static_cast<u64>(a[k + i]) + p - cb) % p);
    }
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

inline Poly mulmod(u64 p, const Poly& a, const Poly& b, const Poly& f) {
  return divrem(p, mul(p, a, b), f).second;
}

inline Poly monic(u64 p, Poly a) {
  if (a.empty() || a.back() == 1) return a;
  const u64 c = inv_mod_p(a.back(), p);
  for (auto& x : a) x = static_cast<std::uint32_t>(c * x % p);
  return a;
}

inline Poly gcd(u64 p, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divrem(p, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(p, std::move(a));
}

// Inverse of a modulo f; empty result when gcd(a, f) != 1.
inline Poly inverse_mod(u64 p, const Poly& a, const Poly& f) {
  Poly r0 = f, r1 = divrem(p, a, f).second;
  Poly t0, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = divrem(p, r0, r1);
    Poly t2 = sub(p, t0, mul(p, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) return {};
  const u64 c = inv_mod_p(r0[0], p);
  for (auto& x : t0) x = static_cast<std::uint32_t>(c * x % p);
  trim(t0);
  return divrem(p, std::move(t0), f).second;
}

inline Poly pow_mod(u64 p, Poly base, u64 e, const Poly& f) {
  Poly result{1};
  base = divrem(p, std::move(base), f).second;
  while (e != 0) {
    if (e & 1) result = mulmod(p, result, base, f);
    base = mulmod(p, base, base, f);
    e >>= 1;
  }
  return result;
}

inline std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> fs;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Rabin test: f irreducible over GF(p) iff x^{p^n} = x (mod f) and
// gcd(x^{p^{n/l}} - x, f) = 1 for every prime l dividing n = deg f.
// Frobenius powers are iterated, so p^n never materializes as an integer.
inline bool is_irreducible(u64 p, const Poly& f) {
  const int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = divrem(p, x, f).second;
  for (int k = 1; k <= n; ++k) frob[k] = pow_mod(p, frob[k - 1], p, f);
  if (!(frob[n] == frob[0])) return false;
  for (unsigned l : prime_factors(static_cast<unsigned>(n))) {
    Poly g = gcd(p, sub(p, frob[n / l], frob[0]), f);
    if (deg(g) != 0) return false;
  }
  return true;
}

// The monic irreducible of degree n whose coefficient vector (c_0..c_{n-1}),
// read as a base-p integer, is minimal. Empty result if none exists (cannot
// happen for prime p, n >= 1).
inline Poly canonical_irreducible(u64 p, unsigned n) {
  for (u64 m = 0;; ++m) {
    Poly f(n + 1, 0);
    f[n] = 1;
    u64 v = m;
    for (unsigned i = 0; i < n && v != 0; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (v != 0) return {};
    if (is_irreducible(p, f)) return f;
  }
}

}  // namespace sumbound::zpx

#endif
