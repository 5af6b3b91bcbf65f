#include "kmlat/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "kmlat/error.hpp"

namespace kmlat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Dense little-endian coefficient vectors over F_p.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    // m is monic
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return trim(std::move(c));
}

bool divides(const Poly& d, Poly a, int p) {
  // d monic-izable, deg d >= 1
  a = trim(std::move(a));
  Poly dm = trim(d);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x) {
      if (x * dm.back() % p == 1) return x;
    }
    return 1;
  }();
  while (static_cast<int>(a.size()) >= static_cast<int>(dm.size())) {
    const int shift = static_cast<int>(a.size()) - static_cast<int>(dm.size());
    const int f = a.back() * lead_inv % p;
    for (size_t i = 0; i < dm.size(); ++i) {
      a[i + shift] = ((a[i + shift] - f * dm[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a.empty();
}

bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (f[0] == 0 && k > 1) return false;  // divisible by x
  // Trial division by all monic polynomials of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

GF::GF(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p is not prime");
  if (k < 1 || k > 4) {
    throw Error(ErrorKind::InvalidInput, "field degree k must be in 1..4");
  }
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  // Lexicographically least monic irreducible: scan encoded constants upward.
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end() - 1);
      return;
    }
  }
  throw Error(ErrorKind::Internal, "no irreducible modulus found");
}

const GF& GF::get(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<GF>(new GF(p, k))).first;
  }
  return *it->second;
}

std::vector<int> GF::unpack(Elem a) const {
  std::vector<int> d(k_, 0);
  for (int i = 0; i < k_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

GF::Elem GF::pack(const std::vector<int>& digits) const {
  Elem a = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    a = static_cast<Elem>(a * p_ + (i < static_cast<int>(digits.size())
                                        ? digits[i] % p_
                                        : 0));
  }
  return a;
}

GF::Elem GF::add(Elem a, Elem b) const {
  auto da = unpack(a), db = unpack(b);
  for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return pack(da);
}

GF::Elem GF::sub(Elem a, Elem b) const {
  auto da = unpack(a), db = unpack(b);
  for (int i = 0; i < k_; ++i) da[i] = ((da[i] - db[i]) % p_ + p_) % p_;
  return pack(da);
}

GF::Elem GF::neg(Elem a) const { return sub(0, a); }

GF::Elem GF::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  auto da = unpack(a), db = unpack(b);
  Poly prod = poly_mul(da, db, p_);
  Poly m(modulus_);
  m.push_back(1);
  Poly r = poly_mod(std::move(prod), m, p_);
  std::vector<int> digits(r.begin(), r.end());
  return pack(digits);
}

GF::Elem GF::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

GF::Elem GF::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidInput, "inverse of zero");
  return pow(a, q_ - 2);
}

std::vector<GF::Elem> GF::all_elements() const {
  std::vector<Elem> out;
  for (std::uint64_t v = 0; v < q_; ++v) out.push_back(static_cast<Elem>(v));
  return out;
}

GF::Elem GF::generator() const {
  std::vector<std::uint64_t> primes;
  std::uint64_t m = q_ - 1;
  for (std::uint64_t r = 2; r * r <= m; ++r) {
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t v = 1; v < q_; ++v) {
    Elem g = static_cast<Elem>(v);
    bool ok = true;
    for (std::uint64_t r : primes) {
      if (pow(g, (q_ - 1) / r) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::Internal, "no multiplicative generator found");
}

GF::Elem GF::parse(const std::string& s) const {
  std::uint64_t v = std::stoull(s);
  if (v >= q_) {
    throw Error(ErrorKind::InvalidInput, "field element code out of range");
  }
  return static_cast<Elem>(v);
}

}  // namespace kmlat
