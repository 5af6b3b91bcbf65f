#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kmlat {

// GF(p^k), k <= 4, elements encoded as sum c_i p^i with polynomial
// coefficients c_i < p.  The modulus is the lexicographically least monic
// irreducible of degree k (constant coefficient varies fastest), so
// serializations are stable across runs; the chosen moduli are mirrored in a
// fixture checked by the test suite.
class GF {
 public:
  using Elem = std::uint32_t;

  static const GF& get(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t q() const { return q_; }
  // Modulus coefficients c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

  Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }
  bool valid(Elem a) const { return a < q_; }

  std::vector<Elem> all_elements() const;
  Elem generator() const;  // a multiplicative generator of GF(q)^x

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;

 private:
  GF(int p, int k);

  std::vector<int> unpack(Elem a) const;
  Elem pack(const std::vector<int>& digits) const;

  int p_ = 2;
  int k_ = 1;
  std::uint64_t q_ = 2;
  std::vector<int> modulus_;
};

}  // namespace kmlat
