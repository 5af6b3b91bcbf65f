#include "kmlat/integers.hpp"

#include <stdexcept>

namespace kmlat {

Int det_bareiss(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) { pivot = i; break; }
      }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int iroot_floor(const Int& x, unsigned k) {
  if (x < 0) throw std::invalid_argument("iroot_floor: negative radicand");
  if (x == 0 || k == 1) return x;
  Int lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

}  // namespace kmlat
