#include "kmlat/datum.hpp"

#include <algorithm>

#include "kmlat/error.hpp"

namespace kmlat {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void check_datum(const KacMoodyRootDatum& d) {
  const int n = d.gcm.rank();
  if (static_cast<int>(d.c.size()) != n || static_cast<int>(d.h.size()) != n) {
    throw Error(ErrorKind::InvalidInput, "datum needs one c_s and h_s per generator");
  }
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(d.c[s].size()) != d.lattice_rank ||
        static_cast<int>(d.h[s].size()) != d.lattice_rank) {
      throw Error(ErrorKind::DimensionMismatch, "c_s/h_s length != lattice rank");
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (dot(d.c[s], d.h[t]) != Int(d.gcm.at(t, s))) {
        throw Error(ErrorKind::InvalidInput,
                    "pairing <c_s|h_t> != A_ts", s, t);
      }
    }
  }
}

KacMoodyRootDatum simply_connected(const GeneralizedCartanMatrix& a) {
  const int n = a.rank();
  KacMoodyRootDatum d;
  d.gcm = a;
  d.lattice_rank = n;
  d.h.assign(n, std::vector<Int>(n, 0));
  d.c.assign(n, std::vector<Int>(n, 0));
  for (int s = 0; s < n; ++s) d.h[s][s] = 1;
  // <c_s | h_t> = c_s[t] must equal A_ts.
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) d.c[s][t] = a.at(t, s);
  }
  check_datum(d);
  return d;
}

KacMoodyRootDatum adjoint(const GeneralizedCartanMatrix& a) {
  const int n = a.rank();
  KacMoodyRootDatum d;
  d.gcm = a;
  d.lattice_rank = n;
  d.c.assign(n, std::vector<Int>(n, 0));
  d.h.assign(n, std::vector<Int>(n, 0));
  for (int s = 0; s < n; ++s) d.c[s][s] = 1;
  // <c_s | h_t> = h_t[s] must equal A_ts.
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) d.h[t][s] = a.at(t, s);
  }
  check_datum(d);
  return d;
}

KacMoodyRootDatum sl_n_datum(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "sl_n_datum needs n >= 2");
  const int r = n - 1;
  // Affine GCM A~_{n-1} indexed 0..n-1.
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  if (n == 2) {
    a[0][1] = a[1][0] = -2;
  } else {
    for (int i = 0; i < n; ++i) {
      a[i][(i + 1) % n] = -1;
      a[(i + 1) % n][i] = -1;
    }
  }
  KacMoodyRootDatum d;
  d.gcm = validate_gcm(a);
  d.lattice_rank = r;
  // Lambda = X^*(T) for the diagonal torus of SL_n, coordinates f_1..f_{n-1}
  // (f_n = -f_1-...-f_{n-1}).  c_i = f_i - f_{i+1}; h_i the matching coroot.
  std::vector<std::vector<Int>> c(n, std::vector<Int>(r, 0));
  std::vector<std::vector<Int>> h(n, std::vector<Int>(r, 0));
  for (int i = 1; i <= r; ++i) {
    // c_i = f_i - f_{i+1}
    c[i][i - 1] += 1;
    if (i < r) {
      c[i][i] -= 1;
    } else {
      for (int j = 0; j < r; ++j) c[i][j] += 1;  // -f_n
    }
    // h_i = e_i - e_{i+1} in cocharacter coordinates (dual basis to f).
    h[i][i - 1] += 1;
    if (i < r) h[i][i] -= 1;
  }
  for (int j = 0; j < r; ++j) {
    Int sc = 0, sh = 0;
    for (int i = 1; i <= r; ++i) {
      sc += c[i][j];
      sh += h[i][j];
    }
    c[0][j] = -sc;
    h[0][j] = -sh;
  }
  d.c = std::move(c);
  d.h = std::move(h);
  check_datum(d);
  return d;
}

Int torus_order(const KacMoodyRootDatum& d, const Int& q) {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "q must be >= 2");
  return boost::multiprecision::pow(q - 1,
                                    static_cast<unsigned>(d.lattice_rank));
}

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<Int> factors;
  int top = 0;
  while (top < rows && top < cols) {
    // Find the nonzero entry of least absolute value in the working block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = top; i < rows; ++i) {
      for (int j = top; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // block is zero
    std::swap(m[top], m[pi]);
    for (int i = top; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

    bool clean = true;
    for (int i = top + 1; i < rows; ++i) {
      if (m[i][top] != 0) {
        Int k = m[i][top] / m[top][top];
        for (int j = top; j < cols; ++j) m[i][j] -= k * m[top][j];
        if (m[i][top] != 0) clean = false;
      }
    }
    for (int j = top + 1; j < cols; ++j) {
      if (m[top][j] != 0) {
        Int k = m[top][j] / m[top][top];
        for (int i = top; i < rows; ++i) m[i][j] -= k * m[i][top];
        if (m[top][j] != 0) clean = false;
      }
    }
    if (!clean) continue;  // smaller remainders appeared; pick a new pivot

    // Divisibility sweep: the pivot must divide the remaining block.
    bool divides = true;
    for (int i = top + 1; i < rows && divides; ++i) {
      for (int j = top + 1; j < cols; ++j) {
        if (m[i][j] % m[top][top] != 0) {
          for (int jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;

    factors.push_back(abs(m[top][top]));
    ++top;
  }
  return factors;
}

Int center_order(const KacMoodyRootDatum& d, const Int& q) {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "q must be >= 2");
  const Int group_order = q - 1;  // F_q^x is cyclic of order q-1
  auto factors = smith_invariant_factors(d.c);
  Int order = 1;
  for (const Int& f : factors) order *= boost::multiprecision::gcd(group_order, f);
  const int free_rank = d.lattice_rank - static_cast<int>(factors.size());
  order *= boost::multiprecision::pow(group_order,
                                      static_cast<unsigned>(free_rank));
  return order;
}

}  // namespace kmlat
