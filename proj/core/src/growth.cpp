#include "kmlat/growth.hpp"

#include <algorithm>

#include "kmlat/error.hpp"

namespace kmlat {

const char* to_string(LatticeVerdict v) {
  switch (v) {
    case LatticeVerdict::lattice: return "lattice";
    case LatticeVerdict::not_lattice: return "not-lattice";
    case LatticeVerdict::boundary_undetermined: return "boundary-undetermined";
  }
  return "unknown";
}

GrowthSeries growth_coeffs(const WeylGroup& w, int depth, std::uint64_t cap) {
  if (depth < 0) throw Error(ErrorKind::InvalidInput, "depth must be >= 0");
  Ball b = w.ball(depth, cap);
  GrowthSeries g;
  for (const auto& layer : b.layers) g.coeffs.push_back(layer.size());
  while (static_cast<int>(g.coeffs.size()) <= depth) g.coeffs.push_back(0);
  g.exhausted = b.exhausted;
  std::uint64_t hash = 1469598103934665603ull;
  for (int s = 0; s < w.rank(); ++s) {
    for (int t = 0; t < w.rank(); ++t) {
      hash = (hash ^ static_cast<std::uint64_t>(w.gcm().at(s, t))) *
             1099511628211ull;
    }
  }
  g.source = "gcm:" + std::to_string(hash) + ";radius:" + std::to_string(depth);
  return g;
}

std::vector<Rat> RationalFunction::taylor(int n) const {
  std::vector<Rat> out(n + 1, Rat(0));
  for (int k = 0; k <= n; ++k) {
    Rat acc = k < static_cast<int>(num.size()) ? num[k] : Rat(0);
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) {
      acc -= den[j] * out[k - j];
    }
    out[k] = acc / den[0];
  }
  return out;
}

RationalFunction rational_series(const GrowthSeries& g, int max_den_degree) {
  const int n = static_cast<int>(g.coeffs.size()) - 1;
  constexpr int kSurplus = 4;  // over-determination margin
  for (int dd = 0; dd <= max_den_degree; ++dd) {
    for (int nd = 0; nd + dd + kSurplus <= n; ++nd) {
      // Unknowns q_1..q_dd with q_0 = 1; equations
      //   sum_j q_j d_{m-j} = 0 for m = nd+1 .. n.
      std::vector<std::vector<Rat>> rows;
      for (int m = nd + 1; m <= n; ++m) {
        std::vector<Rat> row(dd + 1, Rat(0));
        for (int j = 1; j <= dd; ++j) {
          if (m - j >= 0) row[j - 1] = Rat(g.coeffs[m - j]);
        }
        row[dd] = -Rat(g.coeffs[m]);
        rows.push_back(std::move(row));
      }
      // Gaussian elimination; reject inconsistent systems.
      std::vector<Rat> sol(dd, Rat(0));
      int lead = 0;
      std::vector<int> pivot_col;
      for (int col = 0; col < dd && lead < static_cast<int>(rows.size());
           ++col) {
        int p = -1;
        for (int r = lead; r < static_cast<int>(rows.size()); ++r) {
          if (rows[r][col] != 0) { p = r; break; }
        }
        if (p < 0) continue;
        std::swap(rows[lead], rows[p]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
          if (r == lead || rows[r][col] == 0) continue;
          Rat f = rows[r][col] / rows[lead][col];
          for (int cc = col; cc <= dd; ++cc) rows[r][cc] -= f * rows[lead][cc];
        }
        pivot_col.push_back(col);
        ++lead;
      }
      bool consistent = true;
      for (int r = lead; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][dd] != 0) { consistent = false; break; }
      }
      if (!consistent) continue;
      for (int r = 0; r < lead; ++r) {
        sol[pivot_col[r]] = rows[r][dd] / rows[r][pivot_col[r]];
      }
      RationalFunction f;
      f.available = true;
      f.den.assign(dd + 1, Rat(0));
      f.den[0] = 1;
      for (int j = 1; j <= dd; ++j) f.den[j] = sol[j - 1];
      f.num.assign(nd + 1, Rat(0));
      for (int m = 0; m <= nd; ++m) {
        Rat acc(0);
        for (int j = 0; j <= std::min(m, dd); ++j) {
          acc += f.den[j] * Rat(g.coeffs[m - j]);
        }
        f.num[m] = acc;
      }
      // Exact verification against every computed coefficient.
      auto t = f.taylor(n);
      bool ok = true;
      for (int m = 0; m <= n; ++m) {
        if (t[m] != Rat(g.coeffs[m])) { ok = false; break; }
      }
      if (ok) return f;
    }
  }
  return {};
}

namespace {

Rat rat_pow(const Rat& base, unsigned e) {
  using boost::multiprecision::pow;
  return Rat(pow(boost::multiprecision::numerator(base), e),
             pow(boost::multiprecision::denominator(base), e));
}

// Smallest binary rational u (to ~2^-24) with u^n >= d; a certified upper
// bound on d^{1/n}.
Rat nth_root_upper(const Int& d, int n) {
  if (d <= 0) return Rat(0);
  Int fl = iroot_floor(d, static_cast<unsigned>(n));
  Rat lo(fl), hi(fl + 1);
  if (rat_pow(lo, n) >= Rat(d)) return lo;
  for (int it = 0; it < 24; ++it) {
    Rat mid = (lo + hi) / 2;
    if (rat_pow(mid, n) >= Rat(d)) hi = mid; else lo = mid;
  }
  return hi;
}

}  // namespace

LatticeReport lattice_check(const GrowthSeries& g, const Int& q,
                            int torus_rank) {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "q must be >= 2");
  const int n = static_cast<int>(g.coeffs.size()) - 1;
  LatticeReport rep;
  rep.q = q;
  rep.depth = n;
  rep.torus_rank = torus_rank;
  rep.exhausted = g.exhausted;

  Rat sum(0);
  Int qpow = 1;
  for (int k = 0; k <= n; ++k) {
    sum += Rat(g.coeffs[k], qpow);
    qpow *= q;
  }
  rep.partial_sum = sum;
  rep.covolume_bound =
      sum / Rat(boost::multiprecision::pow(q - 1,
                                           static_cast<unsigned>(torus_rank)));

  // Tail window for the growth-rate bracket.
  const int window = std::max(3, n / 3);
  const int start = std::max(1, n - window);
  bool have_ratio = false;
  Rat lo(0), hi(0);
  for (int k = start; k < n; ++k) {
    if (g.coeffs[k] == 0) continue;
    Rat ratio(g.coeffs[k + 1], g.coeffs[k]);
    if (!have_ratio) {
      lo = hi = ratio;
      have_ratio = true;
    } else {
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  for (int k = std::max(1, start); k <= n; ++k) {
    if (g.coeffs[k] == 0) continue;
    Rat bound = nth_root_upper(g.coeffs[k], k);
    if (!have_ratio) {
      lo = Rat(0);
      hi = bound;
      have_ratio = true;
    } else {
      hi = std::max(hi, bound);
    }
  }
  rep.rate_lower = lo;
  rep.rate_upper = hi;

  if (g.exhausted) {
    rep.verdict = LatticeVerdict::lattice;  // finite sum
  } else if (rep.rate_upper < Rat(q)) {
    rep.verdict = LatticeVerdict::lattice;
  } else if (rep.rate_lower > Rat(q)) {
    rep.verdict = LatticeVerdict::not_lattice;
  } else {
    rep.verdict = LatticeVerdict::boundary_undetermined;
  }
  return rep;
}

}  // namespace kmlat
