#pragma once

#include <string>
#include <vector>

#include "kmlat/integers.hpp"
#include "kmlat/weyl.hpp"

namespace kmlat {

struct GrowthSeries {
  std::vector<Int> coeffs;  // d_0..d_N, element counts by length
  bool exhausted = false;   // true when W was fully enumerated (finite type)
  std::string source;       // enumeration metadata (matrix hash, radius)
};

GrowthSeries growth_coeffs(const WeylGroup& w, int depth,
                           std::uint64_t cap = kDefaultBallCap);

struct RationalFunction {
  bool available = false;
  std::vector<Rat> num;  // numerator coefficients, low degree first
  std::vector<Rat> den;  // denominator coefficients, den[0] = 1

  std::vector<Rat> taylor(int n) const;  // first n+1 Maclaurin coefficients
};

// A rational function whose Maclaurin coefficients match d_0..d_N exactly,
// found by exact linear algebra over candidate denominator degrees, or
// "unavailable".  Requires a few surplus equations beyond the unknowns so the
// candidate is over-determined.
RationalFunction rational_series(const GrowthSeries& g, int max_den_degree = 12);

enum class LatticeVerdict { lattice, not_lattice, boundary_undetermined };

const char* to_string(LatticeVerdict v);

struct LatticeReport {
  Int q;
  int depth = 0;
  int torus_rank = 0;
  LatticeVerdict verdict = LatticeVerdict::boundary_undetermined;
  Rat partial_sum;     // sum_{n<=N} d_n / q^n, exact
  Rat covolume_bound;  // partial_sum / (q-1)^torus_rank
  Rat rate_lower;      // rational interval for lim sup d_n^{1/n}
  Rat rate_upper;
  bool exhausted = false;
};

// Growth-rate bracketing in exact rational arithmetic: the interval upper end
// combines tail ratios with integer k-th-root bounds on d_n^{1/n} (the latter
// are true upper bounds for the growth rate, by submultiplicativity of the
// length filtration); the lower end is the least tail ratio.  Verdict
// "lattice" when the upper bound < q, "not-lattice" when the lower bound > q,
// boundary-undetermined otherwise.  A fully enumerated finite group is always
// a lattice (the series is a finite sum).
LatticeReport lattice_check(const GrowthSeries& g, const Int& q,
                            int torus_rank);

}  // namespace kmlat
