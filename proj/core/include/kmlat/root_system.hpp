#pragma once

#include <span>
#include <vector>

#include "kmlat/integers.hpp"
#include "kmlat/weyl.hpp"

namespace kmlat {

// A real root together with the reflection fixing its wall.
struct Root {
  std::vector<Int> vector;
  WeylElement reflection;

  bool operator==(const Root& o) const { return vector == o.vector; }
};

struct RootEnumeration {
  std::vector<Root> roots;  // positive roots of height <= cap, sorted
  bool complete = false;    // true when the closure stabilized below the cap
};

// Positive real roots of height <= h via closure of the simple roots under
// simple reflections, each paired with its reflection word.
RootEnumeration enumerate_roots(const WeylGroup& w, const Int& height_cap,
                                std::uint64_t cap = kDefaultBallCap);
std::vector<Root> roots_up_to_height(const WeylGroup& w, const Int& height_cap,
                                     std::uint64_t cap = kDefaultBallCap);

// Builds the Root for an arbitrary real-root vector (either sign) by the
// depth-reduction walk; throws if the vector is not a real root.
Root root_from_vector(const WeylGroup& w, std::span<const Int> v);

Root negate(const Root& r);

// + iff chamber w lies in alpha, by the sign of apply(w^-1, alpha).
Side chamber_side(const WeylGroup& w, const WeylElement& chamber,
                  const Root& alpha);

enum class Certainty { yes, no, unresolved };

// Decision procedure: opposite pair -> no; finite wall-crossing order -> yes;
// otherwise witness search over the dihedral line and an ambient ball, with
// the nesting sign <alpha, beta-check> as refutation certificate.
Certainty is_prenilpotent(const WeylGroup& w, const Root& alpha,
                          const Root& beta, int radius = 12,
                          int order_cutoff = 24);

struct IntervalResult {
  std::vector<Root> members;
  bool certified = false;
  int search_radius = 0;
};

// Roots gamma with gamma >= alpha cap beta and -gamma >= (-alpha) cap (-beta),
// containment tested against all chambers within `radius`; certified only
// when group and root enumeration were both exhausted.
IntervalResult interval(const WeylGroup& w, const Root& alpha,
                        const Root& beta, const Int& height_cap = 64,
                        int radius = 12);

// Roots gamma = lambda*alpha + mu*beta with rational lambda, mu >= 0, solved
// exactly in the 2-plane.
std::vector<Root> linear_interval(const WeylGroup& w, const Root& alpha,
                                  const Root& beta, const Int& height_cap = 64);

// A point of the twin apartment: rational coordinates (a_s(x))_s in V*, plus
// the sign of the half it lives in.
struct ApartmentPoint {
  std::vector<Rat> coords;
  Side sign = Side::plus;
};

struct NormalizedPoint {
  WeylElement chamber;            // w with x = w . x0
  std::vector<Rat> fundamental;   // x0, all coordinates >= 0
  std::vector<int> facet_type;    // J(x) = { s : a_s(x0) = 0 }
};

// Greedy descent walk into the closed fundamental chamber; throws
// DegenerateSegment if the point is not in the Tits cone.
NormalizedPoint normalize_point(const WeylGroup& w, std::span<const Rat> coords);

// Two opposite-sign points, both of spherical facet type.
struct BalancedPair {
  ApartmentPoint plus_point;
  ApartmentPoint minus_point;
};

void validate_balanced_pair(const WeylGroup& w, const BalancedPair& pair);

struct PhiSets {
  std::vector<std::vector<Int>> phi_m;  // walls containing both points
  std::vector<std::vector<Int>> phi_u;  // strongly separating roots
};

// Exact enumeration of the separating and containing walls of the pair, after
// mapping the minus point to its opposite in the positive cone.
PhiSets phi_sets(const WeylGroup& w, const BalancedPair& pair);

// (q-1)^torus_rank * q^#Phi^u; requires Phi^m empty.
Int fixator_order_formula(const WeylGroup& w, const BalancedPair& pair,
                          const Int& q, int torus_rank);

}  // namespace kmlat
