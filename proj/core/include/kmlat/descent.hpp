#pragma once

#include <string>
#include <vector>

#include "kmlat/gcm.hpp"
#include "kmlat/integers.hpp"
#include "kmlat/weyl.hpp"

namespace kmlat {

// A Dynkin-diagram automorphism: a permutation of S with A_{ps,pt} = A_{st}.
struct DiagramAutomorphism {
  std::vector<int> perm;
  int order = 1;
};

DiagramAutomorphism validate_automorphism(const GeneralizedCartanMatrix& a,
                                          const std::vector<int>& perm);

// Quasi-split form data: GCM, diagram automorphism, anisotropic-kernel types
// (default empty) and the residue prime power for thicknesses.
struct QuasiSplitForm {
  GeneralizedCartanMatrix gcm;
  DiagramAutomorphism aut;
  std::vector<int> s0;
  Int q = 2;
};

void validate_form(const QuasiSplitForm& form);

struct RelativeApartment {
  int dimension = 0;                    // solution-space dimension
  std::vector<std::vector<Rat>> basis;  // basis of the null space
};

// Exact rational null-space of { a_s(x) = 0 for s in S0,
// a_s(x) = a_t(x) for orbit-equal s, t }.
RelativeApartment relative_apartment(const QuasiSplitForm& form);

enum class OrbitType { singleton, orthogonal_pair, a2_pair, unsupported };

struct OrbitInfo {
  std::vector<int> members;
  OrbitType type = OrbitType::unsupported;
  WeylElement generator;  // relative reflection r_o
  Int thickness = 0;      // panel thickness at this orbit
  std::string label;
};

std::vector<std::vector<int>> automorphism_orbits(const DiagramAutomorphism& aut,
                                                  int rank);
OrbitType classify_orbit(const GeneralizedCartanMatrix& a,
                         const std::vector<int>& orbit);

// Thickness q+1 / q^2+1 / q^3+1 for singleton / orthogonal pair / A2 pair.
Int panel_thickness(const std::vector<int>& orbit,
                    const GeneralizedCartanMatrix& a, const Int& q);

struct RelativeCoxeterEntry {
  bool finite = true;
  int m = 1;  // valid when finite; otherwise the cutoff that was exceeded
};

struct RelativeCoxeter {
  std::vector<std::string> labels;
  std::vector<std::vector<RelativeCoxeterEntry>> entries;
};

// One generator per orbit (s / st / sts for singleton / m=2 pair / m=3 pair);
// entries by order_of_product, "exceeds-cutoff" reported distinctly.
RelativeCoxeter relative_weyl(const QuasiSplitForm& form, int cutoff = 64);

struct RelativeData {
  int apartment_dim = 0;
  std::vector<OrbitInfo> orbits;
  RelativeCoxeter relative_coxeter;
  // Alternating valency sequence along the relative apartment when the
  // relative Weyl group is (or exceeds cutoff towards) the infinite dihedral
  // group on two panel types.
  std::vector<Int> valency_sequence;
  bool relative_is_tree = false;
};

RelativeData descent_report(const QuasiSplitForm& form, int cutoff = 64);

// The r x r GCM with 2 on the diagonal, 0 between cyclic neighbours and -2
// otherwise; its Coxeter matrix is the right-angled r-gon group.
GeneralizedCartanMatrix fuchsian_gcm(int r);

struct Su3Report {
  Int q;
  bool involution_squares_to_identity = true;
  bool generator_formulas_hold = true;
  bool torus_formula_holds = true;
  // x_1(r)* = x_2(eps * r^sigma) etc.; eps = +1 in characteristic 2.
  int eps = 1;
  std::uint64_t a2_orbit_fixed = 0;      // in the 3-root unipotent group
  std::uint64_t a2_orbit_total = 0;
  std::uint64_t singleton_fixed = 0;     // in the affine root group
  std::uint64_t singleton_total = 0;
  bool counts_match_thickness_rule = true;
};

// Builds * = tau o iota o sigma on SL_3(F_{q^2}[t,1/t]) and verifies it on
// generators; counts *-fixed points in the two twisted root-group
// configurations.
Su3Report su3_involution_check(const Int& q, std::uint64_t seed = 7);

}  // namespace kmlat
