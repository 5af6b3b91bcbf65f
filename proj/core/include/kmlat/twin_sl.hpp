#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kmlat/gf.hpp"
#include "kmlat/laurent.hpp"
#include "kmlat/weyl.hpp"

namespace kmlat {

// Affine permutation: a bijection pi of Z with pi(x+n) = pi(x)+n and
// sum(pi(i) - i) = 0 over a period; the Weyl group of type A~_{n-1}.
struct AffinePermutation {
  int n = 0;
  std::vector<long long> window;  // pi(1..n)

  static AffinePermutation identity(int n);
  long long operator()(long long x) const;
  bool is_identity() const;
  bool operator==(const AffinePermutation&) const = default;

  // sigma_c swaps x ~ c and x ~ c+1 (mod n), for c in 0..n-1.
  static AffinePermutation transposition(int n, int c);
  AffinePermutation compose(const AffinePermutation& rhs) const;  // this o rhs
  long long inversions() const;
  bool right_descent(int c) const;  // l(pi sigma_c) < l(pi)
};

struct BruhatFactorization {
  WeylElement w;          // Weyl coordinate of the cell
  AffinePermutation perm; // the same element as an affine permutation
  LaurentMatrix u;        // unique factor in U_w (resp. U_{-w})
  LaurentMatrix b;        // Borel factor of the requested sign
};

struct RefinedBruhatCell {
  WeylElement w;
  std::uint64_t u_count = 0;     // observed |U_w|
  std::uint64_t expected = 0;    // q^l(w)
  bool unique_first_factor = true;
  bool disjoint = true;
};

struct RefinedBruhatReport {
  bool ok = true;
  std::vector<RefinedBruhatCell> cells;
};

// The concrete model: SL_n over F_q[t,1/t] for n in {2,3}, with its Borel
// subgroups, root-group generators, Bruhat and Birkhoff factorizations and
// the twin-tree local data.
class TwinSL {
 public:
  TwinSL(int n, const GF& field, int degree_budget = 64);

  int n() const { return n_; }
  const GF& field() const { return ring_.field(); }
  const LaurentRing& ring() const { return ring_; }
  const WeylGroup& weyl() const { return weyl_; }

  LaurentMatrix identity() const { return laurent_identity(n_); }
  LaurentMatrix mul(const LaurentMatrix& a, const LaurentMatrix& b) const {
    return laurent_mul(ring_, a, b);
  }
  LaurentMatrix inverse(const LaurentMatrix& a) const {
    return laurent_inverse(ring_, a);
  }

  // Simple root-group generators: classical x_i(r) for 1 <= i <= n-1 and the
  // affine x_0(r) with r*t in the lower-left corner.
  LaurentMatrix gen_x(int i, GF::Elem r) const;
  // Opposite simple root groups.
  LaurentMatrix gen_x_neg(int i, GF::Elem r) const;
  // Monomial lifts of the simple reflections.
  LaurentMatrix gen_lift(int i) const;
  // Diagonal torus: n=2 takes {u}, n=3 takes {u, v} for D_{u,v}.
  LaurentMatrix gen_torus(std::span<const GF::Elem> units) const;
  // Root-group element for an arbitrary real root of A~_{n-1}.
  LaurentMatrix root_group_element(std::span<const Int> root, GF::Elem r) const;

  // Canonical monomial lift of a Weyl element (product of gen_lift along the
  // canonical reduced word).
  LaurentMatrix canonical_lift(const WeylElement& w) const;

  bool in_borel(const LaurentMatrix& m, Side sign) const;
  bool in_unipotent(const LaurentMatrix& m, Side sign) const;
  bool in_u_w(const LaurentMatrix& u, const WeylElement& w, Side sign) const;

  void check_unimodular(const LaurentMatrix& m) const;

  // Weyl coordinate of the Bruhat cell U_w w B_sign containing m.
  WeylElement bruhat_w(const LaurentMatrix& m, Side sign) const;
  // Full refined factorization m = u * lift(w) * b with u in U_w unique.
  BruhatFactorization bruhat_decompose(const LaurentMatrix& m, Side sign) const;

  // W-distance between positive chambers g B_+ and h B_+.
  WeylElement w_distance(const LaurentMatrix& g, const LaurentMatrix& h) const;
  // Codistance: the w with g^-1 h in B_+ w B_-.
  WeylElement codistance(const LaurentMatrix& g, const LaurentMatrix& h) const;
  // Codistance read from the negative side: the w with h^-1 g in B_- w B_+.
  WeylElement codistance_mp(const LaurentMatrix& h, const LaurentMatrix& g) const;

  // Chambers through the panel of type `panel` in the closure of chamber

  // c*B_+: explicit root-group translates for n = 2, the thickness formula
  // for n = 3.
  int thickness_at_panel(const LaurentMatrix& chamber, int panel) const;
  std::vector<LaurentMatrix> panel_chambers(const LaurentMatrix& chamber,
                                            int panel) const;

  // All q^l(w) elements of U_w as products of root-group elements over
  // Phi_{w^-1}.
  std::vector<LaurentMatrix> enumerate_u_w(const WeylElement& w) const;
  std::vector<std::vector<Int>> inversion_roots(const WeylElement& w) const;

  RefinedBruhatReport verify_refined_bruhat(int max_len, std::uint64_t seed,
                                            int samples_per_cell = 3) const;

  LaurentMatrix random_element(std::mt19937_64& rng, int factors = 10) const;
  LaurentMatrix random_borel(std::mt19937_64& rng, Side sign,
                             int factors = 6) const;

  // Affine-permutation coordinates of the Weyl group.
  AffinePermutation to_affine(const WeylElement& w) const;
  WeylElement from_affine(const AffinePermutation& p) const;

 private:
  enum class FlagKind { positive, negative };

  struct EchelonResult {
    std::vector<long long> pivot;  // per column j = 0..n-1
  };

  long long src_index(FlagKind kind, int j) const;
  EchelonResult affine_echelon(const LaurentMatrix& m, FlagKind source,
                               FlagKind pivot) const;
  AffinePermutation bruhat_perm(const LaurentMatrix& m, Side sign) const;
  AffinePermutation birkhoff_perm(const LaurentMatrix& m) const;
  AffinePermutation birkhoff_perm_mp(const LaurentMatrix& m) const;
  std::vector<int> perm_word(const AffinePermutation& p,
                             const std::vector<AffinePermutation>& gens) const;

  int n_;
  LaurentRing ring_;
  WeylGroup weyl_;
  std::vector<AffinePermutation> gen_perm_pos_;    // Bruhat(+) images of lifts
  std::vector<AffinePermutation> gen_perm_neg_;    // Bruhat(-) images
  std::vector<AffinePermutation> gen_perm_mixed_;  // Birkhoff (+-) images
  std::vector<AffinePermutation> gen_perm_mixed_mp_;  // Birkhoff (-+) images
};

GeneralizedCartanMatrix affine_gcm(int n);

}  // namespace kmlat
