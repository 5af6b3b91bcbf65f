#pragma once

#include <vector>

#include "kmlat/gcm.hpp"
#include "kmlat/integers.hpp"

namespace kmlat {

// Kac-Moody root datum (S, A, Lambda, (c_s), (h_s)) with Lambda = Z^rank.
// c_s are rows in Lambda, h_s rows in the dual; <c_s | h_t> = A_ts.
struct KacMoodyRootDatum {
  GeneralizedCartanMatrix gcm;
  int lattice_rank = 0;
  std::vector<std::vector<Int>> c;
  std::vector<std::vector<Int>> h;
};

// Throws unless <c_s | h_t> = A_ts holds for all s, t.
void check_datum(const KacMoodyRootDatum& d);

// Lambda-check free on the h_s; c_s = s-th column of A^T in the dual basis.
KacMoodyRootDatum simply_connected(const GeneralizedCartanMatrix& a);
// Lambda free on the c_s; h_s determined by A.
KacMoodyRootDatum adjoint(const GeneralizedCartanMatrix& a);
// The SL_n datum over the character lattice of the diagonal torus: affine
// GCM of type A~_{n-1} with c_0 = -sum c_i, h_0 = -sum h_i; the c's and h's
// are not free families.
KacMoodyRootDatum sl_n_datum(int n);

// (q-1)^lattice_rank.
Int torus_order(const KacMoodyRootDatum& d, const Int& q);

// Order of {t in Hom(Lambda, F_q^x) : c_s(t) = 1 for all s}, via exact Smith
// normal form of the matrix whose rows are the c_s.
Int center_order(const KacMoodyRootDatum& d, const Int& q);

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

}  // namespace kmlat
