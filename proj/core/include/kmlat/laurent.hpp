#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmlat/gf.hpp"

namespace kmlat {

// Sparse Laurent polynomial over a finite field; no stored zero coefficients,
// canonical (exponent-sorted) representation.
struct LaurentPoly {
  std::map<int, GF::Elem> terms;

  bool is_zero() const { return terms.empty(); }
  int val() const { return terms.begin()->first; }   // requires nonzero
  int deg() const { return terms.rbegin()->first; }  // requires nonzero
  GF::Elem coeff(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const LaurentPoly&) const = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(GF::Elem c) {
    LaurentPoly p;
    if (c != 0) p.terms[0] = c;
    return p;
  }
  static LaurentPoly monomial(GF::Elem c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms[exp] = c;
    return p;
  }
};

// Arithmetic bound to a field; matrix entries are capped at |exponent| <=
// degree_budget (exceeding it is an explicit error, not silent truncation).
class LaurentRing {
 public:
  explicit LaurentRing(const GF& field, int degree_budget = 64)
      : field_(&field), budget_(degree_budget) {}

  const GF& field() const { return *field_; }
  int budget() const { return budget_; }

  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) const;
  LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) const;
  LaurentPoly neg(const LaurentPoly& a) const;
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const;
  LaurentPoly mul_monomial(const LaurentPoly& a, GF::Elem c, int exp) const;
  LaurentPoly frobenius_coeffs(const LaurentPoly& a, std::uint64_t power) const;

  void check_budget(const LaurentPoly& a) const;

  std::string to_string(const LaurentPoly& a) const;

 private:
  const GF* field_;
  int budget_;
};

// Determinant-1 n x n matrix over F_q[t, 1/t]; n in {2, 3}.
struct LaurentMatrix {
  int n = 0;
  std::vector<LaurentPoly> e;  // row-major

  const LaurentPoly& at(int i, int j) const { return e[i * n + j]; }
  LaurentPoly& at(int i, int j) { return e[i * n + j]; }
  bool operator==(const LaurentMatrix&) const = default;
};

LaurentMatrix laurent_identity(int n);
LaurentMatrix laurent_mul(const LaurentRing& r, const LaurentMatrix& a,
                          const LaurentMatrix& b);
LaurentPoly laurent_det(const LaurentRing& r, const LaurentMatrix& a);
// Inverse by adjugate; requires det = 1.
LaurentMatrix laurent_inverse(const LaurentRing& r, const LaurentMatrix& a);
LaurentMatrix laurent_transpose_antidiag(const LaurentMatrix& a);
LaurentMatrix laurent_frobenius(const LaurentRing& r, const LaurentMatrix& a,
                                std::uint64_t power);

std::string laurent_matrix_key(const LaurentMatrix& a);

}  // namespace kmlat
