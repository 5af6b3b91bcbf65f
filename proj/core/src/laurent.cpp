#include "kmlat/laurent.hpp"

#include "kmlat/error.hpp"

namespace kmlat {

LaurentPoly LaurentRing::add(const LaurentPoly& a, const LaurentPoly& b) const {
  LaurentPoly out = a;
  for (const auto& [exp, c] : b.terms) {
    GF::Elem s = field_->add(out.coeff(exp), c);
    if (s == 0) {
      out.terms.erase(exp);
    } else {
      out.terms[exp] = s;
    }
  }
  return out;
}

LaurentPoly LaurentRing::neg(const LaurentPoly& a) const {
  LaurentPoly out;
  for (const auto& [exp, c] : a.terms) out.terms[exp] = field_->neg(c);
  return out;
}

LaurentPoly LaurentRing::sub(const LaurentPoly& a, const LaurentPoly& b) const {
  return add(a, neg(b));
}

LaurentPoly LaurentRing::mul(const LaurentPoly& a, const LaurentPoly& b) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      const int exp = ea + eb;
      GF::Elem s = field_->add(out.coeff(exp), field_->mul(ca, cb));
      if (s == 0) {
        out.terms.erase(exp);
      } else {
        out.terms[exp] = s;
      }
    }
  }
  return out;
}

LaurentPoly LaurentRing::mul_monomial(const LaurentPoly& a, GF::Elem c,
                                      int exp) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [ea, ca] : a.terms) {
    out.terms[ea + exp] = field_->mul(ca, c);
  }
  return out;
}

LaurentPoly LaurentRing::frobenius_coeffs(const LaurentPoly& a,
                                          std::uint64_t power) const {
  LaurentPoly out;
  for (const auto& [exp, c] : a.terms) out.terms[exp] = field_->pow(c, power);
  return out;
}

void LaurentRing::check_budget(const LaurentPoly& a) const {
  if (a.is_zero()) return;
  if (a.val() < -budget_ || a.deg() > budget_) {
    throw Error(ErrorKind::DegreeBudgetExceeded,
                "matrix entry exponent beyond +-" + std::to_string(budget_));
  }
}

std::string LaurentRing::to_string(const LaurentPoly& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [exp, c] : a.terms) {
    if (!s.empty()) s += " + ";
    s += field_->to_string(c);
    if (exp != 0) s += "*t^" + std::to_string(exp);
  }
  return s;
}

LaurentMatrix laurent_identity(int n) {
  LaurentMatrix m;
  m.n = n;
  m.e.assign(n * n, LaurentPoly{});
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix laurent_mul(const LaurentRing& r, const LaurentMatrix& a,
                          const LaurentMatrix& b) {
  if (a.n != b.n) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  LaurentMatrix out;
  out.n = a.n;
  out.e.assign(a.n * a.n, LaurentPoly{});
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      LaurentPoly acc;
      for (int k = 0; k < a.n; ++k) {
        acc = r.add(acc, r.mul(a.at(i, k), b.at(k, j)));
      }
      r.check_budget(acc);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

LaurentPoly laurent_det(const LaurentRing& r, const LaurentMatrix& a) {
  if (a.n == 2) {
    return r.sub(r.mul(a.at(0, 0), a.at(1, 1)), r.mul(a.at(0, 1), a.at(1, 0)));
  }
  if (a.n == 3) {
    LaurentPoly d;
    d = r.mul(a.at(0, 0),
              r.sub(r.mul(a.at(1, 1), a.at(2, 2)), r.mul(a.at(1, 2), a.at(2, 1))));
    d = r.sub(d, r.mul(a.at(0, 1), r.sub(r.mul(a.at(1, 0), a.at(2, 2)),
                                         r.mul(a.at(1, 2), a.at(2, 0)))));
    d = r.add(d, r.mul(a.at(0, 2), r.sub(r.mul(a.at(1, 0), a.at(2, 1)),
                                         r.mul(a.at(1, 1), a.at(2, 0)))));
    return d;
  }
  throw Error(ErrorKind::InvalidInput, "only n in {2,3} supported");
}

LaurentMatrix laurent_inverse(const LaurentRing& r, const LaurentMatrix& a) {
  LaurentPoly det = laurent_det(r, a);
  if (!(det == LaurentPoly::constant(1))) {
    throw Error(ErrorKind::NotUnimodular, "matrix determinant is not 1");
  }
  LaurentMatrix out;
  out.n = a.n;
  out.e.assign(a.n * a.n, LaurentPoly{});
  if (a.n == 2) {
    out.at(0, 0) = a.at(1, 1);
    out.at(1, 1) = a.at(0, 0);
    out.at(0, 1) = r.neg(a.at(0, 1));
    out.at(1, 0) = r.neg(a.at(1, 0));
    return out;
  }
  if (a.n == 3) {
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      return r.sub(r.mul(a.at(r0, c0), a.at(r1, c1)),
                   r.mul(a.at(r0, c1), a.at(r1, c0)));
    };
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out.at(j, i) = cof(i, j);
    }
    return out;
  }
  throw Error(ErrorKind::InvalidInput, "only n in {2,3} supported");
}

LaurentMatrix laurent_transpose_antidiag(const LaurentMatrix& a) {
  LaurentMatrix out;
  out.n = a.n;
  out.e.assign(a.n * a.n, LaurentPoly{});
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      out.at(i, j) = a.at(a.n - 1 - j, a.n - 1 - i);
    }
  }
  return out;
}

LaurentMatrix laurent_frobenius(const LaurentRing& r, const LaurentMatrix& a,
                                std::uint64_t power) {
  LaurentMatrix out;
  out.n = a.n;
  out.e.reserve(a.e.size());
  for (const auto& p : a.e) out.e.push_back(r.frobenius_coeffs(p, power));
  return out;
}

std::string laurent_matrix_key(const LaurentMatrix& a) {
  std::string s = std::to_string(a.n) + "|";
  for (const auto& p : a.e) {
    for (const auto& [exp, c] : p.terms) {
      s += std::to_string(exp) + ":" + std::to_string(c) + ",";
    }
    s += ";";
  }
  return s;
}

}  // namespace kmlat
