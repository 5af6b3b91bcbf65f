#include "kmlat/twin_sl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

#include "kmlat/error.hpp"

namespace kmlat {

GeneralizedCartanMatrix affine_gcm(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "affine_gcm needs n >= 2");
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
  return validate_gcm(a);
}

AffinePermutation AffinePermutation::identity(int n) {
  AffinePermutation p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.window.push_back(i);
  return p;
}

long long AffinePermutation::operator()(long long x) const {
  long long r = ((x - 1) % n + n) % n;  // 0-based residue
  long long shift = (x - 1 - r) / n;
  return window[r] + shift * n;
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n; ++i) {
    if (window[i - 1] != i) return false;
  }
  return true;
}

AffinePermutation AffinePermutation::transposition(int n, int c) {
  AffinePermutation p = identity(n);
  for (int x = 1; x <= n; ++x) {
    long long r = ((x - c) % n + n) % n;
    if (r == 0) {
      p.window[x - 1] = x + 1;
    } else if (r == 1) {
      p.window[x - 1] = x - 1;
    }
  }
  return p;
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& rhs) const {
  AffinePermutation p;
  p.n = n;
  for (int x = 1; x <= n; ++x) p.window.push_back((*this)(rhs(x)));
  return p;
}

long long AffinePermutation::inversions() const {
  long long maxdisp = 0;
  for (int i = 1; i <= n; ++i) {
    maxdisp = std::max(maxdisp, std::abs(window[i - 1] - i));
  }
  long long count = 0;
  for (int a = 1; a <= n; ++a) {
    const long long hi = a + maxdisp * 2 + 2 * n;
    for (long long b = a + 1; b <= hi; ++b) {
      if ((*this)(a) > (*this)(b)) ++count;
    }
  }
  return count;
}

bool AffinePermutation::right_descent(int c) const {
  return (*this)(c) > (*this)(c + 1);
}

TwinSL::TwinSL(int n, const GF& field, int degree_budget)
    : n_(n), ring_(field, degree_budget), weyl_(affine_gcm(n)) {
  if (n != 2 && n != 3) {
    throw Error(ErrorKind::InvalidInput, "only n in {2,3} supported");
  }
  for (int g = 0; g < n_; ++g) {
    gen_perm_pos_.push_back(bruhat_perm(gen_lift(g), Side::plus));
    gen_perm_neg_.push_back(bruhat_perm(gen_lift(g), Side::minus));
    gen_perm_mixed_.push_back(birkhoff_perm(gen_lift(g)));
    gen_perm_mixed_mp_.push_back(birkhoff_perm_mp(gen_lift(g)));
  }
  auto is_transposition = [&](const AffinePermutation& p) {
    for (int c = 0; c < n_; ++c) {
      if (p == AffinePermutation::transposition(n_, c)) return true;
    }
    return false;
  };
  for (int g = 0; g < n_; ++g) {
    if (!is_transposition(gen_perm_pos_[g]) ||
        !is_transposition(gen_perm_neg_[g]) ||
        !is_transposition(gen_perm_mixed_[g])) {
      throw Error(ErrorKind::Internal, "lift image is not a transposition");
    }
    for (int h = 0; h < g; ++h) {
      if (gen_perm_pos_[g] == gen_perm_pos_[h] ||
          gen_perm_neg_[g] == gen_perm_neg_[h] ||
          gen_perm_mixed_[g] == gen_perm_mixed_[h]) {
        throw Error(ErrorKind::Internal, "lift images are not distinct");
      }
    }
  }
}

LaurentMatrix TwinSL::gen_x(int i, GF::Elem r) const {
  if (i < 0 || i >= n_) throw Error(ErrorKind::InvalidInput, "root index");
  LaurentMatrix m = identity();
  if (i == 0) {
    m.at(n_ - 1, 0) = LaurentPoly::monomial(r, 1);
  } else {
    m.at(i - 1, i) = LaurentPoly::constant(r);
  }
  return m;
}

LaurentMatrix TwinSL::gen_x_neg(int i, GF::Elem r) const {
  if (i < 0 || i >= n_) throw Error(ErrorKind::InvalidInput, "root index");
  LaurentMatrix m = identity();
  if (i == 0) {
    m.at(0, n_ - 1) = LaurentPoly::monomial(r, -1);
  } else {
    m.at(i, i - 1) = LaurentPoly::constant(r);
  }
  return m;
}

LaurentMatrix TwinSL::gen_lift(int i) const {
  const GF& f = field();
  LaurentMatrix m = identity();
  if (i == 0) {
    m.at(0, 0) = LaurentPoly::zero();
    m.at(n_ - 1, n_ - 1) = LaurentPoly::zero();
    m.at(0, n_ - 1) = LaurentPoly::monomial(f.neg(f.one()), -1);
    m.at(n_ - 1, 0) = LaurentPoly::monomial(f.one(), 1);
  } else {
    m.at(i - 1, i - 1) = LaurentPoly::zero();
    m.at(i, i) = LaurentPoly::zero();
    m.at(i - 1, i) = LaurentPoly::constant(f.one());
    m.at(i, i - 1) = LaurentPoly::constant(f.neg(f.one()));
  }
  return m;
}

LaurentMatrix TwinSL::gen_torus(std::span<const GF::Elem> units) const {
  const GF& f = field();
  if (static_cast<int>(units.size()) != n_ - 1) {
    throw Error(ErrorKind::InvalidInput, "torus needs n-1 units");
  }
  for (GF::Elem u : units) {
    if (u == 0) throw Error(ErrorKind::InvalidInput, "torus unit is zero");
  }
  LaurentMatrix m = identity();
  if (n_ == 2) {
    m.at(0, 0) = LaurentPoly::constant(units[0]);
    m.at(1, 1) = LaurentPoly::constant(f.inv(units[0]));
  } else {
    // D_{u,v} = diag(u, u^-1 v, v^-1)
    m.at(0, 0) = LaurentPoly::constant(units[0]);
    m.at(1, 1) = LaurentPoly::constant(f.mul(f.inv(units[0]), units[1]));
    m.at(2, 2) = LaurentPoly::constant(f.inv(units[1]));
  }
  return m;
}

LaurentMatrix TwinSL::root_group_element(std::span<const Int> root,
                                         GF::Elem r) const {
  if (static_cast<int>(root.size()) != n_) {
    throw Error(ErrorKind::DimensionMismatch, "root length != n");
  }
  // Level = coefficient of a_0; finite part = sum_{k>=1} (c_k - c_0) alpha_k.
  const Int level = root[0];
  std::vector<Int> eps(n_, 0);
  for (int k = 1; k < n_; ++k) {
    Int d = root[k] - root[0];
    eps[k - 1] += d;
    eps[k] -= d;
  }
  int pos = -1, neg = -1;
  for (int i = 0; i < n_; ++i) {
    if (eps[i] == 1 && pos < 0) {
      pos = i;
    } else if (eps[i] == -1 && neg < 0) {
      neg = i;
    } else if (eps[i] != 0) {
      throw Error(ErrorKind::InvalidInput, "not a real root of affine type A");
    }
  }
  if (pos < 0 || neg < 0) {
    throw Error(ErrorKind::InvalidInput, "not a real root of affine type A");
  }
  LaurentMatrix m = identity();
  m.at(pos, neg) = LaurentPoly::monomial(r, static_cast<int>(level));
  return m;
}

LaurentMatrix TwinSL::canonical_lift(const WeylElement& w) const {
  LaurentMatrix m = identity();
  for (int g : w.word) m = mul(m, gen_lift(g));
  return m;
}

bool TwinSL::in_borel(const LaurentMatrix& m, Side sign) const {
  if (m.n != n_) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const LaurentPoly& p = m.at(i, j);
      if (p.is_zero()) continue;
      if (sign == Side::plus) {
        const int min_val = i > j ? 1 : 0;
        if (p.val() < min_val) return false;
      } else {
        const int max_deg = i < j ? -1 : 0;
        if (p.deg() > max_deg) return false;
      }
    }
  }
  return true;
}

bool TwinSL::in_unipotent(const LaurentMatrix& m, Side sign) const {
  if (!in_borel(m, sign)) return false;
  for (int i = 0; i < n_; ++i) {
    if (m.at(i, i).coeff(0) != field().one()) return false;
  }
  return true;
}

bool TwinSL::in_u_w(const LaurentMatrix& u, const WeylElement& w,
                    Side sign) const {
  if (!in_unipotent(u, sign)) return false;
  LaurentMatrix lift = canonical_lift(w);
  LaurentMatrix conj = mul(inverse(lift), mul(u, lift));
  return in_unipotent(conj, sign == Side::plus ? Side::minus : Side::plus);
}

void TwinSL::check_unimodular(const LaurentMatrix& m) const {
  if (m.n != n_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix size != n");
  }
  if (!(laurent_det(ring_, m) == LaurentPoly::constant(field().one()))) {
    throw Error(ErrorKind::NotUnimodular, "determinant is not 1");
  }
}

long long TwinSL::src_index(FlagKind kind, int j) const {
  return kind == FlagKind::positive ? n_ - j : j + 1;
}

// Column reduction of the periodic matrix against the standard flag of the
// pivot side, processed modulo the source-side flag.  Pivots end in distinct
// residue classes; the resulting source->pivot map is the relative-position
// invariant of the two flags.
TwinSL::EchelonResult TwinSL::affine_echelon(const LaurentMatrix& m,
                                             FlagKind source,
                                             FlagKind pivot) const {
  const int src_sgn = source == FlagKind::positive ? 1 : -1;
  const int piv_sgn = pivot == FlagKind::positive ? 1 : -1;
  std::vector<std::vector<LaurentPoly>> cols(n_,
                                             std::vector<LaurentPoly>(n_));
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) cols[j][i] = m.at(i, j);
  }
  auto pivot_of = [&](const std::vector<LaurentPoly>& col) -> long long {
    bool any = false;
    long long best = 0;
    for (int i = 0; i < n_; ++i) {
      if (col[i].is_zero()) continue;
      long long idx = pivot == FlagKind::positive
                          ? static_cast<long long>(col[i].val()) * n_ + (n_ - i)
                          : -static_cast<long long>(col[i].deg()) * n_ + (i + 1);
      if (!any || idx < best) { best = idx; any = true; }
    }
    if (!any) throw Error(ErrorKind::NotUnimodular, "zero column in echelon");
    return best;
  };
  auto pivot_coeff = [&](const std::vector<LaurentPoly>& col,
                         long long pidx) -> GF::Elem {
    for (int i = 0; i < n_; ++i) {
      if (col[i].is_zero()) continue;
      long long idx = pivot == FlagKind::positive
                          ? static_cast<long long>(col[i].val()) * n_ + (n_ - i)
                          : -static_cast<long long>(col[i].deg()) * n_ + (i + 1);
      if (idx == pidx) {
        return pivot == FlagKind::positive ? col[i].terms.begin()->second
                                           : col[i].terms.rbegin()->second;
      }
    }
    throw Error(ErrorKind::Internal, "pivot coefficient not found");
  };

  for (int guard = 0; guard < 200000; ++guard) {
    std::vector<long long> piv(n_);
    for (int j = 0; j < n_; ++j) piv[j] = pivot_of(cols[j]);
    int cj = -1, ck = -1;
    for (int j = 0; j < n_ && cj < 0; ++j) {
      for (int k = j + 1; k < n_; ++k) {
        if (((piv[j] - piv[k]) % n_ + n_) % n_ == 0) { cj = j; ck = k; break; }
      }
    }
    if (cj < 0) return EchelonResult{piv};
    // Shift of column ck whose pivot matches column cj's.
    const long long l = piv_sgn * (piv[cj] - piv[ck]) / n_;
    const long long src_j = src_index(source, cj);
    const long long src_k_shifted = src_index(source, ck) + src_sgn * l * n_;
    int red, base;
    long long shift;
    if (src_k_shifted > src_j) {
      red = cj; base = ck; shift = l;
    } else {
      red = ck; base = cj; shift = -l;
    }
    const GF::Elem mu = field().mul(pivot_coeff(cols[red], piv[red]),
                                    field().inv(pivot_coeff(cols[base],
                                                            piv[base])));
    for (int i = 0; i < n_; ++i) {
      cols[red][i] = ring_.sub(
          cols[red][i],
          ring_.mul_monomial(cols[base][i], mu, static_cast<int>(shift)));
    }
    if (pivot_of(cols[red]) <= piv[red]) {
      throw Error(ErrorKind::Internal, "echelon pivot did not advance");
    }
  }
  throw Error(ErrorKind::Internal, "affine echelon did not terminate");
}

AffinePermutation TwinSL::bruhat_perm(const LaurentMatrix& m,
                                      Side sign) const {
  const FlagKind kind =
      sign == Side::plus ? FlagKind::positive : FlagKind::negative;
  EchelonResult ech = affine_echelon(m, kind, kind);
  AffinePermutation p;
  p.n = n_;
  p.window.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const long long src = src_index(kind, j);  // in 1..n
    p.window[src - 1] = ech.pivot[j];
  }
  long long sum = 0;
  for (int x = 1; x <= n_; ++x) sum += p.window[x - 1] - x;
  if (sum != 0) {
    throw Error(ErrorKind::Internal, "bruhat permutation not normalized");
  }
  return p;
}

AffinePermutation TwinSL::birkhoff_perm(const LaurentMatrix& m) const {
  EchelonResult ech = affine_echelon(m, FlagKind::negative, FlagKind::positive);
  AffinePermutation p;
  p.n = n_;
  p.window.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const long long src = src_index(FlagKind::negative, j);  // j+1 in 1..n
    p.window[src - 1] = (n_ + 1) - ech.pivot[j];
  }
  long long sum = 0;
  for (int x = 1; x <= n_; ++x) sum += p.window[x - 1] - x;
  if (sum != 0) {
    throw Error(ErrorKind::Internal, "birkhoff permutation not normalized");
  }
  return p;
}

AffinePermutation TwinSL::birkhoff_perm_mp(const LaurentMatrix& m) const {
  EchelonResult ech = affine_echelon(m, FlagKind::positive, FlagKind::negative);
  AffinePermutation p;
  p.n = n_;
  p.window.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const long long src = src_index(FlagKind::positive, j);  // n-j in 1..n
    p.window[src - 1] = (n_ + 1) - ech.pivot[j];
  }
  long long sum = 0;
  for (int x = 1; x <= n_; ++x) sum += p.window[x - 1] - x;
  if (sum != 0) {
    throw Error(ErrorKind::Internal, "birkhoff permutation not normalized");
  }
  return p;
}

std::vector<int> TwinSL::perm_word(
    const AffinePermutation& p,
    const std::vector<AffinePermutation>& gens) const {
  AffinePermutation cur = p;
  std::vector<int> letters;
  long long guard = cur.inversions() + 1;
  while (!cur.is_identity()) {
    if (--guard < 0) {
      throw Error(ErrorKind::Internal, "permutation word peel stuck");
    }
    int found = -1;
    for (int c = 0; c < n_ && found < 0; ++c) {
      if (!cur.right_descent(c)) continue;
      auto tau = AffinePermutation::transposition(n_, c);
      for (int g = 0; g < n_; ++g) {
        if (gens[g] == tau) { found = g; break; }
      }
      if (found >= 0) cur = cur.compose(tau);
    }
    if (found < 0) {
      throw Error(ErrorKind::Internal, "no descent generator found");
    }
    letters.push_back(found);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

AffinePermutation TwinSL::to_affine(const WeylElement& w) const {
  AffinePermutation acc = AffinePermutation::identity(n_);
  for (int g : w.word) acc = acc.compose(gen_perm_pos_[g]);
  return acc;
}

WeylElement TwinSL::from_affine(const AffinePermutation& p) const {
  return weyl_.normal_form(perm_word(p, gen_perm_pos_));
}

WeylElement TwinSL::bruhat_w(const LaurentMatrix& m, Side sign) const {
  check_unimodular(m);
  AffinePermutation p = bruhat_perm(m, sign);
  const auto& gens = sign == Side::plus ? gen_perm_pos_ : gen_perm_neg_;
  return weyl_.normal_form(perm_word(p, gens));
}

BruhatFactorization TwinSL::bruhat_decompose(const LaurentMatrix& m,
                                             Side sign) const {
  check_unimodular(m);
  const WeylElement w = bruhat_w(m, sign);
  const auto& gens = sign == Side::plus ? gen_perm_pos_ : gen_perm_neg_;

  LaurentMatrix x = m;
  LaurentMatrix u = identity();
  LaurentMatrix prefix = identity();
  auto elems = field().all_elements();
  for (size_t k = 0; k < w.word.size(); ++k) {
    const int g = w.word[k];
    // Target cell after peeling this letter.
    AffinePermutation target = AffinePermutation::identity(n_);
    for (size_t j = k + 1; j < w.word.size(); ++j) {
      target = target.compose(gens[w.word[j]]);
    }
    const LaurentMatrix lift_inv = inverse(gen_lift(g));
    bool found = false;
    for (GF::Elem c : elems) {
      LaurentMatrix cand = mul(
          lift_inv,
          mul(sign == Side::plus ? gen_x(g, field().neg(c))
                                 : gen_x_neg(g, field().neg(c)),
              x));
      if (bruhat_perm(cand, sign) == target) {
        LaurentMatrix xc = sign == Side::plus ? gen_x(g, c) : gen_x_neg(g, c);
        u = mul(u, mul(prefix, mul(xc, inverse(prefix))));
        prefix = mul(prefix, gen_lift(g));
        x = std::move(cand);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::Internal, "bruhat peel found no residue");
    }
  }
  if (!in_borel(x, sign)) {
    throw Error(ErrorKind::Internal, "bruhat remainder not in Borel");
  }
  if (!in_u_w(u, w, sign)) {
    throw Error(ErrorKind::Internal, "bruhat first factor not in U_w");
  }
  BruhatFactorization f;
  f.w = w;
  f.perm = to_affine(w);
  f.u = std::move(u);
  f.b = std::move(x);
  return f;
}

WeylElement TwinSL::w_distance(const LaurentMatrix& g,
                               const LaurentMatrix& h) const {
  return bruhat_w(mul(inverse(g), h), Side::plus);
}

WeylElement TwinSL::codistance(const LaurentMatrix& g,
                               const LaurentMatrix& h) const {
  LaurentMatrix x = mul(inverse(g), h);
  check_unimodular(x);
  AffinePermutation p = birkhoff_perm(x);
  return weyl_.normal_form(perm_word(p, gen_perm_mixed_));
}

WeylElement TwinSL::codistance_mp(const LaurentMatrix& h,
                                  const LaurentMatrix& g) const {
  LaurentMatrix x = mul(inverse(h), g);
  check_unimodular(x);
  AffinePermutation p = birkhoff_perm_mp(x);
  return weyl_.normal_form(perm_word(p, gen_perm_mixed_mp_));
}

std::vector<LaurentMatrix> TwinSL::panel_chambers(const LaurentMatrix& chamber,
                                                  int panel) const {
  if (n_ != 2) {
    throw Error(ErrorKind::InvalidInput,
                "panel enumeration is concrete only for n = 2");
  }
  std::vector<LaurentMatrix> out;
  out.push_back(chamber);
  for (GF::Elem c : field().all_elements()) {
    out.push_back(mul(chamber, mul(gen_x(panel, c), gen_lift(panel))));
  }
  return out;
}

int TwinSL::thickness_at_panel(const LaurentMatrix& chamber, int panel) const {
  if (panel < 0 || panel >= n_) {
    throw Error(ErrorKind::InvalidInput, "panel index");
  }
  if (n_ != 2) {
    return static_cast<int>(field().q()) + 1;  // homogeneous split building
  }
  auto chambers = panel_chambers(chamber, panel);
  // Count distinct Borel cosets.
  std::vector<LaurentMatrix> reps;
  for (const auto& c : chambers) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (in_borel(mul(inverse(r), c), Side::plus)) { fresh = false; break; }
    }
    if (fresh) reps.push_back(c);
  }
  return static_cast<int>(reps.size());
}

std::vector<std::vector<Int>> TwinSL::inversion_roots(
    const WeylElement& w) const {
  std::vector<std::vector<Int>> roots;
  for (size_t k = 0; k < w.word.size(); ++k) {
    WeylElement prefix{std::vector<int>(w.word.begin(), w.word.begin() + k)};
    roots.push_back(weyl_.apply(prefix, weyl_.simple_root(w.word[k])));
  }
  return roots;
}

std::vector<LaurentMatrix> TwinSL::enumerate_u_w(const WeylElement& w) const {
  auto roots = inversion_roots(w);
  std::vector<LaurentMatrix> out;
  out.push_back(identity());
  for (const auto& root : roots) {
    std::vector<LaurentMatrix> next;
    for (const auto& base : out) {
      for (GF::Elem c : field().all_elements()) {
        next.push_back(mul(base, root_group_element(root, c)));
      }
    }
    out = std::move(next);
  }
  return out;
}

RefinedBruhatReport TwinSL::verify_refined_bruhat(int max_len,
                                                  std::uint64_t seed,
                                                  int samples_per_cell) const {
  RefinedBruhatReport report;
  std::mt19937_64 rng(seed);
  Ball ball = weyl_.ball(max_len);
  for (const auto& layer : ball.layers) {
    for (const auto& w : layer) {
      RefinedBruhatCell cell;
      cell.w = w;
      cell.expected = 1;
      for (int i = 0; i < w.length(); ++i) cell.expected *= field().q();
      auto elements = enumerate_u_w(w);
      std::set<std::string> keys;
      for (const auto& u : elements) keys.insert(laurent_matrix_key(u));
      cell.u_count = keys.size();
      const LaurentMatrix lift = canonical_lift(w);
      for (int s = 0; s < samples_per_cell; ++s) {
        const LaurentMatrix b = random_borel(rng, Side::plus);
        const LaurentMatrix& u = elements[rng() % elements.size()];
        const LaurentMatrix m = mul(u, mul(lift, b));
        BruhatFactorization f = bruhat_decompose(m, Side::plus);
        if (!(f.w == w)) cell.disjoint = false;
        if (!(f.u == u)) cell.unique_first_factor = false;
        if (!(mul(f.u, mul(canonical_lift(f.w), f.b)) == m)) {
          cell.unique_first_factor = false;
        }
      }
      if (cell.u_count != cell.expected || !cell.disjoint ||
          !cell.unique_first_factor) {
        report.ok = false;
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

LaurentMatrix TwinSL::random_element(std::mt19937_64& rng, int factors) const {
  LaurentMatrix m = identity();
  auto elems = field().all_elements();
  for (int i = 0; i < factors; ++i) {
    switch (rng() % 4) {
      case 0:
        m = mul(m, gen_x(rng() % n_, elems[rng() % elems.size()]));
        break;
      case 1:
        m = mul(m, gen_x_neg(rng() % n_, elems[rng() % elems.size()]));
        break;
      case 2:
        m = mul(m, gen_lift(rng() % n_));
        break;
      default: {
        std::vector<GF::Elem> units;
        for (int k = 0; k < n_ - 1; ++k) {
          units.push_back(elems[1 + rng() % (elems.size() - 1)]);
        }
        m = mul(m, gen_torus(units));
      }
    }
  }
  return m;
}

LaurentMatrix TwinSL::random_borel(std::mt19937_64& rng, Side sign,
                                   int factors) const {
  LaurentMatrix m = identity();
  auto elems = field().all_elements();
  for (int i = 0; i < factors; ++i) {
    switch (rng() % 3) {
      case 0:
        m = mul(m, sign == Side::plus ? gen_x(rng() % n_, elems[rng() % elems.size()])
                                      : gen_x_neg(rng() % n_,
                                                  elems[rng() % elems.size()]));
        break;
      case 1: {
        // A deeper root-group element of the right sign: c * t^level at a
        // random off-diagonal spot, with the level pushed past the Iwahori
        // threshold for that spot.
        int i = static_cast<int>(rng() % n_);
        int j = static_cast<int>(rng() % (n_ - 1));
        if (j >= i) ++j;
        int level;
        if (sign == Side::plus) {
          level = (i > j ? 1 : 0) + static_cast<int>(rng() % 2);
        } else {
          level = -((i < j ? 1 : 0) + static_cast<int>(rng() % 2));
        }
        LaurentMatrix x = identity();
        x.at(i, j) = LaurentPoly::monomial(elems[rng() % elems.size()], level);
        m = mul(m, x);
        break;
      }
      default: {
        std::vector<GF::Elem> units;
        for (int k = 0; k < n_ - 1; ++k) {
          units.push_back(elems[1 + rng() % (elems.size() - 1)]);
        }
        m = mul(m, gen_torus(units));
      }
    }
  }
  if (!in_borel(m, sign)) {
    throw Error(ErrorKind::Internal, "random Borel element escaped the Borel");
  }
  return m;
}

}  // namespace kmlat
