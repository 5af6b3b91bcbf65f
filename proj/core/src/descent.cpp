#include "kmlat/descent.hpp"

#include <algorithm>
#include <random>

#include "kmlat/error.hpp"
#include "kmlat/gf.hpp"
#include "kmlat/twin_sl.hpp"

namespace kmlat {

DiagramAutomorphism validate_automorphism(const GeneralizedCartanMatrix& a,
                                          const std::vector<int>& perm) {
  const int n = a.rank();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorKind::InvalidInput, "permutation length != rank");
  }
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorKind::InvalidInput, "not a permutation of S");
    }
    seen[v] = true;
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (a.at(perm[s], perm[t]) != a.at(s, t)) {
        throw Error(ErrorKind::InvarianceViolation,
                    "A_{ps,pt} != A_{st}", s, t);
      }
    }
  }
  DiagramAutomorphism d;
  d.perm = perm;
  d.order = 1;
  std::vector<int> power(perm);
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  while (power != ident) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = perm[power[i]];
    power = std::move(next);
    ++d.order;
    if (d.order > n + 1) {
      throw Error(ErrorKind::Internal, "automorphism order overflow");
    }
  }
  return d;
}

void validate_form(const QuasiSplitForm& form) {
  validate_automorphism(form.gcm, form.aut.perm);
  for (int s : form.s0) {
    if (s < 0 || s >= form.gcm.rank()) {
      throw Error(ErrorKind::InvalidInput, "S0 index out of range");
    }
    if (std::find(form.s0.begin(), form.s0.end(), form.aut.perm[s]) ==
        form.s0.end()) {
      throw Error(ErrorKind::InvalidInput, "S0 is not stable under the automorphism");
    }
  }
  if (form.q < 2) throw Error(ErrorKind::InvalidInput, "q must be >= 2");
}

std::vector<std::vector<int>> automorphism_orbits(
    const DiagramAutomorphism& aut, int rank) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(rank, false);
  for (int s = 0; s < rank; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = aut.perm[cur];
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

RelativeApartment relative_apartment(const QuasiSplitForm& form) {
  validate_form(form);
  const int n = form.gcm.rank();
  std::vector<std::vector<Rat>> rows;
  for (int s : form.s0) {
    std::vector<Rat> row(n, Rat(0));
    row[s] = 1;
    rows.push_back(std::move(row));
  }
  for (int s = 0; s < n; ++s) {
    const int t = form.aut.perm[s];
    if (t == s) continue;
    std::vector<Rat> row(n, Rat(0));
    row[s] = 1;
    row[t] = -1;
    rows.push_back(std::move(row));
  }
  // Exact null space by Gauss-Jordan elimination.
  int lead = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && lead < static_cast<int>(rows.size()); ++col) {
    int p = -1;
    for (int r = lead; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) { p = r; break; }
    }
    if (p < 0) continue;
    std::swap(rows[lead], rows[p]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[lead][col];
      for (int c = 0; c < n; ++c) rows[r][c] -= f * rows[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  RelativeApartment out;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (int r = 0; r < lead; ++r) {
      v[pivot_col[r]] = -rows[r][free] / rows[r][pivot_col[r]];
    }
    out.basis.push_back(std::move(v));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

OrbitType classify_orbit(const GeneralizedCartanMatrix& a,
                         const std::vector<int>& orbit) {
  if (orbit.size() == 1) return OrbitType::singleton;
  if (orbit.size() == 2) {
    CoxeterMatrix m = coxeter_of_gcm(a);
    const int mst = m.m[orbit[0]][orbit[1]];
    if (mst == 2) return OrbitType::orthogonal_pair;
    if (mst == 3) return OrbitType::a2_pair;
  }
  return OrbitType::unsupported;
}

Int panel_thickness(const std::vector<int>& orbit,
                    const GeneralizedCartanMatrix& a, const Int& q) {
  switch (classify_orbit(a, orbit)) {
    case OrbitType::singleton: return q + 1;
    case OrbitType::orthogonal_pair: return q * q + 1;
    case OrbitType::a2_pair: return q * q * q + 1;
    case OrbitType::unsupported: break;
  }
  throw Error(ErrorKind::UnsupportedOrbit,
              "orbit is not of type A1, A1xA1 or A2");
}

namespace {

std::string orbit_label(const std::vector<int>& orbit,
                        const GeneralizedCartanMatrix& a) {
  std::string s = "{";
  for (size_t i = 0; i < orbit.size(); ++i) {
    if (i) s += ",";
    s += a.labels()[orbit[i]];
  }
  return s + "}";
}

WeylElement orbit_generator(const WeylGroup& w,
                            const GeneralizedCartanMatrix& a,
                            const std::vector<int>& orbit) {
  switch (classify_orbit(a, orbit)) {
    case OrbitType::singleton:
      return w.generator(orbit[0]);
    case OrbitType::orthogonal_pair:
      return w.normal_form(std::vector<int>{orbit[0], orbit[1]});
    case OrbitType::a2_pair:
      return w.normal_form(std::vector<int>{orbit[0], orbit[1], orbit[0]});
    case OrbitType::unsupported: break;
  }
  throw Error(ErrorKind::UnsupportedOrbit,
              "orbit is not of type A1, A1xA1 or A2");
}

}  // namespace

RelativeCoxeter relative_weyl(const QuasiSplitForm& form, int cutoff) {
  validate_form(form);
  if (!form.s0.empty()) {
    throw Error(ErrorKind::UnsupportedOrbit,
                "relative Weyl group supported only for S0 = {}");
  }
  WeylGroup w(form.gcm);
  auto orbits = automorphism_orbits(form.aut, form.gcm.rank());
  RelativeCoxeter rc;
  std::vector<WeylElement> gens;
  for (const auto& orbit : orbits) {
    rc.labels.push_back(orbit_label(orbit, form.gcm));
    gens.push_back(orbit_generator(w, form.gcm, orbit));
  }
  const int k = static_cast<int>(gens.size());
  rc.entries.assign(k, std::vector<RelativeCoxeterEntry>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) {
        rc.entries[i][j] = {true, 1};
        continue;
      }
      OrderResult ord = w.order_of_product(gens[i], gens[j], cutoff);
      rc.entries[i][j] = {ord.finite, ord.finite ? ord.value : cutoff};
    }
  }
  return rc;
}

RelativeData descent_report(const QuasiSplitForm& form, int cutoff) {
  validate_form(form);
  if (!form.s0.empty()) {
    throw Error(ErrorKind::UnsupportedOrbit,
                "descent report supported only for S0 = {}");
  }
  RelativeData data;
  data.apartment_dim = relative_apartment(form).dimension;
  WeylGroup w(form.gcm);
  auto orbits = automorphism_orbits(form.aut, form.gcm.rank());
  for (const auto& orbit : orbits) {
    OrbitInfo info;
    info.members = orbit;
    info.type = classify_orbit(form.gcm, orbit);
    if (info.type == OrbitType::unsupported) {
      throw Error(ErrorKind::UnsupportedOrbit,
                  "orbit " + orbit_label(orbit, form.gcm) +
                      " is not of type A1, A1xA1 or A2");
    }
    info.generator = orbit_generator(w, form.gcm, orbit);
    info.thickness = panel_thickness(orbit, form.gcm, form.q);
    info.label = orbit_label(orbit, form.gcm);
    data.orbits.push_back(std::move(info));
  }
  data.relative_coxeter = relative_weyl(form, cutoff);
  // Tree case: two relative panel types whose product has order > 3 out to
  // the cutoff (the relative apartment is a line, valencies alternate).
  if (data.orbits.size() == 2) {
    const auto& entry = data.relative_coxeter.entries[0][1];
    if (!entry.finite) {
      data.relative_is_tree = true;
      data.valency_sequence = {data.orbits[0].thickness,
                               data.orbits[1].thickness};
    }
  }
  return data;
}

GeneralizedCartanMatrix fuchsian_gcm(int r) {
  if (r < 5) throw Error(ErrorKind::InvalidInput, "fuchsian_gcm needs r >= 5");
  std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(r, -2));
  for (int i = 0; i < r; ++i) {
    a[i][i] = 2;
    a[i][(i + 1) % r] = 0;
    a[(i + 1) % r][i] = 0;
  }
  return validate_gcm(a);
}

Su3Report su3_involution_check(const Int& q, std::uint64_t seed) {
  // Split q = p^k and build GF(q^2).
  std::int64_t qi = static_cast<std::int64_t>(q);
  int p = 0, k = 0;
  for (int cand = 2; cand <= qi; ++cand) {
    bool prime = true;
    for (int d = 2; d * d <= cand; ++d) {
      if (cand % d == 0) { prime = false; break; }
    }
    if (!prime) continue;
    std::int64_t v = qi;
    int e = 0;
    while (v % cand == 0) { v /= cand; ++e; }
    if (v == 1) { p = cand; k = e; break; }
  }
  if (p == 0) throw Error(ErrorKind::InvalidInput, "q is not a prime power");
  const GF& f2 = GF::get(p, 2 * k);
  TwinSL sl(3, f2);
  const LaurentRing& ring = sl.ring();
  const std::uint64_t sigma_power = static_cast<std::uint64_t>(qi);

  auto star = [&](const LaurentMatrix& m) {
    LaurentMatrix s = laurent_frobenius(ring, m, sigma_power);
    s = sl.inverse(s);
    return laurent_transpose_antidiag(s);
  };
  auto sigma = [&](GF::Elem r) { return f2.pow(r, sigma_power); };

  Su3Report rep;
  rep.q = q;
  rep.eps = (p == 2) ? 1 : -1;
  auto eps_apply = [&](GF::Elem r) {
    return rep.eps == 1 ? r : f2.neg(r);
  };

  // Generator formulas: x_1(r)* = x_2(eps r^sigma), x_2(r)* = x_1(eps r^sigma),
  // x_0(r)* = x_0(eps r^sigma); D_{u,v}* = D_{v^sigma, u^sigma}.
  for (GF::Elem r : f2.all_elements()) {
    if (!(star(sl.gen_x(1, r)) == sl.gen_x(2, eps_apply(sigma(r))))) {
      rep.generator_formulas_hold = false;
    }
    if (!(star(sl.gen_x(2, r)) == sl.gen_x(1, eps_apply(sigma(r))))) {
      rep.generator_formulas_hold = false;
    }
    if (!(star(sl.gen_x(0, r)) == sl.gen_x(0, eps_apply(sigma(r))))) {
      rep.generator_formulas_hold = false;
    }
  }
  for (GF::Elem u : f2.all_elements()) {
    if (u == 0) continue;
    for (GF::Elem v : f2.all_elements()) {
      if (v == 0) continue;
      std::vector<GF::Elem> uv = {u, v};
      std::vector<GF::Elem> vu = {sigma(v), sigma(u)};
      if (!(star(sl.gen_torus(uv)) == sl.gen_torus(vu))) {
        rep.torus_formula_holds = false;
      }
    }
  }

  // *^2 = id on generators and on random bounded-degree matrices.
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    LaurentMatrix m = sl.random_element(rng, 8);
    if (!(star(star(m)) == m)) rep.involution_squares_to_identity = false;
  }

  // Fixed points in the A2-orbit unipotent group (the classical upper
  // unipotent of SL_3 over F_{q^2}).
  for (GF::Elem a : f2.all_elements()) {
    for (GF::Elem b : f2.all_elements()) {
      for (GF::Elem c : f2.all_elements()) {
        LaurentMatrix m = sl.identity();
        m.at(0, 1) = LaurentPoly::constant(a);
        m.at(1, 2) = LaurentPoly::constant(b);
        m.at(0, 2) = LaurentPoly::constant(c);
        ++rep.a2_orbit_total;
        if (star(m) == m) ++rep.a2_orbit_fixed;
      }
    }
  }
  // Fixed points in the singleton-orbit (affine) root group.
  for (GF::Elem r : f2.all_elements()) {
    ++rep.singleton_total;
    if (star(sl.gen_x(0, r)) == sl.gen_x(0, r)) ++rep.singleton_fixed;
  }

  const std::uint64_t qq = static_cast<std::uint64_t>(qi);
  rep.counts_match_thickness_rule =
      rep.a2_orbit_fixed == qq * qq * qq && rep.singleton_fixed == qq;
  return rep;
}

}  // namespace kmlat
