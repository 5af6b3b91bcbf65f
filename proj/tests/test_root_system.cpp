#include <random>
#include <set>

#include "doctest.h"
#include "kmlat/descent.hpp"
#include "kmlat/error.hpp"
#include "kmlat/root_system.hpp"

using namespace kmlat;

namespace {

GeneralizedCartanMatrix a2() { return validate_gcm({{2, -1}, {-1, 2}}); }
GeneralizedCartanMatrix a1_tilde() { return validate_gcm({{2, -2}, {-2, 2}}); }
GeneralizedCartanMatrix a2_tilde() {
  return validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

std::vector<Rat> apply_point(const WeylGroup& w, const WeylElement& el,
                             std::span<const Rat> coords) {
  std::vector<Rat> out;
  const WeylElement inv = w.inverse(el);
  for (int t = 0; t < w.rank(); ++t) {
    auto root = w.apply(inv, w.simple_root(t));
    Rat acc(0);
    for (int i = 0; i < w.rank(); ++i) acc += Rat(root[i]) * coords[i];
    out.push_back(acc);
  }
  return out;
}

BalancedPair chamber_pair(const WeylGroup& w, const WeylElement& el) {
  // Plus point interior to c_+, minus point opposite to a point interior to
  // w . c_+.
  std::vector<Rat> base = {Rat(1, 2), Rat(1, 3), Rat(1, 5)};
  base.resize(w.rank(), Rat(1, 7));
  BalancedPair pair;
  pair.plus_point = {base, Side::plus};
  auto moved = apply_point(w, el, base);
  for (Rat& c : moved) c = -c;
  pair.minus_point = {moved, Side::minus};
  return pair;
}

}  // namespace

TEST_CASE("roots_up_to_height enumerations") {
  WeylGroup wa2(a2());
  auto r = roots_up_to_height(wa2, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0].vector == std::vector<Int>{0, 1});
  CHECK(r[1].vector == std::vector<Int>{1, 0});
  CHECK(r[2].vector == std::vector<Int>{1, 1});

  WeylGroup dinf(a1_tilde());
  auto r5 = roots_up_to_height(dinf, 5);
  std::set<std::vector<Int>> got;
  for (const auto& root : r5) got.insert(root.vector);
  std::set<std::vector<Int>> expect = {{1, 0}, {0, 1}, {2, 1},
                                       {1, 2}, {3, 2}, {2, 3}};
  CHECK(got == expect);

  WeylGroup fuch((fuchsian_gcm(5)));
  auto r1 = roots_up_to_height(fuch, 1);
  CHECK(r1.size() == 5);
}

TEST_CASE("root invariants: reflection involution and negation") {
  for (const auto& a : {a2(), a1_tilde(), a2_tilde()}) {
    WeylGroup w(a);
    for (const auto& root : roots_up_to_height(w, 4)) {
      CHECK(w.multiply(root.reflection, root.reflection).is_identity());
      auto img = w.apply(root.reflection, root.vector);
      for (int i = 0; i < w.rank(); ++i) CHECK(img[i] == -root.vector[i]);
      // root_from_vector rebuilds the same reflection.
      auto rebuilt = root_from_vector(w, root.vector);
      CHECK(rebuilt.reflection == root.reflection);
    }
  }
}

TEST_CASE("chamber_side basics") {
  WeylGroup dinf(a1_tilde());
  auto roots = roots_up_to_height(dinf, 1);
  const Root& alpha0 = roots[1];  // (1,0)
  REQUIRE(alpha0.vector == std::vector<Int>{1, 0});
  CHECK(chamber_side(dinf, dinf.identity(), alpha0) == Side::plus);
  CHECK(chamber_side(dinf, dinf.generator(0), alpha0) == Side::minus);
  // (s_2, a_1) -> + since s_2(a_1) = a_1 + 2 a_2 is positive.
  CHECK(chamber_side(dinf, dinf.generator(1), alpha0) == Side::plus);
}

TEST_CASE("prenilpotence: opposite, finite, nested and refuted pairs") {
  WeylGroup wa2(a2());
  auto r = roots_up_to_height(wa2, 2);
  const Root& x1 = r[1];
  const Root& x2 = r[0];
  CHECK(is_prenilpotent(wa2, x1, negate(x1)) == Certainty::no);
  CHECK(is_prenilpotent(wa2, x1, x2) == Certainty::yes);
  // Exhaustive S3 witness check: e in a1 cap a2 and s1s2s1 in -a1 cap -a2.
  CHECK(chamber_side(wa2, wa2.identity(), x1) == Side::plus);
  CHECK(chamber_side(wa2, wa2.identity(), x2) == Side::plus);
  auto w0 = wa2.normal_form(std::vector<int>{0, 1, 0});
  CHECK(chamber_side(wa2, w0, x1) == Side::minus);
  CHECK(chamber_side(wa2, w0, x2) == Side::minus);

  WeylGroup dinf(a1_tilde());
  auto rr = roots_up_to_height(dinf, 1);
  const Root& a1 = rr[1];
  const Root& a2r = rr[0];
  CHECK(is_prenilpotent(dinf, a1, a2r) == Certainty::no);
  CHECK(is_prenilpotent(dinf, a1, negate(a2r)) == Certainty::yes);
}

TEST_CASE("prenilpotence symmetry and the two/four pair rule") {
  for (const auto& a : {a2(), a1_tilde(), a2_tilde()}) {
    WeylGroup w(a);
    auto roots = roots_up_to_height(w, 3);
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = 0; j < roots.size(); ++j) {
        if (i == j) continue;
        const Root& x = roots[i];
        const Root& y = roots[j];
        auto c = is_prenilpotent(w, x, y);
        CHECK(is_prenilpotent(w, negate(x), negate(y)) == c);
        if (c == Certainty::unresolved) continue;
        // Count prenilpotent sign choices.
        int count = 0;
        for (int sx : {1, -1}) {
          for (int sy : {1, -1}) {
            Root xx = sx == 1 ? x : negate(x);
            Root yy = sy == 1 ? y : negate(y);
            if (is_prenilpotent(w, xx, yy) == Certainty::yes) ++count;
          }
        }
        auto ord = w.order_of_product(x.reflection, y.reflection, 24);
        if (ord.finite) {
          CHECK(count == 4);
        } else {
          CHECK(count == 2);
        }
      }
    }
  }
}

TEST_CASE("interval: A2 and the affine nested pair") {
  WeylGroup wa2(a2());
  auto r = roots_up_to_height(wa2, 2);
  const Root& x1 = r[1];
  const Root& x2 = r[0];
  auto iv = interval(wa2, x1, x2, 4, 8);
  REQUIRE(iv.members.size() == 3);
  CHECK(iv.members[0].vector == std::vector<Int>{0, 1});
  CHECK(iv.members[1].vector == std::vector<Int>{1, 0});
  CHECK(iv.members[2].vector == std::vector<Int>{1, 1});
  CHECK(iv.certified);

  WeylGroup dinf(a1_tilde());
  auto rr = roots_up_to_height(dinf, 1);
  auto iv2 = interval(dinf, rr[1], negate(rr[0]), 9, 12);
  REQUIRE(iv2.members.size() == 2);
  CHECK(iv2.members[0].vector == std::vector<Int>{0, -1});
  CHECK(iv2.members[1].vector == std::vector<Int>{1, 0});

  auto self = interval(wa2, x1, x1, 4, 8);
  REQUIRE(self.members.size() == 1);
  CHECK(self.members[0].vector == x1.vector);
  CHECK(self.certified);

  CHECK_THROWS_AS(interval(dinf, rr[1], rr[0], 9, 12), Error);
}

TEST_CASE("linear interval examples") {
  WeylGroup wa2(a2());
  auto r = roots_up_to_height(wa2, 2);
  auto lin = linear_interval(wa2, r[1], r[0], 4);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0].vector == std::vector<Int>{0, 1});
  CHECK(lin[1].vector == std::vector<Int>{1, 0});
  CHECK(lin[2].vector == std::vector<Int>{1, 1});

  WeylGroup dinf(a1_tilde());
  auto rr = roots_up_to_height(dinf, 1);
  auto lin2 = linear_interval(dinf, rr[1], negate(rr[0]), 9);
  REQUIRE(lin2.size() == 2);

  auto self = linear_interval(wa2, r[1], r[1], 4);
  REQUIRE(self.size() == 1);
  CHECK(self[0].vector == r[1].vector);
}

TEST_CASE("linear interval is contained in the combinatorial interval") {
  std::mt19937_64 rng(99);
  for (const auto& a : {a2_tilde(), validate_gcm({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}),
                        validate_gcm({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}})}) {
    WeylGroup w(a);
    auto roots = roots_up_to_height(w, 4);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 12; ++trial) {
      const Root& x = roots[rng() % roots.size()];
      Root y = roots[rng() % roots.size()];
      if (rng() % 2) y = negate(y);
      if (x.vector == y.vector) continue;
      if (is_prenilpotent(w, x, y, 8) != Certainty::yes) continue;
      ++tested;
      auto lin = linear_interval(w, x, y, 8);
      auto comb = interval(w, x, y, 8, 8);
      std::set<std::vector<Int>> comb_set;
      for (const auto& m : comb.members) comb_set.insert(m.vector);
      for (const auto& m : lin) CHECK(comb_set.count(m.vector) == 1);
      // Both contain the endpoints, symmetric in the arguments.
      CHECK(comb_set.count(x.vector) == 1);
      CHECK(comb_set.count(y.vector) == 1);
      auto comb_rev = interval(w, y, x, 8, 8);
      std::set<std::vector<Int>> rev_set;
      for (const auto& m : comb_rev.members) rev_set.insert(m.vector);
      CHECK(rev_set == comb_set);
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("point normalization round trip") {
  WeylGroup wt(a2_tilde());
  std::vector<Rat> base = {Rat(1, 2), Rat(1, 3), Rat(1, 5)};
  auto w = wt.normal_form(std::vector<int>{0, 1, 2, 0, 1});
  auto moved = apply_point(wt, w, base);
  auto norm = normalize_point(wt, moved);
  CHECK(norm.chamber == w);
  CHECK(norm.fundamental == base);
  CHECK(norm.facet_type.empty());

  // A panel point lands on a wall.
  std::vector<Rat> panel = {Rat(0), Rat(1, 3), Rat(1, 5)};
  auto pn = normalize_point(wt, panel);
  CHECK(pn.facet_type == std::vector<int>{0});
}

TEST_CASE("phi sets on interior chamber pairs") {
  WeylGroup wt(a2_tilde());
  // Identity pair: nothing separates a point from itself.
  auto base_pair = chamber_pair(wt, wt.identity());
  auto phi0 = phi_sets(wt, base_pair);
  CHECK(phi0.phi_m.empty());
  CHECK(phi0.phi_u.empty());

  // Gallery distance 5: #Phi^m = 0 and #Phi^u = 5.
  auto w5 = wt.normal_form(std::vector<int>{0, 1, 2, 0, 1});
  REQUIRE(w5.length() == 5);
  auto pair5 = chamber_pair(wt, w5);
  auto phi5 = phi_sets(wt, pair5);
  CHECK(phi5.phi_m.empty());
  CHECK(phi5.phi_u.size() == 5);

  // Phi^u equals Phi_{w^-1} = {positive roots sent negative by w^-1}.
  std::set<std::vector<Int>> expected;
  for (const auto& root : roots_up_to_height(wt, 16)) {
    if (vector_sign(wt.apply(wt.inverse(w5), root.vector)) ==
        VectorSign::negative) {
      expected.insert(root.vector);
    }
  }
  std::set<std::vector<Int>> got(phi5.phi_u.begin(), phi5.phi_u.end());
  CHECK(got == expected);
}

TEST_CASE("phi sets: equivariance under the diagonal W-action") {
  WeylGroup wt(a2_tilde());
  auto w3 = wt.normal_form(std::vector<int>{2, 0, 1});
  auto pair = chamber_pair(wt, w3);
  auto phi = phi_sets(wt, pair);
  for (const auto& uword : {std::vector<int>{1}, std::vector<int>{0, 2}}) {
    auto u = wt.normal_form(uword);
    BalancedPair moved;
    moved.plus_point = {apply_point(wt, u, pair.plus_point.coords), Side::plus};
    std::vector<Rat> img(pair.minus_point.coords);
    for (Rat& c : img) c = -c;
    auto moved_img = apply_point(wt, u, img);
    for (Rat& c : moved_img) c = -c;
    moved.minus_point = {moved_img, Side::minus};
    auto phi2 = phi_sets(wt, moved);
    CHECK(phi2.phi_m.size() == phi.phi_m.size());
    CHECK(phi2.phi_u.size() == phi.phi_u.size());
  }
}

TEST_CASE("phi sets on a wall segment contain both orientations") {
  WeylGroup wt(a2_tilde());
  // Both points on the wall of a_0 (first coordinate zero), in distinct
  // panels of the same wall.
  BalancedPair pair;
  pair.plus_point = {{Rat(0), Rat(1, 3), Rat(1, 5)}, Side::plus};
  std::vector<Rat> other = {Rat(0), Rat(2, 3), Rat(4, 5)};
  for (Rat& c : other) c = -c;
  pair.minus_point = {other, Side::minus};
  auto phi = phi_sets(wt, pair);
  CHECK(phi.phi_m.size() == 2);  // +-a_0 and nothing else on this segment
  // Phi^m is closed under negation.
  std::set<std::vector<Int>> pm(phi.phi_m.begin(), phi.phi_m.end());
  for (auto v : pm) {
    for (Int& x : v) x = -x;
    CHECK(pm.count(v) == 1);
  }
}

TEST_CASE("fixator order formula") {
  WeylGroup dinf(a1_tilde());
  auto pair_e = [&](const WeylGroup& w) {
    std::vector<Rat> base = {Rat(1, 2), Rat(1, 3)};
    BalancedPair p;
    p.plus_point = {base, Side::plus};
    std::vector<Rat> img(base);
    for (Rat& c : img) c = -c;
    p.minus_point = {img, Side::minus};
    return p;
  };
  CHECK(fixator_order_formula(dinf, pair_e(dinf), 2, 1) == 1);

  auto w2 = dinf.normal_form(std::vector<int>{0, 1});
  auto pair2 = chamber_pair(dinf, w2);
  CHECK(fixator_order_formula(dinf, pair2, 2, 1) == 4);

  WeylGroup wt(a2_tilde());
  std::vector<Rat> base3 = {Rat(1, 2), Rat(1, 3), Rat(1, 5)};
  BalancedPair p3;
  p3.plus_point = {base3, Side::plus};
  std::vector<Rat> img3(base3);
  for (Rat& c : img3) c = -c;
  p3.minus_point = {img3, Side::minus};
  CHECK(fixator_order_formula(wt, p3, 3, 2) == 4);

  // Nonempty Levi part is an error carrying the M-factor size.
  BalancedPair wall;
  wall.plus_point = {{Rat(0), Rat(1, 3), Rat(1, 5)}, Side::plus};
  std::vector<Rat> other = {Rat(0), Rat(2, 3), Rat(4, 5)};
  for (Rat& c : other) c = -c;
  wall.minus_point = {other, Side::minus};
  CHECK_THROWS_AS(fixator_order_formula(wt, wall, 2, 2), Error);
}
