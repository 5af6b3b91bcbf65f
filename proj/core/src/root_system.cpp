#include "kmlat/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kmlat/error.hpp"

namespace kmlat {

namespace {

Int height(std::span<const Int> v) {
  Int h = 0;
  for (const Int& x : v) h += x;
  return h;
}

std::vector<Int> reflect_simple(const WeylGroup& w, int s,
                                std::span<const Int> v) {
  std::vector<Int> out(v.begin(), v.end());
  Int acc = 0;
  for (int u = 0; u < w.rank(); ++u) acc += Int(w.gcm().at(s, u)) * v[u];
  out[s] -= acc;
  return out;
}

std::vector<Int> negate_vec(std::span<const Int> v) {
  std::vector<Int> out(v.begin(), v.end());
  for (Int& x : out) x = -x;
  return out;
}

bool vec_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

Rat dot(std::span<const Int> root, std::span<const Rat> point) {
  Rat s(0);
  for (size_t i = 0; i < root.size(); ++i) s += Rat(root[i]) * point[i];
  return s;
}

}  // namespace

RootEnumeration enumerate_roots(const WeylGroup& w, const Int& height_cap,
                                std::uint64_t cap) {
  if (height_cap < 1) {
    throw Error(ErrorKind::InvalidInput, "height cap must be >= 1");
  }
  RootEnumeration out;
  out.complete = true;
  std::map<std::vector<Int>, WeylElement> found;
  std::vector<std::vector<Int>> queue;
  for (int s = 0; s < w.rank(); ++s) {
    auto v = w.simple_root(s);
    found.emplace(v, w.generator(s));
    queue.push_back(std::move(v));
  }
  size_t head = 0;
  while (head < queue.size()) {
    auto v = queue[head++];
    const WeylElement refl = found.at(v);
    for (int s = 0; s < w.rank(); ++s) {
      auto child = reflect_simple(w, s, v);
      if (vector_sign(child) != VectorSign::positive) continue;
      if (height(child) > height_cap) {
        out.complete = false;
        continue;
      }
      if (found.count(child)) continue;
      // s_{s(v)} = s . s_v . s
      std::vector<int> word;
      word.push_back(s);
      word.insert(word.end(), refl.word.begin(), refl.word.end());
      word.push_back(s);
      found.emplace(child, w.normal_form(word));
      if (found.size() > cap) {
        throw Error(ErrorKind::ResourceBudgetExceeded, "root cap exceeded");
      }
      queue.push_back(std::move(child));
    }
  }
  for (auto& [v, refl] : found) out.roots.push_back(Root{v, refl});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return vec_less(a.vector, b.vector); });
  return out;
}

std::vector<Root> roots_up_to_height(const WeylGroup& w, const Int& height_cap,
                                     std::uint64_t cap) {
  return enumerate_roots(w, height_cap, cap).roots;
}

Root root_from_vector(const WeylGroup& w, std::span<const Int> v) {
  const VectorSign sign = vector_sign(v);
  if (sign == VectorSign::mixed || sign == VectorSign::zero) {
    throw Error(ErrorKind::InvalidInput, "vector is not a real root");
  }
  std::vector<Int> x(v.begin(), v.end());
  if (sign == VectorSign::negative) x = negate_vec(x);
  // Depth reduction: strictly lower the height until a simple root appears.
  std::vector<int> prefix;
  for (int guard = 0; guard < 100000; ++guard) {
    int nonzero = -1;
    bool simple = true;
    for (int s = 0; s < w.rank(); ++s) {
      if (x[s] != 0) {
        if (nonzero >= 0 || x[s] != 1) simple = false;
        if (nonzero < 0) nonzero = s;
      }
    }
    if (simple && nonzero >= 0) {
      std::vector<int> word;
      word.insert(word.end(), prefix.begin(), prefix.end());
      word.push_back(nonzero);
      word.insert(word.end(), prefix.rbegin(), prefix.rend());
      Root r{std::vector<Int>(v.begin(), v.end()), w.normal_form(word)};
      return r;
    }
    int pick = -1;
    Int h = height(x);
    for (int s = 0; s < w.rank(); ++s) {
      auto child = reflect_simple(w, s, x);
      if (vector_sign(child) == VectorSign::positive && height(child) < h) {
        pick = s;
        x = std::move(child);
        break;
      }
    }
    if (pick < 0) {
      throw Error(ErrorKind::InvalidInput, "vector is not a real root");
    }
    prefix.push_back(pick);
  }
  throw Error(ErrorKind::InvalidInput, "depth reduction did not terminate");
}

Root negate(const Root& r) { return Root{negate_vec(r.vector), r.reflection}; }

Side chamber_side(const WeylGroup& w, const WeylElement& chamber,
                  const Root& alpha) {
  auto img = w.apply(w.inverse(chamber), alpha.vector);
  switch (vector_sign(img)) {
    case VectorSign::positive: return Side::plus;
    case VectorSign::negative: return Side::minus;
    default:
      throw Error(ErrorKind::WallIncidence,
                  "chamber evaluated onto a wall (internal)");
  }
}

namespace {

// <alpha, beta-check>: the coefficient c with s_beta(alpha) = alpha - c*beta.
Int pairing(const WeylGroup& w, const Root& alpha, const Root& beta) {
  auto img = w.apply(beta.reflection, alpha.vector);
  int idx = -1;
  for (int i = 0; i < w.rank(); ++i) {
    if (beta.vector[i] != 0) { idx = i; break; }
  }
  Int diff = alpha.vector[idx] - img[idx];
  if (diff % beta.vector[idx] != 0) {
    throw Error(ErrorKind::Internal, "pairing is not integral");
  }
  return diff / beta.vector[idx];
}

std::vector<WeylElement> dihedral_line(const WeylGroup& w, const Root& alpha,
                                       const Root& beta, int radius) {
  std::vector<WeylElement> out;
  out.push_back(w.identity());
  for (int first = 0; first < 2; ++first) {
    WeylElement cur = w.identity();
    for (int k = 0; k < radius; ++k) {
      const Root& r = ((k % 2 == 0) == (first == 0)) ? alpha : beta;
      cur = w.multiply(cur, r.reflection);
      out.push_back(cur);
    }
  }
  return out;
}

}  // namespace

Certainty is_prenilpotent(const WeylGroup& w, const Root& alpha,
                          const Root& beta, int radius, int order_cutoff) {
  if (alpha.vector == negate_vec(beta.vector)) return Certainty::no;
  if (alpha.vector == beta.vector) return Certainty::yes;
  OrderResult ord =
      w.order_of_product(alpha.reflection, beta.reflection, order_cutoff);
  if (ord.finite) return Certainty::yes;  // walls cross a spherical facet

  // Infinite (or undecided) wall-crossing order: nesting certificate by the
  // sign of the pairing, witness search otherwise.
  Int c = pairing(w, alpha, beta);
  Int c2 = pairing(w, beta, alpha);
  if (c * c2 >= 4 && c < 0) return Certainty::no;

  bool witness_pp = false, witness_mm = false;
  auto chambers = dihedral_line(w, alpha, beta, radius);
  auto ambient = w.ball(std::min(radius, 6));
  for (const auto& layer : ambient.layers) {
    chambers.insert(chambers.end(), layer.begin(), layer.end());
  }
  const Root malpha = negate(alpha);
  const Root mbeta = negate(beta);
  for (const auto& ch : chambers) {
    if (!witness_pp && chamber_side(w, ch, alpha) == Side::plus &&
        chamber_side(w, ch, beta) == Side::plus) {
      witness_pp = true;
    }
    if (!witness_mm && chamber_side(w, ch, malpha) == Side::plus &&
        chamber_side(w, ch, mbeta) == Side::plus) {
      witness_mm = true;
    }
    if (witness_pp && witness_mm) return Certainty::yes;
  }
  return Certainty::unresolved;
}

IntervalResult interval(const WeylGroup& w, const Root& alpha,
                        const Root& beta, const Int& height_cap, int radius) {
  IntervalResult out;
  out.search_radius = radius;
  if (alpha.vector == beta.vector) {
    out.members = {alpha};
    out.certified = true;
    return out;
  }
  Certainty pre = is_prenilpotent(w, alpha, beta, radius);
  if (pre != Certainty::yes) {
    throw Error(ErrorKind::NotPrenilpotent,
                pre == Certainty::no ? "pair is not prenilpotent"
                                     : "prenilpotence unresolved at radius");
  }
  auto enumeration = enumerate_roots(w, height_cap);
  std::vector<Root> candidates;
  for (const auto& r : enumeration.roots) {
    candidates.push_back(r);
    candidates.push_back(negate(r));
  }
  Ball ball = w.ball(radius);
  // Chambers in alpha cap beta and in (-alpha) cap (-beta), as inverses so
  // each candidate needs one apply() per chamber.
  std::vector<WeylElement> inv_ab, inv_mm;
  auto side_of = [&](const WeylElement& inv, std::span<const Int> v) {
    return vector_sign(w.apply(inv, v));
  };
  for (const auto& layer : ball.layers) {
    for (const auto& ch : layer) {
      WeylElement inv = w.inverse(ch);
      const VectorSign sa = side_of(inv, alpha.vector);
      const VectorSign sb = side_of(inv, beta.vector);
      if (sa == VectorSign::positive && sb == VectorSign::positive) {
        inv_ab.push_back(inv);
      }
      if (sa == VectorSign::negative && sb == VectorSign::negative) {
        inv_mm.push_back(std::move(inv));
      }
    }
  }
  for (const auto& g : candidates) {
    bool member = true;
    for (const auto& inv : inv_ab) {
      if (side_of(inv, g.vector) != VectorSign::positive) { member = false; break; }
    }
    if (member) {
      for (const auto& inv : inv_mm) {
        if (side_of(inv, g.vector) != VectorSign::negative) { member = false; break; }
      }
    }
    if (member) out.members.push_back(g);
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const Root& a, const Root& b) { return vec_less(a.vector, b.vector); });
  out.certified = ball.exhausted && enumeration.complete;
  return out;
}

std::vector<Root> linear_interval(const WeylGroup& w, const Root& alpha,
                                  const Root& beta, const Int& height_cap) {
  const int n = w.rank();
  auto enumeration = enumerate_roots(w, height_cap);
  std::vector<Root> candidates;
  for (const auto& r : enumeration.roots) {
    candidates.push_back(r);
    candidates.push_back(negate(r));
  }

  // Choose coordinates that make (alpha, beta) visibly independent.
  int i0 = -1, j0 = -1;
  for (int i = 0; i < n && i0 < 0; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Int d = alpha.vector[i] * beta.vector[j] - alpha.vector[j] * beta.vector[i];
      if (d != 0) { i0 = i; j0 = j; break; }
    }
  }

  std::vector<Root> out;
  for (const auto& g : candidates) {
    bool member = false;
    if (i0 >= 0) {
      // Solve lambda*alpha + mu*beta = g on rows (i0, j0), verify the rest.
      Rat det = Rat(alpha.vector[i0]) * Rat(beta.vector[j0]) -
                Rat(alpha.vector[j0]) * Rat(beta.vector[i0]);
      Rat lambda = (Rat(g.vector[i0]) * Rat(beta.vector[j0]) -
                    Rat(g.vector[j0]) * Rat(beta.vector[i0])) / det;
      Rat mu = (Rat(alpha.vector[i0]) * Rat(g.vector[j0]) -
                Rat(alpha.vector[j0]) * Rat(g.vector[i0])) / det;
      if (lambda >= 0 && mu >= 0) {
        member = true;
        for (int t = 0; t < n; ++t) {
          if (lambda * Rat(alpha.vector[t]) + mu * Rat(beta.vector[t]) !=
              Rat(g.vector[t])) { member = false; break; }
        }
      }
    } else {
      // Proportional roots: the cone degenerates to a ray or a line.
      auto on_ray = [&](const Root& base) {
        // g = lambda*base with lambda >= 0?
        int idx = -1;
        for (int t = 0; t < n; ++t) {
          if (base.vector[t] != 0) { idx = t; break; }
        }
        Rat lambda = Rat(g.vector[idx]) / Rat(base.vector[idx]);
        if (lambda < 0) return false;
        for (int t = 0; t < n; ++t) {
          if (lambda * Rat(base.vector[t]) != Rat(g.vector[t])) return false;
        }
        return true;
      };
      member = on_ray(alpha) || on_ray(beta);
    }
    if (member) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](const Root& a, const Root& b) { return vec_less(a.vector, b.vector); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Root& a, const Root& b) {
                          return a.vector == b.vector;
                        }),
            out.end());
  return out;
}

NormalizedPoint normalize_point(const WeylGroup& w,
                                std::span<const Rat> coords) {
  const int n = w.rank();
  if (static_cast<int>(coords.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "point length != rank");
  }
  std::vector<Rat> x(coords.begin(), coords.end());
  std::vector<int> word;
  for (int guard = 0; guard < 100000; ++guard) {
    int s = -1;
    for (int t = 0; t < n; ++t) {
      if (x[t] < 0) { s = t; break; }
    }
    if (s < 0) {
      NormalizedPoint out;
      out.chamber = w.normal_form(word);
      out.fundamental = std::move(x);
      for (int t = 0; t < n; ++t) {
        if (out.fundamental[t] == 0) out.facet_type.push_back(t);
      }
      return out;
    }
    // a_t(s.x) = x_t - A_st * x_s
    const Rat xs = x[s];
    for (int t = 0; t < n; ++t) x[t] -= Rat(w.gcm().at(s, t)) * xs;
    word.push_back(s);
  }
  throw Error(ErrorKind::DegenerateSegment,
              "point does not normalize into the Tits cone");
}

void validate_balanced_pair(const WeylGroup& w, const BalancedPair& pair) {
  if (pair.plus_point.sign != Side::plus ||
      pair.minus_point.sign != Side::minus) {
    throw Error(ErrorKind::InvalidInput, "balanced pair needs one point per sign");
  }
  auto np = normalize_point(w, pair.plus_point.coords);
  std::vector<Rat> opp(pair.minus_point.coords);
  for (Rat& c : opp) c = -c;
  auto nm = normalize_point(w, opp);
  if (!is_finite_type(w.gcm(), np.facet_type) ||
      !is_finite_type(w.gcm(), nm.facet_type)) {
    throw Error(ErrorKind::DegenerateSegment,
                "balanced pair facet type is not spherical");
  }
}

PhiSets phi_sets(const WeylGroup& w, const BalancedPair& pair) {
  validate_balanced_pair(w, pair);
  const int n = w.rank();
  std::vector<Rat> z(pair.plus_point.coords);
  std::vector<Rat> y(pair.minus_point.coords);
  for (Rat& c : y) c = -c;  // opposite image in the positive cone

  auto ny = normalize_point(w, y);
  auto nz = normalize_point(w, z);
  const int base = ny.chamber.length() + nz.chamber.length();
  const int radius_max = 2 * base + 14;

  // Candidate walls: the simple walls of every chamber near the segment; the
  // set must stabilize well before the radius cap.
  std::set<std::vector<Int>> phi_m, phi_u;
  std::set<std::vector<Int>> seen;
  Ball ball = w.ball(radius_max);
  int stable_layers = 0;
  bool stabilized = false;
  for (size_t layer = 0; layer < ball.layers.size(); ++layer) {
    bool changed = false;
    for (const auto& ch : ball.layers[layer]) {
      for (int s = 0; s < n; ++s) {
        std::vector<Int> root = w.apply(ch, w.simple_root(s));
        if (vector_sign(root) == VectorSign::negative) root = negate_vec(root);
        if (!seen.insert(root).second) continue;
        const Rat ey = dot(root, y);
        const Rat ez = dot(root, z);
        if (ey == 0 && ez == 0) {
          changed |= phi_m.insert(root).second;
          changed |= phi_m.insert(negate_vec(root)).second;
        } else {
          if (ez >= 0 && ey <= 0) changed |= phi_u.insert(root).second;
          if (ez <= 0 && ey >= 0) changed |= phi_u.insert(negate_vec(root)).second;
        }
      }
    }
    if (static_cast<int>(layer) >= base + 8) {
      stable_layers = changed ? 0 : stable_layers + 1;
      if (stable_layers >= 4) { stabilized = true; break; }
    }
  }
  if (!stabilized && !ball.exhausted) {
    throw Error(ErrorKind::Internal, "phi enumeration did not stabilize");
  }
  PhiSets out;
  out.phi_m.assign(phi_m.begin(), phi_m.end());
  out.phi_u.assign(phi_u.begin(), phi_u.end());
  return out;
}

Int fixator_order_formula(const WeylGroup& w, const BalancedPair& pair,
                          const Int& q, int torus_rank) {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "q must be >= 2");
  PhiSets phi = phi_sets(w, pair);
  if (!phi.phi_m.empty()) {
    throw Error(ErrorKind::NonEmptyLeviPart,
                "Phi^m has " + std::to_string(phi.phi_m.size()) +
                    " roots; the M-factor order is out of scope");
  }
  return boost::multiprecision::pow(q - 1, static_cast<unsigned>(torus_rank)) *
         boost::multiprecision::pow(q, static_cast<unsigned>(phi.phi_u.size()));
}

}  // namespace kmlat
