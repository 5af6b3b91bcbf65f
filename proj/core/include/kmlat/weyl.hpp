#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmlat/gcm.hpp"
#include "kmlat/integers.hpp"

namespace kmlat {

// A Weyl-group element in canonical normal form: the ShortLex-least reduced
// word under the generator order of the GCM.  Equality of elements is
// equality of words.
struct WeylElement {
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
};

struct Ball {
  // layers[n] = all elements of length n, in ShortLex order.
  std::vector<std::vector<WeylElement>> layers;
  // True when the enumeration terminated because the group was exhausted.
  bool exhausted = false;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& l : layers) t += l.size();
    return t;
  }
};

struct OrderResult {
  bool finite = false;  // true: order is `value`; false: exceeded the cutoff
  int value = 0;
};

inline constexpr std::uint64_t kDefaultBallCap = 1'000'000;

// Exact arithmetic in the Weyl group of a generalized Cartan matrix.  All
// operations are pure; elements are plain value types.
class WeylGroup {
 public:
  explicit WeylGroup(GeneralizedCartanMatrix a);

  const GeneralizedCartanMatrix& gcm() const { return a_; }
  int rank() const { return a_.rank(); }

  WeylElement identity() const { return {}; }
  WeylElement generator(int s) const;

  // Canonical normal form of an arbitrary word.
  WeylElement normal_form(std::span<const int> word) const;

  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;

  // w.v by letter-by-letter application of s.a_t = a_t - A_st a_s.
  std::vector<Int> apply(const WeylElement& w, std::span<const Int> v) const;

  // Simple root a_s as a coordinate vector.
  std::vector<Int> simple_root(int s) const;

  // True iff l(ws) < l(w), decided by the sign of w.a_s.
  bool right_descent(const WeylElement& w, int s) const;
  // True iff l(sw) < l(w).
  bool left_descent(const WeylElement& w, int s) const;

  int length(const WeylElement& w) const { return w.length(); }

  // Complete, duplicate-free BFS enumeration by length; deterministic
  // (ShortLex) order.  Throws ResourceBudgetExceeded past `cap` elements.
  Ball ball(int radius, std::uint64_t cap = kDefaultBallCap) const;

  // Least k <= cutoff with (uv)^k = e, else a distinct exceeds-cutoff verdict.
  OrderResult order_of_product(const WeylElement& u, const WeylElement& v,
                               int cutoff) const;

 private:
  template <class C>
  friend class WeylEngine;

  GeneralizedCartanMatrix a_;
};

// Sign classification of root-lattice vectors.
enum class VectorSign { positive, negative, mixed, zero };
VectorSign vector_sign(std::span<const Int> v);

// Which half of a twinned structure an object belongs to.
enum class Side { plus, minus };

}  // namespace kmlat
