#include "kmlat/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_set>

#include "kmlat/error.hpp"

namespace kmlat {

VectorSign vector_sign(std::span<const Int> v) {
  bool has_pos = false, has_neg = false;
  for (const Int& x : v) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
  }
  if (has_pos && has_neg) return VectorSign::mixed;
  if (has_pos) return VectorSign::positive;
  if (has_neg) return VectorSign::negative;
  return VectorSign::zero;
}

namespace {

template <class C>
std::string mat_key(const std::vector<C>& m);

template <>
std::string mat_key<std::int64_t>(const std::vector<std::int64_t>& m) {
  std::string s(m.size() * sizeof(std::int64_t), '\0');
  std::memcpy(s.data(), m.data(), s.size());
  return s;
}

template <>
std::string mat_key<Int>(const std::vector<Int>& m) {
  std::string s;
  for (const Int& x : m) {
    s += x.str();
    s += ',';
  }
  return s;
}

}  // namespace

// Matrix model of W acting on the root lattice Q.  Rows are the images of
// the simple roots: img[s*n + t] = coefficient of a_t in w(a_s).
template <class C>
class WeylEngine {
 public:
  using Mat = std::vector<C>;

  explicit WeylEngine(const WeylGroup& w) : a_(w.gcm()), n_(w.rank()) {}

  Mat identity() const {
    Mat m(n_ * n_, C(0));
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = C(1);
    return m;
  }

  bool is_identity(const Mat& m) const {
    for (int s = 0; s < n_; ++s) {
      for (int t = 0; t < n_; ++t) {
        if (m[s * n_ + t] != C(s == t ? 1 : 0)) return false;
      }
    }
    return true;
  }

  // m <- m * s_j : row_t -= A[j][t] * row_j.
  void rmul_gen(Mat& m, int j) const {
    C* base = m.data();
    std::vector<C> old_row(base + j * n_, base + (j + 1) * n_);
    for (int t = 0; t < n_; ++t) {
      const C f = C(a_.at(j, t));
      for (int u = 0; u < n_; ++u) {
        base[t * n_ + u] =
            Arith<C>::sub(base[t * n_ + u], Arith<C>::mul(f, old_row[u]));
      }
    }
  }

  // m <- s_j * m : for each row v, v_j -= sum_u A[j][u] v_u.
  void lmul_gen(Mat& m, int j) const {
    for (int s = 0; s < n_; ++s) {
      C acc(0);
      for (int u = 0; u < n_; ++u) {
        acc = Arith<C>::add(acc, Arith<C>::mul(C(a_.at(j, u)), m[s * n_ + u]));
      }
      m[s * n_ + j] = Arith<C>::sub(m[s * n_ + j], acc);
    }
  }

  Mat mat_mul(const Mat& x, const Mat& y) const {
    // (xy)(a_s) = y-expansion of x(a_s)?  Composition convention: rows of the
    // product are images under (uv): (uv)(a_s) = u(v(a_s)) = sum over t of
    // v[s][t] * u(a_t).
    Mat r(n_ * n_, C(0));
    for (int s = 0; s < n_; ++s) {
      for (int t = 0; t < n_; ++t) {
        const C& f = y[s * n_ + t];
        if (f == C(0)) continue;
        for (int u = 0; u < n_; ++u) {
          r[s * n_ + u] =
              Arith<C>::add(r[s * n_ + u], Arith<C>::mul(f, x[t * n_ + u]));
        }
      }
    }
    return r;
  }

  Mat from_word(std::span<const int> word) const {
    Mat m = identity();
    for (int j : word) rmul_gen(m, j);
    return m;
  }

  bool row_nonpositive(const Mat& m, int s) const {
    for (int t = 0; t < n_; ++t) {
      if (m[s * n_ + t] > C(0)) return false;
    }
    return true;
  }

  // ShortLex normal form: greedily peel the smallest left descent.
  WeylElement normal_form(std::span<const int> word) const {
    Mat img = identity();
    Mat inv = identity();
    for (int j : word) {
      if (j < 0 || j >= n_) {
        throw Error(ErrorKind::InvalidInput, "generator index out of range");
      }
      rmul_gen(img, j);
      lmul_gen(inv, j);
    }
    WeylElement out;
    const size_t guard = word.size() + 1;
    while (!is_identity(img)) {
      int s = -1;
      for (int cand = 0; cand < n_; ++cand) {
        // Left descent of w <=> w^{-1}(a_cand) < 0 <=> row of inv nonpositive.
        if (row_nonpositive(inv, cand)) { s = cand; break; }
      }
      if (s < 0 || out.word.size() > guard) {
        throw Error(ErrorKind::Internal, "normal form iteration failed");
      }
      out.word.push_back(s);
      lmul_gen(img, s);
      rmul_gen(inv, s);
    }
    return out;
  }

  Ball ball(int radius, std::uint64_t cap) const {
    Ball b;
    b.layers.push_back({WeylElement{}});
    std::uint64_t total = 1;
    if (total > cap) {
      throw Error(ErrorKind::ResourceBudgetExceeded, "ball cap exceeded");
    }
    std::vector<Mat> mats = {identity()};
    for (int k = 0; k < radius; ++k) {
      const auto& layer = b.layers[k];
      std::vector<Mat> next_mats;
      std::vector<WeylElement> next_words;
      std::unordered_set<std::string> seen;
      for (size_t i = 0; i < layer.size(); ++i) {
        for (int s = 0; s < n_; ++s) {
          if (row_nonpositive(mats[i], s)) continue;  // length would drop
          Mat child = mats[i];
          rmul_gen(child, s);
          std::string key = mat_key(child);
          if (!seen.insert(std::move(key)).second) continue;
          WeylElement w = layer[i];
          w.word.push_back(s);
          next_words.push_back(std::move(w));
          next_mats.push_back(std::move(child));
          if (++total > cap) {
            throw Error(ErrorKind::ResourceBudgetExceeded,
                        "ball cap exceeded");
          }
        }
      }
      if (next_words.empty()) {
        b.exhausted = true;
        break;
      }
      b.layers.push_back(std::move(next_words));
      mats = std::move(next_mats);
    }
    return b;
  }

  OrderResult order_of_product(std::span<const int> product_word,
                               int cutoff) const {
    const Mat p = from_word(product_word);
    Mat cur = p;
    for (int k = 1; k <= cutoff; ++k) {
      if (is_identity(cur)) return {true, k};
      cur = mat_mul(cur, p);
    }
    return {false, cutoff};
  }

 private:
  const GeneralizedCartanMatrix& a_;
  int n_;
};

WeylGroup::WeylGroup(GeneralizedCartanMatrix a) : a_(std::move(a)) {}

WeylElement WeylGroup::generator(int s) const {
  if (s < 0 || s >= rank()) {
    throw Error(ErrorKind::InvalidInput, "generator index out of range");
  }
  return WeylElement{{s}};
}

WeylElement WeylGroup::normal_form(std::span<const int> word) const {
  try {
    return WeylEngine<std::int64_t>(*this).normal_form(word);
  } catch (const EngineOverflow&) {
    return WeylEngine<Int>(*this).normal_form(word);
  }
}

WeylElement WeylGroup::multiply(const WeylElement& u,
                                const WeylElement& v) const {
  std::vector<int> word = u.word;
  word.insert(word.end(), v.word.begin(), v.word.end());
  return normal_form(word);
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return normal_form(word);
}

std::vector<Int> WeylGroup::apply(const WeylElement& w,
                                  std::span<const Int> v) const {
  const int n = rank();
  if (static_cast<int>(v.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "vector length != rank");
  }
  std::vector<Int> x(v.begin(), v.end());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const int j = *it;
    Int acc = 0;
    for (int u = 0; u < n; ++u) acc += Int(a_.at(j, u)) * x[u];
    x[j] -= acc;
  }
  return x;
}

std::vector<Int> WeylGroup::simple_root(int s) const {
  std::vector<Int> v(rank(), 0);
  v[s] = 1;
  return v;
}

bool WeylGroup::right_descent(const WeylElement& w, int s) const {
  auto img = apply(w, simple_root(s));
  return vector_sign(img) == VectorSign::negative;
}

bool WeylGroup::left_descent(const WeylElement& w, int s) const {
  return right_descent(inverse(w), s);
}

Ball WeylGroup::ball(int radius, std::uint64_t cap) const {
  if (radius < 0) {
    throw Error(ErrorKind::InvalidInput, "ball radius must be >= 0");
  }
  try {
    return WeylEngine<std::int64_t>(*this).ball(radius, cap);
  } catch (const EngineOverflow&) {
    return WeylEngine<Int>(*this).ball(radius, cap);
  }
}

OrderResult WeylGroup::order_of_product(const WeylElement& u,
                                        const WeylElement& v,
                                        int cutoff) const {
  if (cutoff < 1) {
    throw Error(ErrorKind::InvalidInput, "cutoff must be >= 1");
  }
  std::vector<int> word = u.word;
  word.insert(word.end(), v.word.begin(), v.word.end());
  try {
    return WeylEngine<std::int64_t>(*this).order_of_product(word, cutoff);
  } catch (const EngineOverflow&) {
    return WeylEngine<Int>(*this).order_of_product(word, cutoff);
  }
}

}  // namespace kmlat
