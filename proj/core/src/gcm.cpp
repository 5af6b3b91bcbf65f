#include "kmlat/gcm.hpp"

#include <algorithm>
#include <set>

#include "kmlat/error.hpp"

namespace kmlat {

GeneralizedCartanMatrix validate_gcm(
    const std::vector<std::vector<std::int64_t>>& matrix,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      throw Error(ErrorKind::InvalidInput, "matrix is not square");
    }
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorKind::InvalidInput, "label count does not match rank");
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (static_cast<int>(distinct.size()) != n) {
    throw Error(ErrorKind::InvalidInput, "labels are not distinct");
  }
  for (int s = 0; s < n; ++s) {
    if (matrix[s][s] != 2) {
      throw Error(ErrorKind::NonTwoDiagonal, "diagonal entry != 2", s, s);
    }
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (matrix[s][t] > 0) {
        throw Error(ErrorKind::PositiveOffDiagonal,
                    "off-diagonal entry > 0", s, t);
      }
      if ((matrix[s][t] == 0) != (matrix[t][s] == 0)) {
        // Point at the vanishing entry of the asymmetric pair.
        const int zi = matrix[s][t] == 0 ? s : t;
        const int zj = matrix[s][t] == 0 ? t : s;
        throw Error(ErrorKind::AsymmetricZero, "zero pattern not symmetric",
                    zi, zj);
      }
    }
  }
  GeneralizedCartanMatrix g;
  g.labels_ = std::move(labels);
  g.a_ = matrix;
  return g;
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::submatrix(
    std::span<const int> subset) const {
  std::vector<std::vector<std::int64_t>> m(subset.size());
  std::vector<std::string> l;
  for (size_t i = 0; i < subset.size(); ++i) {
    l.push_back(labels_[subset[i]]);
    for (size_t j = 0; j < subset.size(); ++j) {
      m[i].push_back(a_[subset[i]][subset[j]]);
    }
  }
  return validate_gcm(m, l);
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::relabeled(
    std::span<const int> perm) const {
  const int n = rank();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) {
    l[i] = labels_[perm[i]];
    for (int j = 0; j < n; ++j) m[i][j] = a_[perm[i]][perm[j]];
  }
  return validate_gcm(m, l);
}

CoxeterMatrix coxeter_of_gcm(const GeneralizedCartanMatrix& a) {
  const int n = a.rank();
  CoxeterMatrix cm;
  cm.labels = a.labels();
  cm.m.assign(n, std::vector<int>(n, 1));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const std::int64_t prod = a.at(s, t) * a.at(t, s);
      int m;
      switch (prod) {
        case 0: m = 2; break;
        case 1: m = 3; break;
        case 2: m = 4; break;
        case 3: m = 6; break;
        default: m = CoxeterMatrix::infinity; break;
      }
      cm.m[s][t] = m;
    }
  }
  return cm;
}

GeneralizedCartanMatrix gcm_of_coxeter(const CoxeterMatrix& cm) {
  const int n = cm.rank();
  for (int s = 0; s < n; ++s) {
    if (cm.m[s][s] != 1) {
      throw Error(ErrorKind::InvalidInput, "Coxeter diagonal entry != 1", s, s);
    }
    for (int t = s + 1; t < n; ++t) {
      if (cm.m[s][t] != cm.m[t][s]) {
        throw Error(ErrorKind::InvalidInput, "Coxeter matrix not symmetric",
                    s, t);
      }
    }
  }
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (int s = 0; s < n; ++s) a[s][s] = 2;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::int64_t lo, hi;  // |lo| <= |hi|; hi goes on the later row
      switch (cm.m[s][t]) {
        case 2: lo = 0; hi = 0; break;
        case 3: lo = -1; hi = -1; break;
        case 4: lo = -1; hi = -2; break;
        case 6: lo = -1; hi = -3; break;
        case CoxeterMatrix::infinity: lo = -2; hi = -2; break;
        default:
          throw Error(ErrorKind::InvalidInput,
                      "Coxeter entry outside {2,3,4,6,inf}", s, t);
      }
      a[s][t] = lo;
      a[t][s] = hi;
    }
  }
  return validate_gcm(a, cm.labels);
}

bool is_finite_type(const GeneralizedCartanMatrix& a,
                    std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  if (k == 0) return true;
  if (k > 20) {
    throw Error(ErrorKind::ResourceBudgetExceeded,
                "finite-type test limited to rank <= 20 subsets");
  }
  // All principal minors of the submatrix, by subset enumeration.
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) rows.push_back(subset[i]);
    }
    std::vector<std::vector<Int>> m(rows.size(),
                                    std::vector<Int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = 0; j < rows.size(); ++j) {
        m[i][j] = a.at(rows[i], rows[j]);
      }
    }
    if (det_bareiss(std::move(m)) <= 0) return false;
  }
  return true;
}

bool is_finite_type(const GeneralizedCartanMatrix& a) {
  std::vector<int> all(a.rank());
  for (int i = 0; i < a.rank(); ++i) all[i] = i;
  return is_finite_type(a, all);
}

}  // namespace kmlat
