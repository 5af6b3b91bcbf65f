#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kmlat/integers.hpp"

namespace kmlat {

// Square integer matrix with 2's on the diagonal, non-positive entries off it
// and a symmetric zero pattern.  The seed datum for everything downstream.
class GeneralizedCartanMatrix {
 public:
  GeneralizedCartanMatrix() = default;

  int rank() const { return static_cast<int>(labels_.size()); }
  std::int64_t at(int s, int t) const { return a_[s][t]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::int64_t>>& entries() const { return a_; }

  GeneralizedCartanMatrix submatrix(std::span<const int> subset) const;
  GeneralizedCartanMatrix relabeled(std::span<const int> perm) const;

  bool operator==(const GeneralizedCartanMatrix&) const = default;

  friend GeneralizedCartanMatrix validate_gcm(
      const std::vector<std::vector<std::int64_t>>& matrix,
      std::vector<std::string> labels);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::int64_t>> a_;
};

// Checks the three axioms entrywise; throws Error naming the violated axiom
// and the offending entry.
GeneralizedCartanMatrix validate_gcm(
    const std::vector<std::vector<std::int64_t>>& matrix,
    std::vector<std::string> labels = {});

// Symmetric matrix over {1,2,3,4,6,inf}; infinity is encoded as 0.
struct CoxeterMatrix {
  static constexpr int infinity = 0;

  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(labels.size()); }
  bool operator==(const CoxeterMatrix&) const = default;
};

// m_st = 2,3,4,6,inf for A_st*A_ts = 0,1,2,3,>=4.
CoxeterMatrix coxeter_of_gcm(const GeneralizedCartanMatrix& a);

// Canonical GCM lift of a Coxeter matrix: 2->(0,0), 3->(-1,-1), 4->(-1,-2),
// 6->(-1,-3), inf->(-2,-2), the larger |entry| on the lexicographically later
// row.  One integer engine then serves both conventions.
GeneralizedCartanMatrix gcm_of_coxeter(const CoxeterMatrix& m);

// True iff all principal minors of A_J are strictly positive (exact integer
// determinants); equivalently W_J is finite.
bool is_finite_type(const GeneralizedCartanMatrix& a, std::span<const int> subset);
bool is_finite_type(const GeneralizedCartanMatrix& a);

}  // namespace kmlat
