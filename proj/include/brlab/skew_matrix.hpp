#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brlab {

// Integer skew-symmetric exchange matrix. Entries are int64 with overflow
// checks on every arithmetic step of mutation.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(int n);

  // Throws std::invalid_argument unless rows form a skew-symmetric square matrix.
  static SkewMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[index(i, j)]; }

  // Sets B_ij = v and B_ji = -v.
  void set(int i, int j, std::int64_t v);
  // Adds v to B_ij and subtracts it from B_ji.
  void add(int i, int j, std::int64_t v);

  std::vector<std::vector<std::int64_t>> rows() const;
  bool is_skew_symmetric() const;
  SkewMatrix operator-() const;
  bool operator==(const SkewMatrix& o) const = default;

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  void check_index(int k) const;

  int n_ = 0;
  std::vector<std::int64_t> a_;

  friend SkewMatrix mutate_matrix(const SkewMatrix& b, int k);
};

// Matrix mutation at k:
//   B'_ij = -B_ij                                   if i = k or j = k
//   B'_ij = B_ij + (|B_ik| B_kj + B_ik |B_kj|) / 2   otherwise
SkewMatrix mutate_matrix(const SkewMatrix& b, int k);

// Relabeling B'_{pi(i) pi(j)} = B_ij. Throws if pi is not a permutation of 0..n-1.
SkewMatrix apply_vertex_map(const SkewMatrix& b, const std::vector<int>& pi);

bool is_permutation_of_range(const std::vector<int>& pi, int n);

}  // namespace brlab
