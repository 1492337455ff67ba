#include "brlab/skew_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "brlab/checked.hpp"

namespace brlab {

SkewMatrix::SkewMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

SkewMatrix SkewMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  SkewMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n; ++j) m.a_[m.index(i, j)] = rows[i][j];
  }
  if (!m.is_skew_symmetric()) throw std::invalid_argument("matrix is not skew-symmetric");
  return m;
}

void SkewMatrix::check_index(int k) const {
  if (k < 0 || k >= n_) throw std::out_of_range("vertex index " + std::to_string(k) + " out of range");
}

void SkewMatrix::set(int i, int j, std::int64_t v) {
  check_index(i);
  check_index(j);
  if (i == j && v != 0) throw std::invalid_argument("nonzero diagonal entry");
  a_[index(i, j)] = v;
  a_[index(j, i)] = checked_neg(v);
}

void SkewMatrix::add(int i, int j, std::int64_t v) {
  check_index(i);
  check_index(j);
  set(i, j, checked_add(a_[index(i, j)], v));
}

std::vector<std::vector<std::int64_t>> SkewMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

bool SkewMatrix::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    if (a_[index(i, i)] != 0) return false;
    for (int j = i + 1; j < n_; ++j)
      if (a_[index(i, j)] != -a_[index(j, i)]) return false;
  }
  return true;
}

SkewMatrix SkewMatrix::operator-() const {
  SkewMatrix m(n_);
  for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] = checked_neg(a_[t]);
  return m;
}

std::string SkewMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

SkewMatrix mutate_matrix(const SkewMatrix& b, int k) {
  b.check_index(k);
  const int n = b.size();
  SkewMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t v;
      if (i == k || j == k) {
        v = checked_neg(b(i, j));
      } else {
        const std::int64_t bik = b(i, k), bkj = b(k, j);
        const std::int64_t s = checked_add(checked_mul(checked_abs(bik), bkj), checked_mul(bik, checked_abs(bkj)));
        v = checked_add(b(i, j), s / 2);
      }
      out.a_[out.index(i, j)] = v;
    }
  }
  return out;
}

bool is_permutation_of_range(const std::vector<int>& pi, int n) {
  if (static_cast<int>(pi.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int p : pi) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

SkewMatrix apply_vertex_map(const SkewMatrix& b, const std::vector<int>& pi) {
  const int n = b.size();
  if (!is_permutation_of_range(pi, n)) throw std::invalid_argument("vertex map is not a bijection");
  SkewMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i < j) out.set(pi[i], pi[j], b(i, j));
  return out;
}

}  // namespace brlab
