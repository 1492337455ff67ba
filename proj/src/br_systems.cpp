#include "brlab/br_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "brlab/checked.hpp"

namespace brlab {

void BrConfig::validate() const {
  if (r < 2 || l < 2) throw std::invalid_argument("B_r systems need r >= 2 and l >= 2");
}

BrQuiver::BrQuiver(const BrConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const int r = cfg_.r;
  for (int i = 1; i <= 2 * r - 1; ++i) {
    col_start_.push_back(static_cast<int>(verts_.size()));
    for (int ip = 1; ip <= height(i); ++ip) verts_.push_back({i, ip});
  }
  b_ = SkewMatrix(size());
  auto arrow = [&](int i1, int j1, int i2, int j2) { b_.add(index(i1, j1), index(i2, j2), 1); };
  auto minus = [&](int i, int ip) { return sign(index(i, ip)) == Sign::minus; };
  for (const auto& [i, ip] : verts_) {
    if (i != r) {
      // horizontal arrows between neighbouring open columns on the same side of r
      const int i2 = i + 1;
      if (i2 <= 2 * r - 1 && i2 != r && i != r - 1) {
        if (minus(i, ip))
          arrow(i, ip, i2, ip);
        else
          arrow(i2, ip, i, ip);
      }
      if (contains(i, ip + 1)) {
        if (minus(i, ip))
          arrow(i, ip + 1, i, ip);
        else
          arrow(i, ip, i, ip + 1);
      }
    } else {
      if (contains(i, ip + 1)) {
        if (ip % 2 == 1)
          arrow(i, ip, i, ip + 1);
        else
          arrow(i, ip + 1, i, ip);
      }
      if (ip % 2 == 0) {
        arrow(r, ip, r - 1, ip / 2);
        arrow(r, ip, r + 1, ip / 2);
      }
    }
  }
  for (int c : {r - 1, r + 1})
    for (int j = 1; j <= cfg_.l - 1; ++j)
      if (minus(c, j)) {
        arrow(c, j, r, 2 * j - 1);
        arrow(c, j, r, 2 * j + 1);
      }
}

int BrQuiver::height(int i) const {
  if (i < 1 || i > 2 * cfg_.r - 1) throw std::out_of_range("column out of range");
  return i == cfg_.r ? 2 * cfg_.l - 1 : cfg_.l - 1;
}

bool BrQuiver::contains(int i, int ip) const {
  return i >= 1 && i <= 2 * cfg_.r - 1 && ip >= 1 && ip <= height(i);
}

int BrQuiver::index(int i, int ip) const {
  if (!contains(i, ip)) throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(ip) + ") is not a vertex");
  return col_start_[i - 1] + ip - 1;
}

Sign BrQuiver::sign(int idx) const {
  const auto& v = vertex(idx);
  const int r = cfg_.r;
  bool neg;
  if (v.i < r)
    neg = (r - v.i + v.ip) % 2 == 0;
  else if (v.i > r)
    neg = (v.i - r + v.ip) % 2 == 1;
  else
    neg = v.ip % 2 == 0;
  return neg ? Sign::minus : Sign::plus;
}

std::vector<std::string> BrQuiver::labels() const {
  std::vector<std::string> out;
  for (const auto& v : verts_) out.push_back("y[" + std::to_string(v.i) + "," + std::to_string(v.ip) + "]");
  return out;
}

Quiver BrQuiver::quiver() const {
  std::vector<QuiverVertex> vs;
  for (int k = 0; k < size(); ++k) {
    const auto& v = verts_[k];
    vs.push_back({"(" + std::to_string(v.i) + "," + std::to_string(v.ip) + ")", {color(k), sign(k)}});
  }
  return quiver_of(b_, std::move(vs));
}

std::vector<int> BrQuiver::reflection() const {
  std::vector<int> p(size());
  for (int k = 0; k < size(); ++k) p[k] = index(2 * cfg_.r - verts_[k].i, verts_[k].ip);
  return p;
}

std::vector<int> BrQuiver::rotation() const {
  std::vector<int> p(size());
  for (int k = 0; k < size(); ++k) {
    const auto& v = verts_[k];
    p[k] = index(2 * cfg_.r - v.i, height(v.i) + 1 - v.ip);
  }
  return p;
}

bool schedule_cycle_holds(const BrQuiver& q) {
  SkewMatrix b = q.matrix();
  for (int u2 = 0; u2 < 4; ++u2) {
    if (!(b == expected_matrix(q, u2))) return false;
    const auto batch = mutation_batch(q, u2);
    if (!batch_commutes(b, batch)) return false;
    for (int k : batch) b = mutate_matrix(b, k);
  }
  return b == q.matrix();
}

BrQuiver build_quiver_B(const BrConfig& cfg) {
  BrQuiver q(cfg);
  if (!q.matrix().is_skew_symmetric()) throw std::logic_error("Q_l(B_r) matrix is not skew-symmetric");
  if (!schedule_cycle_holds(q)) throw std::logic_error("Q_l(B_r) fails the 4-step mutation cycle");
  return q;
}

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::p_plus: return "p+";
    case Parity::p_minus: return "p-";
    case Parity::none: return "none";
  }
  return "?";
}

namespace {

bool is_p_plus(const BrQuiver& q, int idx, int u2) {
  const bool filled = q.color(idx) == Color::filled;
  const bool plus = q.sign(idx) == Sign::plus;
  switch (mod(u2, 4)) {
    case 0: return plus;
    case 2: return filled == plus;
    default: return filled && !plus;
  }
}

}  // namespace

Parity parity_p(const BrQuiver& q, int idx, int u2) {
  if (idx < 0 || idx >= q.size()) throw std::out_of_range("vertex index out of range");
  if (is_p_plus(q, idx, u2)) return Parity::p_plus;
  if (is_p_plus(q, idx, u2 - 1)) return Parity::p_minus;
  return Parity::none;
}

std::vector<int> mutation_batch(const BrQuiver& q, int u2) {
  std::vector<int> out;
  for (int k = 0; k < q.size(); ++k)
    if (is_p_plus(q, k, u2)) out.push_back(k);
  return out;
}

SkewMatrix expected_matrix(const BrQuiver& q, int u2) {
  switch (mod(u2, 4)) {
    case 0: return q.matrix();
    case 1: return -q.matrix();
    case 2: return apply_vertex_map(q.matrix(), q.reflection());
    default: return -apply_vertex_map(q.matrix(), q.reflection());
  }
}

std::vector<int> step_batch(const BrQuiver& q, int u2, Direction d) {
  return mutation_batch(q, d == Direction::forward ? u2 : u2 - 1);
}

bool batch_commutes(const SkewMatrix& b, const std::vector<int>& batch) {
  for (int j : batch)
    for (int k : batch)
      if (b(j, k) != 0) return false;
  return true;
}

std::string to_string(const SystemIndex& s) {
  std::string u = (s.u2 % 2 == 0) ? std::to_string(s.u2 / 2) : std::to_string(s.u2) + "/2";
  return "(" + std::to_string(s.a) + "," + std::to_string(s.m) + "," + u + ")";
}

bool in_index_set(const BrConfig& cfg, const SystemIndex& s) {
  if (s.a < 1 || s.a > cfg.r) return false;
  return s.m >= 1 && s.m <= cfg.t(s.a) * cfg.l - 1;
}

bool parity_P_plus(const BrConfig& cfg, const SystemIndex& s) {
  if (!in_index_set(cfg, s)) return false;
  return s.a != cfg.r ? mod(s.u2, 2) == 0 : mod(s.m + s.u2, 2) == 0;
}

bool parity_Pprime_plus(const BrConfig& cfg, const SystemIndex& s) {
  if (!in_index_set(cfg, s)) return false;
  return s.a != cfg.r ? mod(s.u2, 2) == 0 : mod(s.m + s.u2, 2) == 1;
}

namespace {

// shared by g and g': the p_plus point for label (a,m) at time u2
TimedVertex place(const BrQuiver& q, int a, int m, int u2) {
  const int r = q.config().r;
  if (a == r) return {q.index(r, m), u2};
  const int u = u2 / 2;
  const int i = mod(r + a + m + u, 2) == 1 ? a : 2 * r - a;
  return {q.index(i, m), u2};
}

SystemIndex unplace(const BrQuiver& q, const TimedVertex& p) {
  const int r = q.config().r;
  const auto& v = q.vertex(p.vertex);
  if (parity_p(q, p.vertex, p.u2) != Parity::p_plus) throw std::invalid_argument("not a p+ mutation point");
  if (v.i == r) return {r, v.ip, p.u2};
  const int a = std::min(v.i, 2 * r - v.i);
  const SystemIndex s{a, v.ip, p.u2};
  if (place(q, a, v.ip, p.u2).vertex != p.vertex) throw std::logic_error("labeling parity mismatch");
  return s;
}

}  // namespace

TimedVertex g_map(const BrQuiver& q, const SystemIndex& s) {
  const auto& cfg = q.config();
  if (!parity_P_plus(cfg, s)) throw std::invalid_argument("g is defined on I_{l+} only: " + to_string(s));
  const TimedVertex p = place(q, s.a, s.m, s.u2 + 2 / cfg.t(s.a));
  if (parity_p(q, p.vertex, p.u2) != Parity::p_plus) throw std::logic_error("g image is not a p+ point");
  return p;
}

TimedVertex g_prime_map(const BrQuiver& q, const SystemIndex& s) {
  const auto& cfg = q.config();
  if (!parity_Pprime_plus(cfg, s)) throw std::invalid_argument("g' is defined on I'_{l+} only: " + to_string(s));
  const TimedVertex p = place(q, s.a, s.m, s.u2);
  if (parity_p(q, p.vertex, p.u2) != Parity::p_plus) throw std::logic_error("g' image is not a p+ point");
  return p;
}

SystemIndex g_inverse(const BrQuiver& q, const TimedVertex& p) {
  SystemIndex s = unplace(q, p);
  s.u2 -= 2 / q.config().t(s.a);
  if (!parity_P_plus(q.config(), s)) throw std::logic_error("g inverse leaves I_{l+}");
  return s;
}

SystemIndex g_prime_inverse(const BrQuiver& q, const TimedVertex& p) {
  SystemIndex s = unplace(q, p);
  if (!parity_Pprime_plus(q.config(), s)) throw std::logic_error("g' inverse leaves I'_{l+}");
  return s;
}

std::vector<std::pair<SystemIndex, int>> G_terms(const BrConfig& cfg, const SystemIndex& c) {
  const int r = cfg.r, l = cfg.l;
  std::vector<std::pair<SystemIndex, int>> out;
  auto push = [&](int b, int k, int v2) {
    if (b < 1 || k < 1 || k > cfg.t(b) * l - 1) return;
    out.push_back({{b, k, v2}, 1});
  };
  if (c.a <= r - 2) {
    push(c.a - 1, c.m, c.u2);
    push(c.a + 1, c.m, c.u2);
  } else if (c.a == r - 1) {
    push(r - 2, c.m, c.u2);
    push(r, 2 * c.m, c.u2);
  } else if (c.m % 2 == 0) {
    push(r - 1, c.m / 2, c.u2 - 1);
    push(r - 1, c.m / 2, c.u2 + 1);
  } else {
    push(r - 1, (c.m - 1) / 2, c.u2);
    push(r - 1, (c.m + 1) / 2, c.u2);
  }
  return out;
}

int G_exponent(const BrConfig& cfg, const SystemIndex& bkv, const SystemIndex& center) {
  for (const auto& [s, e] : G_terms(cfg, center))
    if (s == bkv) return e;
  return 0;
}

std::vector<SystemIndex> enumerate_index_set(const BrConfig& cfg, int u2_from, int u2_to) {
  std::vector<SystemIndex> out;
  for (int u2 = u2_from; u2 < u2_to; ++u2)
    for (int a = 1; a <= cfg.r; ++a)
      for (int m = 1; m <= cfg.t(a) * cfg.l - 1; ++m) {
        const SystemIndex s{a, m, u2};
        if (in_index_set(cfg, s)) out.push_back(s);
      }
  return out;
}

}  // namespace brlab
