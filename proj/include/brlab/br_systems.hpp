#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "brlab/quiver.hpp"
#include "brlab/seed.hpp"
#include "brlab/skew_matrix.hpp"

namespace brlab {

struct BrConfig {
  int r = 2;
  int l = 2;

  int h() const { return 2 * r; }
  int hv() const { return 2 * r - 1; }
  int t(int a) const { return a == r ? 2 : 1; }
  // h^v + l; the half period
  int period() const { return hv() + l; }
  // throws std::invalid_argument unless r, l >= 2
  void validate() const;
  std::string name() const { return "B" + std::to_string(r) + ",l=" + std::to_string(l); }
};

// Vertex (i, i') of Q_l(B_r); columns 1..2r-1, rows 1..H(i).
struct BrVertex {
  int i = 0;
  int ip = 0;
  auto operator<=>(const BrVertex&) const = default;
};

class BrQuiver {
 public:
  explicit BrQuiver(const BrConfig& cfg);

  const BrConfig& config() const { return cfg_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<BrVertex>& vertices() const { return verts_; }
  const BrVertex& vertex(int idx) const { return verts_.at(idx); }
  int height(int i) const;
  bool contains(int i, int ip) const;
  int index(int i, int ip) const;
  int index(const BrVertex& v) const { return index(v.i, v.ip); }

  Color color(int idx) const { return vertex(idx).i == cfg_.r ? Color::filled : Color::open; }
  Sign sign(int idx) const;

  const SkewMatrix& matrix() const { return b_; }
  Quiver quiver() const;
  std::vector<std::string> labels() const;

  // left-right reflection (i,i') -> (2r-i, i')
  std::vector<int> reflection() const;
  // 180 degree rotation (i,i') -> (2r-i, H(i)+1-i')
  std::vector<int> rotation() const;

 private:
  BrConfig cfg_;
  std::vector<BrVertex> verts_;
  std::vector<int> col_start_;
  SkewMatrix b_;
};

// Builds Q_l(B_r) and runs the 4-step schedule self-check; throws std::logic_error if it fails.
BrQuiver build_quiver_B(const BrConfig& cfg);

// True when the four batches starting at u = 0 produce -B, r(B), -r(B), B in turn.
bool schedule_cycle_holds(const BrQuiver& q);

enum class Parity { p_plus, p_minus, none };
std::string parity_name(Parity p);

// Mutation-point parity of (vertex, u) with u = u2/2.
Parity parity_p(const BrQuiver& q, int idx, int u2);

// Vertices with parity p_plus at u2: the batch mutated when stepping u2 -> u2+1.
std::vector<int> mutation_batch(const BrQuiver& q, int u2);

// Exchange matrix expected at time u2: B, -B, r(B), -r(B) for 2u = 0, 1, 2, 3 mod 4.
SkewMatrix expected_matrix(const BrQuiver& q, int u2);

enum class Direction { forward, backward };

// Batch applied by one step from u2 in the given direction.
std::vector<int> step_batch(const BrQuiver& q, int u2, Direction d);

// Mutations inside a batch commute when the batch vertices are pairwise unlinked.
bool batch_commutes(const SkewMatrix& b, const std::vector<int>& batch);

// One schedule step on a seed; checks B(u) before and after.
template <class SF>
void schedule_step(const BrQuiver& q, Seed<SF>& s, int& u2, Direction d) {
  if (!(s.B == expected_matrix(q, u2))) throw std::logic_error("exchange matrix off schedule at 2u=" + std::to_string(u2));
  const auto batch = step_batch(q, u2, d);
  if (!batch_commutes(s.B, batch)) throw std::logic_error("mutation batch does not commute");
  for (int k : batch) s = mutate_seed(s, k);
  u2 += d == Direction::forward ? 1 : -1;
  if (!(s.B == expected_matrix(q, u2))) throw std::logic_error("exchange matrix off schedule at 2u=" + std::to_string(u2));
}

// Walks a state from u2 = 0 backward to u2_from and forward to u2_to.
// `mutate(state, k)` applies one mutation; `matrix(state)` returns the current B;
// `visit(u2, state)` is called once per time point (before mutating there).
template <class State, class Mutate, class Matrix, class Visit>
void walk_schedule(const BrQuiver& q, const State& initial, int u2_from, int u2_to, Mutate&& mutate, Matrix&& matrix,
                   Visit&& visit) {
  if (u2_from > 0 || u2_to < 0) throw std::invalid_argument("walk window must contain u = 0");
  auto run = [&](Direction d, int end) {
    State s = initial;
    int u2 = 0;
    while (true) {
      if (!(matrix(s) == expected_matrix(q, u2)))
        throw std::logic_error("exchange matrix off schedule at 2u=" + std::to_string(u2));
      if (d == Direction::forward || u2 != 0) visit(u2, s);
      if (u2 == end) break;
      const auto batch = step_batch(q, u2, d);
      if (!batch_commutes(matrix(s), batch)) throw std::logic_error("mutation batch does not commute");
      for (int k : batch) mutate(s, k);
      u2 += d == Direction::forward ? 1 : -1;
    }
  };
  run(Direction::backward, u2_from);
  run(Direction::forward, u2_to);
}

// ---- index set I_l and the labelings g, g' ----

struct SystemIndex {
  int a = 0;
  int m = 0;
  int u2 = 0;
  auto operator<=>(const SystemIndex&) const = default;
};

std::string to_string(const SystemIndex& s);

bool in_index_set(const BrConfig& cfg, const SystemIndex& s);
bool parity_P_plus(const BrConfig& cfg, const SystemIndex& s);
bool parity_Pprime_plus(const BrConfig& cfg, const SystemIndex& s);

struct TimedVertex {
  int vertex = 0;  // index into BrQuiver::vertices()
  int u2 = 0;
  auto operator<=>(const TimedVertex&) const = default;
};

// g : I_{l+} -> {p_plus points}, (a,m,u-1/t_a) -> ((i,i'),u)
TimedVertex g_map(const BrQuiver& q, const SystemIndex& s);
// g': I'_{l+} -> {p_plus points}, (a,m,u) -> ((i,i'),u)
TimedVertex g_prime_map(const BrQuiver& q, const SystemIndex& s);
SystemIndex g_inverse(const BrQuiver& q, const TimedVertex& p);
SystemIndex g_prime_inverse(const BrQuiver& q, const TimedVertex& p);

// Pairs (b,k,v) with G(b,k,v; a,m,u) > 0, with their exponents. Terms at unit-boundary
// positions (k = 0 or k = t_b l) are dropped.
std::vector<std::pair<SystemIndex, int>> G_terms(const BrConfig& cfg, const SystemIndex& center);
int G_exponent(const BrConfig& cfg, const SystemIndex& bkv, const SystemIndex& center);

// All (a,m,u) in I_l with u2_from <= 2u < u2_to.
std::vector<SystemIndex> enumerate_index_set(const BrConfig& cfg, int u2_from, int u2_to);

}  // namespace brlab
