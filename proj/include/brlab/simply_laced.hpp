#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brlab/report.hpp"
#include "brlab/skew_matrix.hpp"

namespace brlab {

enum class DynkinType { A, D, E };

struct DynkinDiagram {
  DynkinType type = DynkinType::A;
  int rank = 1;
  std::vector<std::vector<int>> cartan;
  std::vector<int> sign;   // +1 / -1, bipartite with vertex 1 in I_+
  int h = 2;               // Coxeter number
  std::vector<int> omega;  // Dynkin automorphism for A_n, D_n (n odd), E_6; identity otherwise

  // A_n (n >= 1), D_n (n >= 4), E_6..E_8 with Bourbaki labels; throws std::invalid_argument otherwise.
  static DynkinDiagram make(DynkinType type, int rank);
  // "A3", "D4", "E6"
  static DynkinDiagram parse(const std::string& name);
  std::string name() const;
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
};

enum class PairClass { pp, pm, mp, mm };

// Pair (X, X') on I x I' with the exchange matrix built from both Cartan matrices.
struct PairSystem {
  DynkinDiagram X, Xp;
  std::vector<std::pair<int, int>> vertices;  // (i, i'), 0-based, row-major in i
  SkewMatrix B;
  std::vector<int> even_batch;  // classes (++) and (--), mutated at even u
  std::vector<int> odd_batch;   // classes (+-) and (-+), mutated at odd u
  std::vector<int> omega;       // omega x omega'

  int size() const { return static_cast<int>(vertices.size()); }
  int index(int i, int ip) const { return i * Xp.rank + ip; }
  PairClass cls(int k) const;
  bool mutated_at(int k, int u) const;
  // h + h'
  int period() const { return X.h + Xp.h; }
  std::string name() const { return "(" + X.name() + "," + Xp.name() + ")"; }
};

SkewMatrix build_pair_matrix(const DynkinDiagram& X, const DynkinDiagram& Xp);
PairSystem build_pair(const DynkinDiagram& X, const DynkinDiagram& Xp);

enum class PairMode { tropical, laurent, rational };
PairMode parse_pair_mode(const std::string& s);
std::string pair_mode_name(PairMode m);

// Walks 0 <= u <= 2(h+h') + 2 in the given mode and checks the T- or Y-relations at every
// interior center; B(u) must alternate B, -B.
Report run_pair_systems(const PairSystem& ps, PairMode mode, std::uint64_t seed);

// Half periodicity with omega x omega' at h+h' and full periodicity 2(h+h'), at vertex level,
// in the given mode.
Report check_pair_periodicity(const PairSystem& ps, PairMode mode, std::uint64_t seed);

}  // namespace brlab
