#include "brlab/simply_laced.hpp"

#include <random>
#include <stdexcept>

#include "brlab/random_point.hpp"
#include "brlab/seed.hpp"

namespace brlab {

DynkinDiagram DynkinDiagram::make(DynkinType type, int rank) {
  DynkinDiagram d;
  d.type = type;
  d.rank = rank;
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      d.h = rank + 1;
      for (int i = 0; i < rank; ++i) d.omega.push_back(rank - 1 - i);
      break;
    case DynkinType::D:
      if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      d.h = 2 * rank - 2;
      for (int i = 0; i < rank; ++i) d.omega.push_back(i);
      if (rank % 2 == 1) std::swap(d.omega[rank - 2], d.omega[rank - 1]);
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      // Bourbaki: 1-3-4-5-...-n with 2 attached to 4
      edges = {{0, 2}, {2, 3}, {1, 3}};
      for (int i = 3; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      d.h = rank == 6 ? 12 : rank == 7 ? 18 : 30;
      for (int i = 0; i < rank; ++i) d.omega.push_back(i);
      if (rank == 6) d.omega = {5, 1, 4, 3, 2, 0};
      break;
  }
  d.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) d.cartan[i][i] = 2;
  for (auto [i, j] : edges) d.cartan[i][j] = d.cartan[j][i] = -1;
  // 2-colouring from vertex 1; Dynkin diagrams are trees
  d.sign.assign(rank, 0);
  d.sign[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < rank; ++w)
      if (d.adjacent(v, w) && d.sign[w] == 0) {
        d.sign[w] = -d.sign[v];
        stack.push_back(w);
      }
  }
  return d;
}

DynkinDiagram DynkinDiagram::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad Dynkin diagram name: " + name);
  DynkinType t;
  switch (name[0]) {
    case 'A': t = DynkinType::A; break;
    case 'D': t = DynkinType::D; break;
    case 'E': t = DynkinType::E; break;
    default: throw std::invalid_argument("bad Dynkin diagram name: " + name);
  }
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(name.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Dynkin diagram name: " + name);
  }
  if (used != name.size() - 1) throw std::invalid_argument("bad Dynkin diagram name: " + name);
  return make(t, n);
}

std::string DynkinDiagram::name() const {
  const char c = type == DynkinType::A ? 'A' : type == DynkinType::D ? 'D' : 'E';
  return c + std::to_string(rank);
}

PairClass PairSystem::cls(int k) const {
  const auto [i, ip] = vertices.at(k);
  const bool a = X.sign[i] > 0, b = Xp.sign[ip] > 0;
  return a ? (b ? PairClass::pp : PairClass::pm) : (b ? PairClass::mp : PairClass::mm);
}

bool PairSystem::mutated_at(int k, int u) const {
  const auto c = cls(k);
  const bool even_class = c == PairClass::pp || c == PairClass::mm;
  return even_class == (u % 2 == 0);
}

SkewMatrix build_pair_matrix(const DynkinDiagram& X, const DynkinDiagram& Xp) {
  const int n = X.rank * Xp.rank;
  SkewMatrix b(n);
  auto cls = [&](int i, int ip) { return std::make_pair(X.sign[i], Xp.sign[ip]); };
  using C = std::pair<int, int>;
  const C pp{1, 1}, pm{1, -1}, mp{-1, 1}, mm{-1, -1};
  for (int i = 0; i < X.rank; ++i)
    for (int ip = 0; ip < Xp.rank; ++ip)
      for (int j = 0; j < X.rank; ++j)
        for (int jp = 0; jp < Xp.rank; ++jp) {
          const C ci = cls(i, ip), cj = cls(j, jp);
          const int di = ip == jp, d = i == j;
          std::int64_t v = 0;
          if ((ci == mp && cj == pp) || (ci == pm && cj == mm)) v = -X.cartan[i][j] * di;
          else if ((ci == pp && cj == mp) || (ci == mm && cj == pm)) v = X.cartan[i][j] * di;
          else if ((ci == pp && cj == pm) || (ci == mm && cj == mp)) v = -d * Xp.cartan[ip][jp];
          else if ((ci == pm && cj == pp) || (ci == mp && cj == mm)) v = d * Xp.cartan[ip][jp];
          if (v != 0) b.set(i * Xp.rank + ip, j * Xp.rank + jp, v);
        }
  if (!b.is_skew_symmetric()) throw std::logic_error("pair exchange matrix is not skew-symmetric");
  return b;
}

PairSystem build_pair(const DynkinDiagram& X, const DynkinDiagram& Xp) {
  PairSystem ps{X, Xp, {}, build_pair_matrix(X, Xp), {}, {}, {}};
  for (int i = 0; i < X.rank; ++i)
    for (int ip = 0; ip < Xp.rank; ++ip) ps.vertices.emplace_back(i, ip);
  for (int k = 0; k < ps.size(); ++k) {
    (ps.mutated_at(k, 0) ? ps.even_batch : ps.odd_batch).push_back(k);
    const auto [i, ip] = ps.vertices[k];
    ps.omega.push_back(ps.index(X.omega[i], Xp.omega[ip]));
  }
  return ps;
}

PairMode parse_pair_mode(const std::string& s) {
  if (s == "tropical") return PairMode::tropical;
  if (s == "laurent" || s == "trivial") return PairMode::laurent;
  if (s == "rational" || s == "positive_rational") return PairMode::rational;
  throw std::invalid_argument("unknown pair mode: " + s);
}

std::string pair_mode_name(PairMode m) {
  switch (m) {
    case PairMode::tropical: return "tropical";
    case PairMode::laurent: return "laurent";
    case PairMode::rational: return "rational";
  }
  return "?";
}

namespace {

// Seeds at u = 0..steps; mutates even_batch at even u and odd_batch at odd u.
template <class SF>
std::vector<Seed<SF>> pair_walk(const PairSystem& ps, Seed<SF> s, int steps) {
  std::vector<Seed<SF>> out;
  for (int u = 0; u <= steps; ++u) {
    if (!(s.B == (u % 2 == 0 ? ps.B : -ps.B))) throw std::logic_error("pair exchange matrix off schedule at u=" + std::to_string(u));
    out.push_back(s);
    if (u == steps) break;
    for (int k : u % 2 == 0 ? ps.even_batch : ps.odd_batch) {
      for (int j : u % 2 == 0 ? ps.even_batch : ps.odd_batch)
        if (s.B(k, j) != 0) throw std::logic_error("pair mutation batch does not commute");
      s = mutate_seed(s, k);
    }
  }
  return out;
}

std::vector<PosRational> random_pos(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PosRational> p;
  for (const auto& v : random_positive_point(n, rng)) p.emplace_back(v);
  return p;
}

// Y-relation at every center (k, u) where k is not mutated at u.
template <class SF>
std::pair<long, long> check_y2(const PairSystem& ps, const std::vector<Seed<SF>>& w) {
  long checked = 0, failed = 0;
  for (int u = 1; u + 1 < static_cast<int>(w.size()); ++u)
    for (int k = 0; k < ps.size(); ++k) {
      if (ps.mutated_at(k, u)) continue;
      const auto [i, ip] = ps.vertices[k];
      const auto lhs = SF::mul(w[u - 1].y[k], w[u + 1].y[k]);
      auto num = SF::one_like(lhs), den = SF::one_like(lhs);
      for (int j = 0; j < ps.X.rank; ++j)
        if (ps.X.adjacent(i, j)) num = SF::mul(num, SF::add(SF::one_like(lhs), w[u].y[ps.index(j, ip)]));
      for (int jp = 0; jp < ps.Xp.rank; ++jp)
        if (ps.Xp.adjacent(ip, jp)) den = SF::mul(den, SF::add(SF::one_like(lhs), SF::inv(w[u].y[ps.index(i, jp)])));
      ++checked;
      if (!(lhs == SF::mul(num, SF::inv(den)))) ++failed;
    }
  return {checked, failed};
}

// T-relation at every center (k, u) where k is mutated at u.
std::pair<long, long> check_t2(const PairSystem& ps, const std::vector<Seed<TrivialSF>>& w) {
  long checked = 0, failed = 0;
  const int n = ps.size();
  for (int u = 1; u + 1 < static_cast<int>(w.size()); ++u)
    for (int k = 0; k < n; ++k) {
      if (!ps.mutated_at(k, u)) continue;
      const auto [i, ip] = ps.vertices[k];
      LaurentPoly a = LaurentPoly::constant(n, 1), b = LaurentPoly::constant(n, 1);
      for (int j = 0; j < ps.X.rank; ++j)
        if (ps.X.adjacent(i, j)) a *= w[u].x[ps.index(j, ip)];
      for (int jp = 0; jp < ps.Xp.rank; ++jp)
        if (ps.Xp.adjacent(ip, jp)) b *= w[u].x[ps.index(i, jp)];
      ++checked;
      if (!(w[u - 1].x[k] * w[u + 1].x[k] == a + b)) ++failed;
    }
  return {checked, failed};
}

template <class SF>
bool tuples_equal(const Seed<SF>& a, const Seed<SF>& b, const std::vector<int>& perm) {
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (!(a.y[k] == b.y[perm[k]])) return false;
    if (!a.x.empty() && !(a.x[k] == b.x[perm[k]])) return false;
  }
  return true;
}

template <class SF>
Report periodicity(const PairSystem& ps, const std::vector<Seed<SF>>& w, const nlohmann::json& params) {
  const int P = ps.period();
  std::vector<int> id(ps.size());
  for (int k = 0; k < ps.size(); ++k) id[k] = k;
  Report rep;
  rep.add(timed_check("pair half periodicity", params, [&](nlohmann::json& d) {
    long failed = 0, checked = 0;
    for (int u = 0; u + P < static_cast<int>(w.size()); ++u) {
      ++checked;
      if (!tuples_equal(w[u + P], w[u], ps.omega)) ++failed;
    }
    d["shift_u"] = P;
    d["checked_times"] = checked;
    d["failed_times"] = failed;
    return checked > 0 && failed == 0;
  }));
  rep.add(timed_check("pair full periodicity", params, [&](nlohmann::json& d) {
    long failed = 0, checked = 0;
    for (int u = 0; u + 2 * P < static_cast<int>(w.size()); ++u) {
      ++checked;
      if (!tuples_equal(w[u + 2 * P], w[u], id) || !(w[u + 2 * P].B == w[u].B)) ++failed;
    }
    int first = -1;
    for (int u = 2; u < static_cast<int>(w.size()) && first < 0; u += 2)
      if (w[u].B == w[0].B && tuples_equal(w[u], w[0], id)) first = u;
    d["period_u"] = 2 * P;
    d["first_return_u"] = first;
    d["checked_times"] = checked;
    d["failed_times"] = failed;
    return checked > 0 && failed == 0 && first > 0 && (2 * P) % first == 0;
  }));
  return rep;
}

nlohmann::json pair_params(const PairSystem& ps, PairMode mode) {
  return {{"pair", ps.X.name() + ":" + ps.Xp.name()}, {"mode", pair_mode_name(mode)}};
}

}  // namespace

Report run_pair_systems(const PairSystem& ps, PairMode mode, std::uint64_t seed) {
  const int steps = 2 * ps.period() + 2;
  Report rep;
  const auto params = pair_params(ps, mode);
  rep.add(timed_check(mode == PairMode::laurent ? "pair T-system relations" : "pair Y-system relations", params,
                      [&](nlohmann::json& d) {
                        std::pair<long, long> cf;
                        if (mode == PairMode::laurent) {
                          cf = check_t2(ps, pair_walk(ps, trivial_seed(ps.B), steps));
                        } else if (mode == PairMode::rational) {
                          cf = check_y2(ps, pair_walk(ps, rational_seed(ps.B, random_pos(ps.size(), seed)), steps));
                        } else {
                          auto s0 = principal_seed(ps.B);
                          s0.x.clear();
                          cf = check_y2(ps, pair_walk(ps, s0, steps));
                        }
                        d["checked"] = cf.first;
                        d["failed"] = cf.second;
                        return cf.first > 0 && cf.second == 0;
                      }));
  return rep;
}

Report check_pair_periodicity(const PairSystem& ps, PairMode mode, std::uint64_t seed) {
  const int steps = 2 * ps.period() + 2;
  const auto params = pair_params(ps, mode);
  switch (mode) {
    case PairMode::laurent: return periodicity(ps, pair_walk(ps, trivial_seed(ps.B), steps), params);
    case PairMode::rational:
      return periodicity(ps, pair_walk(ps, rational_seed(ps.B, random_pos(ps.size(), seed)), steps), params);
    case PairMode::tropical: {
      auto s0 = principal_seed(ps.B);
      s0.x.clear();
      return periodicity(ps, pair_walk(ps, s0, steps), params);
    }
  }
  return {};
}

}  // namespace brlab
