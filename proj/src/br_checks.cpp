#include "brlab/br_checks.hpp"

#include <random>
#include <stdexcept>

#include "brlab/random_point.hpp"
#include "brlab/seed.hpp"

namespace brlab {

namespace {

bool at_unit_boundary(const BrConfig& cfg, const SystemIndex& s) {
  return s.a >= 1 && s.a <= cfg.r && (s.m == 0 || s.m == cfg.t(s.a) * cfg.l);
}

std::pair<int, int> time_window(const auto& values) {
  if (values.empty()) return {0, -1};
  int lo = values.begin()->first.u2, hi = lo;
  for (const auto& [s, v] : values) {
    lo = std::min(lo, s.u2);
    hi = std::max(hi, s.u2);
  }
  return {lo, hi};
}

// candidate centers (a,m,u) in the window satisfying the given parity predicate
template <class Pred>
std::vector<SystemIndex> centers(const BrConfig& cfg, int lo, int hi, Pred pred) {
  std::vector<SystemIndex> out;
  for (const auto& s : enumerate_index_set(cfg, lo, hi + 1))
    if (pred(cfg, s)) out.push_back(s);
  return out;
}

mpq_class eval_monomial(const TropMonomial& m, const std::vector<mpq_class>& p) {
  mpq_class v = 1;
  for (int i = 0; i < m.size(); ++i) {
    for (std::int64_t k = 0; k < m.e[i]; ++k) v *= p[i];
    for (std::int64_t k = 0; k < -m.e[i]; ++k) v /= p[i];
  }
  return v;
}

}  // namespace

bool TValues::has(const SystemIndex& s) const { return at_unit_boundary(cfg, s) || values.count(s) != 0; }

LaurentPoly TValues::at(const SystemIndex& s) const {
  if (at_unit_boundary(cfg, s)) {
    const int n = values.empty() ? 0 : values.begin()->second.nvars();
    return LaurentPoly::constant(n, 1);
  }
  auto it = values.find(s);
  if (it == values.end()) throw std::out_of_range("T value not computed: " + to_string(s));
  return it->second;
}

TValues compute_T(const BrQuiver& q, int u2_from, int u2_to) {
  TValues tv{q.config(), {}, false};
  const auto init = trivial_seed(q.matrix());
  const int full = 4 * q.config().period();
  walk_schedule(
      q, init, u2_from, u2_to, [](Seed<TrivialSF>& s, int k) { s = mutate_seed(s, k); },
      [](const Seed<TrivialSF>& s) -> const SkewMatrix& { return s.B; },
      [&](int u2, const Seed<TrivialSF>& s) {
        for (int k : mutation_batch(q, u2)) tv.values[g_inverse(q, {k, u2})] = s.x[k];
        if (u2 == full) tv.seed_returned = s.x == init.x && s.B == init.B;
      });
  return tv;
}

CheckRecord check_T_relations(const TValues& tv) {
  const auto& cfg = tv.cfg;
  return timed_check("T-system relations", {{"r", cfg.r}, {"l", cfg.l}}, [&](nlohmann::json& d) {
    const auto [lo, hi] = time_window(tv.values);
    long checked = 0, failed = 0;
    nlohmann::json first_failure;
    for (const auto& c : centers(cfg, lo, hi, parity_Pprime_plus)) {
      const int dt = 2 / cfg.t(c.a);
      const SystemIndex before{c.a, c.m, c.u2 - dt}, after{c.a, c.m, c.u2 + dt};
      const SystemIndex below{c.a, c.m - 1, c.u2}, above{c.a, c.m + 1, c.u2};
      const auto g = G_terms(cfg, c);
      bool ok = tv.has(before) && tv.has(after) && tv.has(below) && tv.has(above);
      for (const auto& [s, e] : g) ok = ok && tv.has(s);
      if (!ok) continue;
      LaurentPoly prod = tv.at(below) * tv.at(above);
      LaurentPoly gp = LaurentPoly::constant(prod.nvars(), 1);
      for (const auto& [s, e] : g) gp = gp * tv.at(s).pow(e);
      ++checked;
      if (!(tv.at(before) * tv.at(after) == prod + gp)) {
        if (failed++ == 0) first_failure = to_string(c);
      }
    }
    d["checked"] = checked;
    d["failed"] = failed;
    if (failed) d["first_failure"] = first_failure;
    return checked > 0 && failed == 0;
  });
}

Report check_T_periodicity(const BrConfig& cfg) {
  const auto q = build_quiver_B(cfg);
  const int P2 = 2 * cfg.period();
  TValues tv = compute_T(q, 0, 2 * P2 + 2);
  Report rep;
  const nlohmann::json params{{"r", cfg.r}, {"l", cfg.l}};
  rep.add(check_T_relations(tv));
  rep.add(timed_check("T half periodicity", params, [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (const auto& [s, v] : tv.values) {
      const SystemIndex later{s.a, s.m, s.u2 + P2};
      const SystemIndex flipped{s.a, cfg.t(s.a) * cfg.l - s.m, s.u2};
      if (!tv.values.count(later)) continue;
      ++checked;
      if (!(tv.values.at(later) == tv.at(flipped))) ++failed;
    }
    d["shift_u"] = cfg.period();
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));
  rep.add(timed_check("T full periodicity", params, [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (const auto& [s, v] : tv.values) {
      const SystemIndex later{s.a, s.m, s.u2 + 2 * P2};
      if (!tv.values.count(later)) continue;
      ++checked;
      if (!(tv.values.at(later) == v)) ++failed;
    }
    d["shift_u"] = 2 * cfg.period();
    d["checked"] = checked;
    d["failed"] = failed;
    d["seed_returned"] = tv.seed_returned;
    return checked > 0 && failed == 0 && tv.seed_returned;
  }));
  return rep;
}

const mpq_class& YValues::at(const SystemIndex& s) const {
  auto it = values.find(s);
  if (it == values.end()) throw std::out_of_range("Y value not computed: " + to_string(s));
  return it->second;
}

YValues compute_Y(const BrQuiver& q, const std::vector<mpq_class>& y0, int u2_from, int u2_to) {
  std::vector<PosRational> init;
  for (const auto& v : y0) init.emplace_back(v);
  YValues yv{q.config(), {}};
  walk_schedule(
      q, rational_seed(q.matrix(), init), u2_from, u2_to,
      [](Seed<PositiveRationalSF>& s, int k) { s = mutate_seed(s, k); },
      [](const Seed<PositiveRationalSF>& s) -> const SkewMatrix& { return s.B; },
      [&](int u2, const Seed<PositiveRationalSF>& s) {
        for (int k : mutation_batch(q, u2)) yv.values[g_prime_inverse(q, {k, u2})] = s.y[k].value();
      });
  return yv;
}

namespace {

// Y relation at a center in I_{l+}; returns false if an ingredient is missing.
// `transposed` selects the product over G(a,m,u; b,k,v) instead of the case table.
bool y_relation(const YValues& yv, const SystemIndex& c, bool transposed, bool& holds) {
  const auto& cfg = yv.cfg;
  const int r = cfg.r;
  const int dt = 2 / cfg.t(c.a);
  const SystemIndex before{c.a, c.m, c.u2 - dt}, after{c.a, c.m, c.u2 + dt};
  if (!yv.has(before) || !yv.has(after)) return false;
  mpq_class num = 1, den = 1;
  bool ok = true;
  auto plus = [&](const SystemIndex& s) {
    if (!in_index_set(cfg, s)) return;  // Y^{(0)} = 0
    if (!yv.has(s)) {
      ok = false;
      return;
    }
    num *= 1 + yv.at(s);
  };
  auto plus_inv = [&](const SystemIndex& s) {
    if (!in_index_set(cfg, s)) return;  // Y_0^{-1} = Y_{t_a l}^{-1} = 0
    if (!yv.has(s)) {
      ok = false;
      return;
    }
    den *= 1 + 1 / yv.at(s);
  };
  plus_inv({c.a, c.m - 1, c.u2});
  plus_inv({c.a, c.m + 1, c.u2});
  if (transposed) {
    for (int b = c.a - 1; b <= c.a + 1; ++b)
      for (int v2 = c.u2 - 1; v2 <= c.u2 + 1; ++v2)
        for (int k = 1; b >= 1 && b <= r && k <= cfg.t(b) * cfg.l - 1; ++k) {
          const SystemIndex other{b, k, v2};
          if (!parity_Pprime_plus(cfg, other)) continue;
          const int e = G_exponent(cfg, c, other);
          for (int t = 0; t < e; ++t) plus(other);
        }
  } else if (c.a <= r - 2) {
    plus({c.a - 1, c.m, c.u2});
    plus({c.a + 1, c.m, c.u2});
  } else if (c.a == r - 1) {
    plus({r - 2, c.m, c.u2});
    plus({r, 2 * c.m - 1, c.u2});
    plus({r, 2 * c.m + 1, c.u2});
    plus({r, 2 * c.m, c.u2 - 1});
    plus({r, 2 * c.m, c.u2 + 1});
  } else if (c.m % 2 == 0) {
    plus({r - 1, c.m / 2, c.u2});
  }
  if (!ok) return false;
  holds = yv.at(before) * yv.at(after) == num / den;
  return true;
}

}  // namespace

CheckRecord check_Y_relations(const YValues& yv) {
  const auto& cfg = yv.cfg;
  return timed_check("Y-system relations", {{"r", cfg.r}, {"l", cfg.l}}, [&](nlohmann::json& d) {
    const auto [lo, hi] = time_window(yv.values);
    long checked = 0, failed = 0, checked_t = 0, failed_t = 0;
    for (const auto& c : centers(cfg, lo, hi, parity_P_plus)) {
      bool holds = false;
      if (y_relation(yv, c, false, holds)) {
        ++checked;
        if (!holds) ++failed;
      }
      if (y_relation(yv, c, true, holds)) {
        ++checked_t;
        if (!holds) ++failed_t;
      }
    }
    d["checked"] = checked;
    d["failed"] = failed;
    d["checked_transposed_G"] = checked_t;
    d["failed_transposed_G"] = failed_t;
    return checked > 0 && failed == 0 && checked_t > 0 && failed_t == 0;
  });
}

Report check_Y_periodicity(const BrConfig& cfg, const std::vector<mpq_class>& y0) {
  const auto q = build_quiver_B(cfg);
  const int P2 = 2 * cfg.period();
  const YValues yv = compute_Y(q, y0, 0, 2 * P2 + 2);
  Report rep;
  const nlohmann::json params{{"r", cfg.r}, {"l", cfg.l}};
  rep.add(check_Y_relations(yv));
  for (int mult : {1, 2}) {
    rep.add(timed_check(mult == 1 ? "Y half periodicity" : "Y full periodicity", params, [&](nlohmann::json& d) {
      long checked = 0, failed = 0;
      for (const auto& [s, v] : yv.values) {
        const SystemIndex later{s.a, s.m, s.u2 + mult * P2};
        const SystemIndex target{s.a, mult == 1 ? cfg.t(s.a) * cfg.l - s.m : s.m, s.u2};
        if (!yv.has(later)) continue;
        ++checked;
        if (yv.at(later) != yv.at(target)) ++failed;
      }
      d["shift_u"] = mult * cfg.period();
      d["checked"] = checked;
      d["failed"] = failed;
      return checked > 0 && failed == 0;
    }));
  }
  return rep;
}

LaurentPoly FData::f_at(const SystemIndex& s) const {
  if (at_unit_boundary(cfg, s)) {
    const int n = F.empty() ? 0 : F.begin()->second.nvars();
    return LaurentPoly::constant(n, 1);
  }
  auto it = F.find(s);
  if (it == F.end()) throw std::out_of_range("F-polynomial not computed: " + to_string(s));
  return it->second;
}

namespace {

struct FState {
  SkewMatrix B;
  std::vector<TropMonomial> y;
  std::vector<LaurentPoly> F;
  int fallbacks = 0;
};

}  // namespace

FData compute_F(const BrQuiver& q, int u2_from, int u2_to) {
  const int n = q.size();
  FState init{q.matrix(), {}, {}, 0};
  for (int i = 0; i < n; ++i) {
    init.y.push_back(TropMonomial::generator(n, i));
    init.F.push_back(LaurentPoly::constant(n, 1));
  }
  FData fd{q.config(), {}, {}, {}, 0};
  walk_schedule(
      q, init, u2_from, u2_to,
      [&](FState& s, int k) {
        s.F = mutate_f_polynomials(s.F, s.y, s.B, k);
        auto r = mutate_coeffs_tropical_fast(s.y, s.B, k);
        s.y = std::move(r.y);
        if (r.fell_back) ++fd.fallbacks;
        s.B = mutate_matrix(s.B, k);
      },
      [](const FState& s) -> const SkewMatrix& { return s.B; },
      [&](int u2, const FState& s) {
        fd.by_time[u2] = s.F;
        for (int k : mutation_batch(q, u2)) {
          fd.F[g_inverse(q, {k, u2})] = s.F[k];
          fd.ytrop[g_prime_inverse(q, {k, u2})] = s.y[k];
        }
      });
  return fd;
}

Report check_f_identities(const BrConfig& cfg, int points, std::uint64_t seed) {
  const auto q = build_quiver_B(cfg);
  const int n = q.size();
  const int P2 = 2 * cfg.period();
  const FData fd = compute_F(q, 0, 2 * P2 + 2);
  const nlohmann::json params{{"r", cfg.r}, {"l", cfg.l}};
  Report rep;

  rep.add(timed_check("F constant term 1", params, [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (const auto& [u2, fs] : fd.by_time)
      for (const auto& f : fs) {
        ++checked;
        try {
          make_f_polynomial(f);
        } catch (const std::logic_error&) {
          ++failed;
        }
      }
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));

  // centers in I'_{l+} whose ingredients are available
  struct Center {
    SystemIndex c, before, after, below, above;
    std::vector<std::pair<SystemIndex, int>> g;
  };
  std::vector<Center> cs;
  {
    const auto [lo, hi] = time_window(fd.F);
    for (const auto& c : centers(cfg, lo, hi, parity_Pprime_plus)) {
      const int dt = 2 / cfg.t(c.a);
      Center x{c, {c.a, c.m, c.u2 - dt}, {c.a, c.m, c.u2 + dt}, {c.a, c.m - 1, c.u2}, {c.a, c.m + 1, c.u2}, G_terms(cfg, c)};
      auto have = [&](const SystemIndex& s) { return at_unit_boundary(cfg, s) || fd.F.count(s); };
      bool ok = fd.ytrop.count(c) && have(x.before) && have(x.after) && have(x.below) && have(x.above);
      for (const auto& [s, e] : x.g) ok = ok && have(s);
      if (ok) cs.push_back(std::move(x));
    }
  }

  rep.add(timed_check("F1 polynomial identity", params, [&](nlohmann::json& d) {
    long failed = 0;
    for (const auto& x : cs) {
      const auto& c = fd.ytrop.at(x.c);
      LaurentPoly gp = embed_monomial(positive_part(c), n);
      for (const auto& [s, e] : x.g) gp = gp * fd.f_at(s).pow(e);
      const LaurentPoly rhs = gp + embed_monomial(negative_part(c), n) * fd.f_at(x.below) * fd.f_at(x.above);
      if (!(fd.f_at(x.before) * fd.f_at(x.after) == rhs)) ++failed;
    }
    d["checked"] = static_cast<long>(cs.size());
    d["failed"] = failed;
    return !cs.empty() && failed == 0;
  }));

  rep.add(timed_check("F2/F3 at random positive points", nlohmann::json{{"r", cfg.r}, {"l", cfg.l}, {"points", points}, {"seed", seed}},
                      [&](nlohmann::json& d) {
                        std::mt19937_64 rng(seed);
                        long failed2 = 0, failed3 = 0, checked = 0;
                        for (int p = 0; p < points; ++p) {
                          const auto pt = random_positive_point(n, rng);
                          const YValues yv = compute_Y(q, pt, 0, 2 * P2 + 2);
                          std::map<SystemIndex, mpq_class> fv;
                          auto F = [&](const SystemIndex& s) -> const mpq_class& {
                            auto it = fv.find(s);
                            if (it != fv.end()) return it->second;
                            return fv.emplace(s, fd.f_at(s).evaluate(pt)).first->second;
                          };
                          for (const auto& x : cs) {
                            if (!yv.has(x.c)) continue;
                            ++checked;
                            const auto& c = fd.ytrop.at(x.c);
                            mpq_class gp = 1;
                            for (const auto& [s, e] : x.g)
                              for (int t = 0; t < e; ++t) gp *= F(s);
                            const mpq_class nb = F(x.below) * F(x.above);
                            const mpq_class y = yv.at(x.c);
                            if (y != eval_monomial(c, pt) * gp / nb) ++failed2;
                            const mpq_class one_plus_trop = 1 / eval_monomial(negative_part(c), pt);
                            if (1 + y != one_plus_trop * F(x.before) * F(x.after) / nb) ++failed3;
                          }
                        }
                        d["checked"] = checked;
                        d["failed_F2"] = failed2;
                        d["failed_F3"] = failed3;
                        return checked > 0 && failed2 == 0 && failed3 == 0;
                      }));

  const auto rot = q.rotation();
  for (int mult : {1, 2}) {
    rep.add(timed_check(mult == 1 ? "F half periodicity" : "F full periodicity", params, [&](nlohmann::json& d) {
      long checked = 0, failed = 0;
      for (const auto& [u2, fs] : fd.by_time) {
        auto it = fd.by_time.find(u2 + mult * P2);
        if (it == fd.by_time.end()) continue;
        for (int i = 0; i < n; ++i) {
          ++checked;
          if (!(it->second[i] == fs[mult == 1 ? rot[i] : i])) ++failed;
        }
      }
      d["checked"] = checked;
      d["failed"] = failed;
      return checked > 0 && failed == 0;
    }));
  }
  return rep;
}

}  // namespace brlab
