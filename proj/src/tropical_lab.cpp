#include "brlab/tropical_lab.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "brlab/seed.hpp"

namespace brlab {

namespace {

constexpr std::int64_t kExponentBound = 64;

struct TropState {
  SkewMatrix B;
  std::vector<TropMonomial> y;
};

nlohmann::json cfg_params(const BrConfig& cfg) { return {{"r", cfg.r}, {"l", cfg.l}}; }

TropMonomial inverse_generator(int n, int idx) { return trop_inv(TropMonomial::generator(n, idx)); }

}  // namespace

const TropMonomial& TropicalTrace::at(int idx, int u2) const {
  auto it = y.find(u2);
  if (it == y.end()) throw std::out_of_range("time point outside trace: 2u=" + std::to_string(u2));
  return it->second.at(idx);
}

TropicalTrace run_tropical(const BrQuiver& q, int u2_from, int u2_to) {
  const int n = q.size();
  TropState init{q.matrix(), {}};
  for (int i = 0; i < n; ++i) init.y.push_back(TropMonomial::generator(n, i));
  TropicalTrace t{q.config(), u2_from, u2_to, {}, {}, 0};
  walk_schedule(
      q, init, std::min(u2_from, 0), std::max(u2_to, 0),
      [&](TropState& s, int k) {
        auto r = mutate_coeffs_tropical_fast(s.y, s.B, k);
        if (r.fell_back) ++t.fallbacks;
        s.y = std::move(r.y);
        s.B = mutate_matrix(s.B, k);
      },
      [](const TropState& s) -> const SkewMatrix& { return s.B; },
      [&](int u2, const TropState& s) {
        if (u2 < u2_from || u2 > u2_to) return;
        for (const auto& m : s.y)
          for (auto e : m.e)
            if (std::llabs(e) > kExponentBound) throw std::logic_error("tropical exponent out of bound");
        t.y[u2] = s.y;
        t.B.emplace(u2, s.B);
      });
  return t;
}

std::string trace_csv(const BrQuiver& q, const TropicalTrace& t) {
  std::ostringstream os;
  os << "i,ip,u2,parity,sign";
  for (const auto& v : q.vertices()) os << ",y_" << v.i << "_" << v.ip;
  os << "\n";
  // vertices are stored column-major, which is already (i, ip) order
  for (const auto& [u2, ys] : t.y)
    for (int k = 0; k < q.size(); ++k) {
      const auto& v = q.vertex(k);
      os << v.i << "," << v.ip << "," << u2 << "," << parity_name(parity_p(q, k, u2)) << ","
         << sign_name(classify_sign(ys[k])) << "," << ys[k].csv_row() << "\n";
    }
  return os.str();
}

Report check_sign_regions(const BrQuiver& q, const TropicalTrace& t) {
  const auto& cfg = q.config();
  Report rep;
  rep.add(timed_check("tropical positivity on 0 <= u < l", cfg_params(cfg), [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (int u2 = 0; u2 < 2 * cfg.l; ++u2)
      for (int k : mutation_batch(q, u2)) {
        ++checked;
        if (classify_sign(t.at(k, u2)) != SignClass::Positive) ++failed;
      }
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));
  rep.add(timed_check("tropical negativity on -h^v <= u < 0", cfg_params(cfg), [&](nlohmann::json& d) {
    long checked = 0, failed = 0, alternating = 0;
    for (int u2 = -2 * cfg.hv(); u2 < 0; ++u2)
      for (int k : mutation_batch(q, u2)) {
        ++checked;
        SignClass want = SignClass::Negative;
        if (q.color(k) == Color::filled && q.sign(k) == Sign::plus) {
          ++alternating;
          if (u2 % 2 != 0) {
            ++failed;
            continue;
          }
          want = (u2 / 2) % 2 == 0 ? SignClass::Positive : SignClass::Negative;
        }
        if (classify_sign(t.at(k, u2)) != want) ++failed;
      }
    d["checked"] = checked;
    d["filled_plus_points"] = alternating;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));
  return rep;
}

Report check_boundaries(const BrQuiver& q, const TropicalTrace& t) {
  const auto& cfg = q.config();
  const int n = q.size();
  Report rep;
  rep.add(timed_check("tropical boundary at u = l", cfg_params(cfg), [&](nlohmann::json& d) {
    long failed = 0;
    for (int k = 0; k < n; ++k) {
      const auto& v = q.vertex(k);
      const int flipped = q.index(v.i, q.height(v.i) + 1 - v.ip);
      if (!(t.at(k, 2 * cfg.l) == inverse_generator(n, flipped))) ++failed;
    }
    d["checked"] = n;
    d["failed"] = failed;
    return failed == 0;
  }));
  rep.add(timed_check("tropical boundary at u = -h^v", cfg_params(cfg), [&](nlohmann::json& d) {
    long failed = 0;
    const auto refl = q.reflection();
    for (int k = 0; k < n; ++k)
      if (!(t.at(k, -2 * cfg.hv()) == inverse_generator(n, refl[k]))) ++failed;
    d["checked"] = n;
    d["failed"] = failed;
    return failed == 0;
  }));
  return rep;
}

Report check_tropical_periodicity(const BrConfig& cfg) {
  const auto q = build_quiver_B(cfg);
  const int n = q.size();
  const int P2 = 2 * cfg.period();
  const auto t = run_tropical(q, 0, 2 * P2);
  const auto rot = q.rotation();
  Report rep;
  rep.add(timed_check("tropical half periodicity", cfg_params(cfg), [&](nlohmann::json& d) {
    long failed = 0, failed_b = 0;
    for (int u2 = 0; u2 <= P2; ++u2) {
      for (int k = 0; k < n; ++k)
        if (!(t.at(k, u2 + P2) == t.at(rot[k], u2))) ++failed;
      if (!(t.B.at(u2 + P2) == apply_vertex_map(t.B.at(u2), rot))) ++failed_b;
    }
    d["shift_u"] = cfg.period();
    d["checked"] = (P2 + 1) * n;
    d["failed"] = failed;
    d["matrix_failed"] = failed_b;
    return failed == 0 && failed_b == 0;
  }));
  rep.add(timed_check("tropical full periodicity", cfg_params(cfg), [&](nlohmann::json& d) {
    bool ok = t.B.at(2 * P2) == q.matrix();
    for (int k = 0; k < n; ++k) ok = ok && t.at(k, 2 * P2) == TropMonomial::generator(n, k);
    // no earlier return to the initial seed
    int first = -1;
    for (int u2 = 1; u2 <= 2 * P2 && first < 0; ++u2) {
      bool back = t.B.at(u2) == q.matrix();
      for (int k = 0; back && k < n; ++k) back = t.at(k, u2) == TropMonomial::generator(n, k);
      if (back) first = u2;
    }
    d["period_u"] = 2 * cfg.period();
    d["first_return_u2"] = first;
    return ok;
  }));
  return rep;
}

SignCounts count_signs(const BrQuiver& q, const TropicalTrace& t) {
  SignCounts c;
  const int P2 = 2 * q.config().period();
  for (int u2 = 0; u2 < 2 * P2; ++u2)
    for (int k : mutation_batch(q, u2)) {
      ++c.points;
      switch (classify_sign(t.at(k, u2))) {
        case SignClass::Positive: ++c.plus; break;
        case SignClass::Negative: ++c.minus; break;
        case SignClass::Mixed: ++c.mixed; break;
        case SignClass::One: ++c.one; break;
      }
    }
  return c;
}

CheckRecord check_sign_counts(const BrConfig& cfg) {
  return timed_check("tropical sign counts", cfg_params(cfg), [&](nlohmann::json& d) {
    const auto q = build_quiver_B(cfg);
    const int P2 = 2 * cfg.period();
    const auto t = run_tropical(q, 0, 2 * P2);
    const auto c = count_signs(q, t);
    const long r = cfg.r, l = cfg.l;
    const long want_plus = 2 * l * (l * r + l - 1);
    const long want_minus = 2 * r * (2 * l * r - 2 * r + 1);
    const long per_cell = r * l + l - r;
    const long index_points = static_cast<long>(enumerate_index_set(cfg, 0, 2 * P2).size());
    d["N_plus"] = c.plus;
    d["N_minus"] = c.minus;
    d["expected_N_plus"] = want_plus;
    d["expected_N_minus"] = want_minus;
    d["mixed"] = c.mixed;
    d["one"] = c.one;
    d["p_plus_points"] = c.points;
    d["expected_p_plus_points"] = P2 * per_cell;
    d["index_set_points"] = index_points;
    d["expected_index_set_points"] = 2 * P2 * per_cell;
    d["fallbacks"] = t.fallbacks;
    return c.plus == want_plus && c.minus == want_minus && c.mixed == 0 && c.one == 0 && c.points == P2 * per_cell &&
           index_points == 2 * P2 * per_cell;
  });
}

CheckRecord check_factorization(const BrConfig& cfg) {
  return timed_check("factorization into level-2 blocks", cfg_params(cfg), [&](nlohmann::json& d) {
    const auto q = build_quiver_B(cfg);
    const auto q2 = build_quiver_B({cfg.r, 2});
    const int from = -2 * cfg.hv();
    const auto t = run_tropical(q, from, 0);
    const auto t2 = run_tropical(q2, from, 0);
    long checked = 0, failed = 0;
    for (int u2 = from; u2 < 0; ++u2)
      for (int k2 = 0; k2 < q2.size(); ++k2) {
        const auto& m = t.at(q.index(q2.vertex(k2)), u2);
        const auto& m2 = t2.at(k2, u2);
        std::vector<std::int64_t> inside(q.size(), 0);
        bool ok = true;
        for (int j = 0; j < q2.size(); ++j) {
          const int k = q.index(q2.vertex(j));
          inside[k] = 1;
          ok = ok && m.e[k] == m2.e[j];
        }
        for (int k = 0; k < q.size(); ++k) ok = ok && (inside[k] || m.e[k] == 0);
        ++checked;
        if (!ok) ++failed;
      }
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  });
}

Report check_tropical(const BrConfig& cfg) {
  const auto q = build_quiver_B(cfg);
  const auto t = run_tropical(q, -2 * cfg.hv(), 2 * cfg.l);
  Report rep;
  rep.merge(check_sign_regions(q, t));
  rep.merge(check_boundaries(q, t));
  rep.merge(check_tropical_periodicity(cfg));
  rep.add(check_sign_counts(cfg));
  if (cfg.l > 2) rep.add(check_factorization(cfg));
  return rep;
}

}  // namespace brlab
