#include "brlab/root_systems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "brlab/checked.hpp"
#include "brlab/tropical_lab.hpp"

namespace brlab {

AlmostPositiveRoot::AlmostPositiveRoot(std::vector<int> coeffs) : c_(std::move(coeffs)) {
  int lo = 0, hi = 0, negatives = 0;
  for (int i = 1; i <= rank(); ++i) {
    const int v = c_[i - 1];
    if (v == 0) continue;
    if (v == -1) ++negatives;
    else if (v != 1) throw std::invalid_argument("not an almost positive root of type A");
    if (!lo) lo = i;
    if (hi && hi != i - 1) throw std::invalid_argument("support of a root of type A must be an interval");
    hi = i;
  }
  if (!lo) throw std::invalid_argument("zero vector is not a root");
  if (negatives && (negatives != 1 || lo != hi)) throw std::invalid_argument("negative roots must be negative simple roots");
  lo_ = lo;
  hi_ = hi;
}

AlmostPositiveRoot AlmostPositiveRoot::simple(int n, int i) { return interval(n, i, i); }

AlmostPositiveRoot AlmostPositiveRoot::negative_simple(int n, int i) {
  std::vector<int> c(n, 0);
  c.at(i - 1) = -1;
  return AlmostPositiveRoot(std::move(c));
}

AlmostPositiveRoot AlmostPositiveRoot::interval(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("bad interval");
  std::vector<int> c(n, 0);
  for (int k = i; k <= j; ++k) c[k - 1] = 1;
  return AlmostPositiveRoot(std::move(c));
}

std::string AlmostPositiveRoot::to_string() const {
  if (!is_positive()) return "-a" + std::to_string(lo_);
  if (lo_ == hi_) return "[" + std::to_string(lo_) + "]";
  return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

std::vector<AlmostPositiveRoot> positive_roots(int n) {
  std::vector<AlmostPositiveRoot> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(AlmostPositiveRoot::interval(n, i, j));
  return out;
}

std::vector<int> reflect(const std::vector<int>& v, int i) {
  const int n = static_cast<int>(v.size());
  const int left = i > 1 ? v[i - 2] : 0;
  const int right = i < n ? v[i] : 0;
  std::vector<int> out = v;
  out[i - 1] = left + right - v[i - 1];
  return out;
}

AlmostPositiveRoot sigma_i(const AlmostPositiveRoot& a, int i) {
  if (i < 1 || i > a.rank()) throw std::out_of_range("reflection index out of range");
  if (!a.is_positive()) return a.support().first == i ? AlmostPositiveRoot::simple(a.rank(), i) : a;
  return AlmostPositiveRoot(reflect(a.coeffs(), i));
}

bool in_J_plus(int r, int i) {
  if (i < 1 || i > 2 * r - 1 || i == r) throw std::out_of_range("vertex outside J");
  return i < r ? (r - i) % 2 == 0 : (i - r) % 2 == 1;
}

BipartiteSplit root_signs(int r) {
  BipartiteSplit s;
  for (int i = 1; i <= 2 * r - 1; ++i)
    if (i != r) (in_J_plus(r, i) ? s.plus : s.minus).push_back(i);
  return s;
}

AlmostPositiveRoot sigma(int r, const AlmostPositiveRoot& a) {
  if (a.rank() != 2 * r - 1) throw std::invalid_argument("root rank must be 2r-1");
  const auto js = root_signs(r);
  AlmostPositiveRoot b = a;
  for (int i : js.plus) b = sigma_i(b, i);
  b = sigma_i(b, r);
  for (int i : js.minus) b = sigma_i(b, i);
  return sigma_i(b, r);
}

AlmostPositiveRoot sigma_pow(int r, const AlmostPositiveRoot& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of sigma");
  AlmostPositiveRoot b = a;
  for (int t = 0; t < k; ++t) b = sigma(r, b);
  return b;
}

std::vector<Orbit> orbit_table(int r) {
  const int n = 2 * r - 1;
  std::vector<Orbit> rows;
  for (int i = 1; i <= n; ++i) {
    Orbit o;
    o.row = i;
    if (i == r) {
      o.label = std::to_string(i);
      o.entries.push_back(AlmostPositiveRoot::negative_simple(n, r));
      AlmostPositiveRoot up = AlmostPositiveRoot::simple(n, r), down = AlmostPositiveRoot::negative_simple(n, r);
      for (int k = 0; k < r; ++k) {
        o.entries.push_back(up);
        down = sigma(r, down);
        o.entries.push_back(down);
        up = sigma(r, up);
      }
      o.entries.push_back(up);
    } else {
      o.label = std::to_string(i) + (in_J_plus(r, i) ? " +" : " -");
      AlmostPositiveRoot a = AlmostPositiveRoot::negative_simple(n, i);
      o.entries.push_back(a);
      const int len = in_J_plus(r, i) ? r : r + 1;
      for (int k = 0; k < len; ++k) {
        a = sigma(r, a);
        o.entries.push_back(a);
      }
    }
    rows.push_back(std::move(o));
  }
  return rows;
}

std::string orbit_table_text(int r) {
  std::ostringstream os;
  os << "u";
  for (int k = 1; k <= 2 * r - 1; ++k) os << " -" << k;
  os << "\n";
  for (const auto& o : orbit_table(r)) {
    os << o.label << ":";
    for (std::size_t t = 0; t < o.entries.size(); ++t) {
      // the middle row ends on sigma^r(a_r) = a_r, printed as a simple root
      if (o.row == r && t + 1 == o.entries.size()) os << " a" << r;
      else os << " " << o.entries[t].to_string();
    }
    os << "\n";
  }
  return os.str();
}

CheckRecord check_orbit_decomposition(int r) {
  return timed_check("sigma orbit decomposition", {{"r", r}}, [&](nlohmann::json& d) {
    const int n = 2 * r - 1;
    std::map<AlmostPositiveRoot, int> seen;
    long bad_shape = 0;
    for (const auto& o : orbit_table(r)) {
      const auto& e = o.entries;
      if (o.row == r) {
        // -a_r, then sigma^k(a_r), sigma^{k+1}(-a_r) for k < r, then sigma^r(a_r)
        for (std::size_t t = 1; t + 2 < e.size(); ++t) {
          if (!e[t].is_positive()) ++bad_shape;
          ++seen[e[t]];
        }
        if (!(e[e.size() - 2] == AlmostPositiveRoot::negative_simple(n, r))) ++bad_shape;
        if (!(e.back() == AlmostPositiveRoot::simple(n, r))) ++bad_shape;
      } else {
        for (std::size_t t = 1; t + 1 < e.size(); ++t) {
          if (!e[t].is_positive()) ++bad_shape;
          ++seen[e[t]];
        }
        if (!(e.back() == AlmostPositiveRoot::negative_simple(n, 2 * r - o.row))) ++bad_shape;
      }
    }
    long repeated = 0;
    for (const auto& [a, c] : seen)
      if (c > 1) ++repeated;
    const long total = static_cast<long>(positive_roots(n).size());
    d["positive_roots"] = total;
    d["distinct_in_orbits"] = static_cast<long>(seen.size());
    d["repeated"] = repeated;
    d["shape_violations"] = bad_shape;
    return bad_shape == 0 && repeated == 0 && static_cast<long>(seen.size()) == total && total == r * (2L * r - 1);
  });
}

std::optional<AlmostPositiveRoot> alpha_of(int r, int i, int u2) {
  const int n = 2 * r - 1;
  if (i < 1 || i > n || u2 >= 0 || u2 < -2 * (2 * r - 1)) return std::nullopt;
  const int c = mod(u2, 4);
  if (i == r) {
    if (c == 1) return sigma_pow(r, AlmostPositiveRoot::negative_simple(n, r), (1 - u2) / 4);
    if (c == 3) return sigma_pow(r, AlmostPositiveRoot::simple(n, r), -(u2 + 1) / 4);
    return std::nullopt;
  }
  if (in_J_plus(r, i) && c == 0) return sigma_pow(r, AlmostPositiveRoot::negative_simple(n, i), -u2 / 4);
  if (!in_J_plus(r, i) && c == 2) return sigma_pow(r, AlmostPositiveRoot::negative_simple(n, i), (2 - u2) / 4);
  return std::nullopt;
}

namespace {

int shrink_index(int r, int k) { return k < r ? k : k - 1; }
int grow_index(int r, int k) { return k < r ? k : k + 1; }

}  // namespace

std::vector<AlmostPositiveRoot> rho_domain(int r) {
  std::set<AlmostPositiveRoot> dom;
  for (const auto& o : orbit_table(r)) {
    if (o.row == r) continue;
    for (std::size_t t = 1; t + 1 < o.entries.size(); ++t) dom.insert(o.entries[t]);
  }
  return {dom.begin(), dom.end()};
}

AlmostPositiveRoot rho(int r, const AlmostPositiveRoot& a) {
  if (!a.is_positive() || a.rank() != 2 * r - 1) throw std::invalid_argument("rho expects a positive root of A_{2r-1}");
  std::vector<int> c(2 * r - 2, 0);
  for (int k = 1; k <= 2 * r - 1; ++k)
    if (k != r) c[shrink_index(r, k) - 1] = a.coeff(k);
  const auto dom = rho_domain(r);
  if (!std::binary_search(dom.begin(), dom.end(), a)) throw std::invalid_argument("root outside the domain of rho: " + a.to_string());
  return AlmostPositiveRoot(std::move(c));
}

AlmostPositiveRoot rho_inverse(int r, const AlmostPositiveRoot& a) {
  if (!a.is_positive() || a.rank() != 2 * r - 2) throw std::invalid_argument("rho_inverse expects a positive root of A_{2r-2}");
  std::vector<int> c(2 * r - 1, 0);
  for (int k = 1; k <= 2 * r - 2; ++k) c[grow_index(r, k) - 1] = a.coeff(k);
  if (a.coeff(r - 1) != 0) c[r - 1] = 1;
  return AlmostPositiveRoot(std::move(c));
}

std::vector<int> coxeter_s(int r, const std::vector<int>& v) {
  const auto js = root_signs(r);
  std::vector<int> w = v;
  for (int i : js.plus) w = reflect(w, shrink_index(r, i));
  for (int i : js.minus) w = reflect(w, shrink_index(r, i));
  return w;
}

CheckRecord check_rho(int r) {
  return timed_check("rho bijection and Coxeter conjugacy", {{"r", r}}, [&](nlohmann::json& d) {
    const auto dom = rho_domain(r);
    std::set<AlmostPositiveRoot> image;
    long inverse_failed = 0, conj_checked = 0, conj_failed = 0;
    const std::set<AlmostPositiveRoot> dom_set(dom.begin(), dom.end());
    for (const auto& a : dom) {
      const auto p = rho(r, a);
      image.insert(p);
      if (!(rho_inverse(r, p) == a)) ++inverse_failed;
      const auto next = sigma(r, a);
      if (!dom_set.count(next)) continue;
      ++conj_checked;
      if (rho(r, next).coeffs() != coxeter_s(r, p.coeffs())) ++conj_failed;
    }
    const long target = static_cast<long>(positive_roots(2 * r - 2).size());
    d["domain"] = static_cast<long>(dom.size());
    d["image"] = static_cast<long>(image.size());
    d["positive_roots_A2r-2"] = target;
    d["inverse_failed"] = inverse_failed;
    d["conjugacy_checked"] = conj_checked;
    d["conjugacy_failed"] = conj_failed;
    return static_cast<long>(dom.size()) == target && static_cast<long>(image.size()) == target && inverse_failed == 0 &&
           conj_checked > 0 && conj_failed == 0;
  });
}

namespace {

using Vec = std::vector<int>;
using Family = std::function<std::optional<Vec>(int i, int u2)>;

Vec add(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// Checks the five-line recurrence system; `middle_uses_r` selects the t-form of the
// r-1 and r+1 lines (t_r(u -+ 1/2) instead of alpha_{r+-1}(u)).
std::pair<long, long> check_recurrences(int r, const Family& f, bool middle_uses_r) {
  const int n = 2 * r - 1;
  auto at = [&](int i, int u2) -> std::optional<Vec> {
    if (i == 0 || i == 2 * r) return Vec(n, 0);
    return f(i, u2);
  };
  long checked = 0, failed = 0;
  auto test = [&](std::initializer_list<std::pair<int, int>> lhs, std::initializer_list<std::pair<int, int>> rhs) {
    Vec a(n, 0), b(n, 0);
    for (auto [i, u2] : lhs) {
      auto v = at(i, u2);
      if (!v) return;
      a = add(a, *v);
    }
    for (auto [i, u2] : rhs) {
      auto v = at(i, u2);
      if (!v) return;
      b = add(b, *v);
    }
    ++checked;
    if (a != b) ++failed;
  };
  for (int u2 = -2 * n - 2; u2 <= 2; ++u2) {
    for (int i = 1; i <= n; ++i) {
      if (i == r - 1 || i == r || i == r + 1) continue;
      test({{i, u2 - 2}, {i, u2 + 2}}, {{i - 1, u2}, {i + 1, u2}});
    }
    if (middle_uses_r) {
      test({{r - 1, u2 - 2}, {r - 1, u2 + 2}}, {{r - 2, u2}, {r, u2 - 1}, {r, u2 + 1}});
      test({{r + 1, u2 - 2}, {r + 1, u2 + 2}}, {{r + 2, u2}, {r, u2 - 1}, {r, u2 + 1}});
    } else {
      test({{r - 1, u2 - 2}, {r - 1, u2 + 2}}, {{r - 2, u2}, {r + 1, u2}});
      test({{r + 1, u2 - 2}, {r + 1, u2 + 2}}, {{r - 1, u2}, {r + 2, u2}});
    }
    if (mod(u2, 2) == 0) {
      const int side = mod(u2 / 2, 2) == 1 ? r - 1 : r + 1;
      test({{r, u2 - 1}, {r, u2 + 1}}, {{side, u2}});
    }
  }
  return {checked, failed};
}

}  // namespace

CheckRecord check_alpha_recurrences(int r) {
  return timed_check("alpha recurrences", {{"r", r}}, [&](nlohmann::json& d) {
    const auto [checked, failed] = check_recurrences(
        r,
        [&](int i, int u2) -> std::optional<Vec> {
          auto a = alpha_of(r, i, u2);
          if (!a) return std::nullopt;
          return a->coeffs();
        },
        false);
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  });
}

Report check_tvec_correspondence(int r) {
  const BrConfig cfg{r, 2};
  const auto q = build_quiver_B(cfg);
  const int n = 2 * r - 1;
  const int from = -2 * cfg.hv();
  const auto trace = run_tropical(q, from, 0);
  // pi_A: keep y_{i1} (i != r) and y_{r2}
  std::vector<int> keep;
  for (int i = 1; i <= n; ++i) keep.push_back(q.index(i, i == r ? 2 : 1));
  auto t_vec = [&](int idx, int u2) {
    const auto& m = trace.at(idx, u2);
    Vec v(n);
    for (int k = 0; k < n; ++k) v[k] = static_cast<int>(m.e[keep[k]]);
    return v;
  };
  auto t_of = [&](int i, int u2) { return t_vec(keep[i - 1], u2); };
  const nlohmann::json params{{"r", r}, {"l", 2}};
  Report rep;
  rep.add(timed_check("t-vectors equal minus alpha", params, [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (int u2 = from; u2 < 0; ++u2)
      for (int i = 1; i <= n; ++i) {
        const auto a = alpha_of(r, i, u2);
        if (!a) continue;
        ++checked;
        Vec neg = a->coeffs();
        for (auto& x : neg) x = -x;
        if (t_of(i, u2) != neg) ++failed;
      }
    d["checked"] = checked;
    d["failed"] = failed;
    return checked == r * (2L * r - 1) && failed == 0;
  }));
  rep.add(timed_check("pi_A trivial on y_r1, y_r3 at even u", params, [&](nlohmann::json& d) {
    long checked = 0, failed = 0;
    for (int u2 = from; u2 < 0; u2 += 4)
      for (int ip : {1, 3}) {
        ++checked;
        if (t_vec(q.index(r, ip), u2) != Vec(n, 0)) ++failed;
      }
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));
  rep.add(timed_check("t recurrences", params, [&](nlohmann::json& d) {
    const auto [checked, failed] = check_recurrences(
        r,
        [&](int i, int u2) -> std::optional<Vec> {
          if (!alpha_of(r, i, u2)) return std::nullopt;
          return t_of(i, u2);
        },
        true);
    d["checked"] = checked;
    d["failed"] = failed;
    return checked > 0 && failed == 0;
  }));
  rep.add(timed_check("t endpoint at u = -h^v", params, [&](nlohmann::json& d) {
    long failed = 0;
    for (int i = 1; i <= n; ++i) {
      Vec want(n, 0);
      want[2 * r - i - 1] = -1;
      if (t_of(i, from) != want) ++failed;
    }
    d["checked"] = n;
    d["failed"] = failed;
    return failed == 0;
  }));
  return rep;
}

Report check_roots(int r) {
  Report rep;
  rep.add(check_orbit_decomposition(r));
  rep.add(check_rho(r));
  rep.add(check_alpha_recurrences(r));
  rep.merge(check_tvec_correspondence(r));
  return rep;
}

}  // namespace brlab
