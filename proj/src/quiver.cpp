#include "brlab/quiver.hpp"

#include <stdexcept>

#include "brlab/checked.hpp"

namespace brlab {

Quiver::Quiver(std::vector<QuiverVertex> vertices) : vertices_(std::move(vertices)) {}

void Quiver::add_arrows(int i, int j, std::int64_t mult) {
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::out_of_range("invalid quiver vertex");
  if (i == j) throw std::invalid_argument("loops are not allowed");
  if (mult <= 0) throw std::invalid_argument("arrow multiplicity must be positive");
  if (multiplicity(j, i) != 0) throw std::invalid_argument("2-cycles are not allowed");
  auto& m = arrows_[{i, j}];
  m = checked_add(m, mult);
}

std::int64_t Quiver::multiplicity(int i, int j) const {
  auto it = arrows_.find({i, j});
  return it == arrows_.end() ? 0 : it->second;
}

SkewMatrix matrix_of(const Quiver& q) {
  SkewMatrix b(q.size());
  for (const auto& [ij, m] : q.arrows()) b.add(ij.first, ij.second, m);
  return b;
}

Quiver quiver_of(const SkewMatrix& b, std::vector<QuiverVertex> vertices) {
  if (vertices.empty())
    for (int i = 0; i < b.size(); ++i) vertices.push_back({std::to_string(i), {}});
  if (static_cast<int>(vertices.size()) != b.size()) throw std::invalid_argument("vertex count mismatch");
  Quiver q(std::move(vertices));
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (b(i, j) > 0) q.add_arrows(i, j, b(i, j));
  return q;
}

Quiver mutate_quiver(const Quiver& q, int k) {
  if (k < 0 || k >= q.size()) throw std::out_of_range("invalid quiver vertex");
  // net[(i,j)] with i<j holds signed multiplicity of i -> j
  std::map<std::pair<int, int>, std::int64_t> net;
  auto bump = [&](int i, int j, std::int64_t m) {
    if (i < j) {
      auto& v = net[{i, j}];
      v = checked_add(v, m);
    } else {
      auto& v = net[{j, i}];
      v = checked_sub(v, m);
    }
  };
  std::vector<std::pair<int, std::int64_t>> in, out;
  for (const auto& [ij, m] : q.arrows()) {
    if (ij.second == k) in.push_back({ij.first, m});
    if (ij.first == k) out.push_back({ij.second, m});
  }
  for (const auto& [ij, m] : q.arrows()) {
    if (ij.first == k || ij.second == k)
      bump(ij.second, ij.first, m);
    else
      bump(ij.first, ij.second, m);
  }
  for (const auto& [i, mi] : in)
    for (const auto& [j, mj] : out) bump(i, j, checked_mul(mi, mj));
  Quiver r(q.vertices_);
  for (const auto& [ij, m] : net) {
    if (m > 0) r.arrows_[ij] = m;
    if (m < 0) r.arrows_[{ij.second, ij.first}] = -m;
  }
  return r;
}

namespace {

std::string color_name(Color c) { return c == Color::open ? "open" : "filled"; }
std::string sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

}  // namespace

nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices()) {
    nlohmann::json jv{{"label", v.label}};
    if (v.deco.color) jv["color"] = color_name(*v.deco.color);
    if (v.deco.sign) jv["sign"] = sign_name(*v.deco.sign);
    j["vertices"].push_back(jv);
  }
  j["arrows"] = nlohmann::json::array();
  for (const auto& [ij, m] : q.arrows()) j["arrows"].push_back({{"from", ij.first}, {"to", ij.second}, {"mult", m}});
  return j;
}

Quiver quiver_from_json(const nlohmann::json& j) {
  std::vector<QuiverVertex> vs;
  for (const auto& jv : j.at("vertices")) {
    QuiverVertex v{jv.at("label").get<std::string>(), {}};
    if (jv.contains("color")) {
      const auto c = jv["color"].get<std::string>();
      if (c != "open" && c != "filled") throw std::invalid_argument("unknown color " + c);
      v.deco.color = c == "open" ? Color::open : Color::filled;
    }
    if (jv.contains("sign")) {
      const auto s = jv["sign"].get<std::string>();
      if (s != "plus" && s != "minus") throw std::invalid_argument("unknown sign " + s);
      v.deco.sign = s == "plus" ? Sign::plus : Sign::minus;
    }
    vs.push_back(std::move(v));
  }
  Quiver q(std::move(vs));
  for (const auto& ja : j.at("arrows")) q.add_arrows(ja.at("from"), ja.at("to"), ja.at("mult").get<std::int64_t>());
  return q;
}

}  // namespace brlab
