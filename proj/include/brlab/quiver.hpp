#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brlab/skew_matrix.hpp"

namespace brlab {

enum class Color { open, filled };
enum class Sign { plus, minus };

struct Decoration {
  std::optional<Color> color;
  std::optional<Sign> sign;
  bool operator==(const Decoration&) const = default;
};

struct QuiverVertex {
  std::string label;
  Decoration deco;
  bool operator==(const QuiverVertex&) const = default;
};

// Quiver without loops or 2-cycles. arrows[(i,j)] = multiplicity of i -> j (> 0).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<QuiverVertex> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<QuiverVertex>& vertices() const { return vertices_; }
  const std::map<std::pair<int, int>, std::int64_t>& arrows() const { return arrows_; }

  // Adds `mult` arrows i -> j; throws on loops or when j -> i already exists.
  void add_arrows(int i, int j, std::int64_t mult = 1);
  std::int64_t multiplicity(int i, int j) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<QuiverVertex> vertices_;
  std::map<std::pair<int, int>, std::int64_t> arrows_;

  friend Quiver mutate_quiver(const Quiver& q, int k);
};

SkewMatrix matrix_of(const Quiver& q);
// Vertices default to labels "0".."n-1" without decorations.
Quiver quiver_of(const SkewMatrix& b, std::vector<QuiverVertex> vertices = {});

// Combinatorial mutation: add i->j for each path i->k->j, reverse arrows at k,
// cancel 2-cycles. Decorations are carried unchanged.
Quiver mutate_quiver(const Quiver& q, int k);

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

}  // namespace brlab
