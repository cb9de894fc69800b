#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phenyl {

/// One hexagon hung off an earlier one. Hexagon ids are 1-based as in the
/// text format; `direction` is the axial lattice step from parent to child.
struct Attachment {
  int child = 0;
  int parent = 0;
  int direction = 0;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// Parent-list encoding of a hexagon tree rooted at hexagon 1.
struct SqueezeSpec {
  int hexagon_count = 0;
  std::vector<Attachment> attachments;

  friend bool operator==(const SqueezeSpec&, const SqueezeSpec&) = default;
};

class SqueezeError : public std::runtime_error {
 public:
  enum class Kind { Parse, CellCollision, InternalVertex, DualCycle };

  SqueezeError(Kind kind, const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Axial coordinates of a hexagon center on the hexagonal lattice.
struct Cell {
  int q = 0;
  int r = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Unit steps between neighbouring cells. Direction d points at angle 60*d
/// degrees; the hexagon side facing it joins corners d and d+1.
inline constexpr std::array<Cell, 6> kDirections{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

/// Corner c of the cell at `center`, in the tripled lattice frame where
/// shared corners of neighbouring cells coincide exactly.
inline Cell corner_key(Cell center, int c) {
  const Cell a = kDirections[static_cast<std::size_t>(c % 6)];
  const Cell b = kDirections[static_cast<std::size_t>((c + 5) % 6)];
  return {3 * center.q + a.q + b.q, 3 * center.r + a.r + b.r};
}

/// Direction class (1..3) of the side joining corners c and c+1.
inline constexpr int side_class(int c) { return (c % 3) + 1; }

struct SqueezeVertex {
  Cell key;
  std::vector<int> hexagons;  // 0-based, at most two
};

struct SqueezeEdge {
  std::size_t a = 0;  // squeeze vertex indices
  std::size_t b = 0;
  int direction_class = 0;
  std::vector<int> hexagons;  // 0-based owners, one or two
};

/// Inner-dual edge: `child` sits in `direction` from `parent` and both own
/// squeeze edge `shared_edge`.
struct DualEdge {
  int parent = 0;  // 0-based
  int child = 0;
  int direction = 0;
  std::size_t shared_edge = 0;
};

/// A validated catacondensed benzenoid embedded on the hexagonal lattice.
/// Hexagon indices are 0-based here (hexagon k of the spec is index k-1).
struct Squeeze {
  std::vector<Cell> hexagons;
  std::vector<SqueezeVertex> vertices;
  std::vector<SqueezeEdge> edges;
  std::vector<std::array<std::size_t, 6>> hexagon_corners;  // squeeze vertex per corner
  std::vector<std::array<std::size_t, 6>> hexagon_sides;    // squeeze edge per side
  std::vector<DualEdge> inner_dual;                         // ordered by child

  std::size_t hexagon_count() const { return hexagons.size(); }
};

SqueezeSpec parse_squeeze_spec(std::string_view text);
std::string format_squeeze_spec(const SqueezeSpec& spec);

/// Chain (k, k-1, 0) for k = 2..n.
SqueezeSpec generate_linear_spec(int n);

Squeeze validate_squeeze(const SqueezeSpec& spec);

/// FNV-1a over the canonical text form, as 16 hex digits.
std::string spec_hash(const SqueezeSpec& spec);

/// Rejection-samples a valid spec with n hexagons. Deterministic for a given
/// engine state on every platform (no std distributions involved).
SqueezeSpec random_valid_spec(int n, std::mt19937_64& rng);

/// Calls `visit` for every spec with n hexagons (parent < child, any
/// direction) that validates.
void enumerate_valid_specs(int n, const std::function<void(const SqueezeSpec&)>& visit);

}  // namespace phenyl
