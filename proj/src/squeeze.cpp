#include "phenyl/squeeze.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace phenyl {

namespace {

constexpr std::string_view kHeader = "phenylene v1";

std::uint64_t pack(Cell c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.q)) << 32) |
         static_cast<std::uint32_t>(c.r);
}

Cell step(Cell c, int direction) {
  const Cell d = kDirections[static_cast<std::size_t>(direction)];
  return {c.q + d.q, c.r + d.r};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view field, int line, const char* what) {
  int value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw SqueezeError(SqueezeError::Kind::Parse,
                       std::string("non-numeric ") + what + " '" + std::string(field) + "'", line);
  return value;
}

// Cells occupied so far, for incremental validity checks while growing a tree.
class Occupancy {
 public:
  bool occupied(Cell c) const { return cells_.contains(pack(c)); }
  void place(Cell c) { cells_.insert(pack(c)); }
  void remove(Cell c) { cells_.erase(pack(c)); }

  // A new hexagon keeps the system catacondensed with a tree dual iff its
  // cell is free and its only occupied neighbour is the parent.
  bool can_attach(Cell parent, int direction) const {
    const Cell target = step(parent, direction);
    if (occupied(target)) return false;
    for (int d = 0; d < 6; ++d) {
      const Cell nb = step(target, d);
      if (nb != parent && occupied(nb)) return false;
    }
    return true;
  }

 private:
  std::unordered_set<std::uint64_t> cells_;
};

}  // namespace

SqueezeSpec parse_squeeze_spec(std::string_view text) {
  using Kind = SqueezeError::Kind;
  SqueezeSpec spec;
  bool have_header = false;
  bool have_count = false;
  std::vector<bool> seen;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      if (line != kHeader)
        throw SqueezeError(Kind::Parse, "expected header '" + std::string(kHeader) + "'", line_no);
      have_header = true;
      continue;
    }

    const auto fields = split_fields(line);
    if (!have_count) {
      if (fields.size() != 1) throw SqueezeError(Kind::Parse, "expected hexagon count", line_no);
      spec.hexagon_count = parse_int(fields[0], line_no, "hexagon count");
      if (spec.hexagon_count < 1)
        throw SqueezeError(Kind::Parse, "hexagon count must be positive", line_no);
      seen.assign(static_cast<std::size_t>(spec.hexagon_count) + 1, false);
      have_count = true;
      continue;
    }

    if (fields.size() != 3)
      throw SqueezeError(Kind::Parse, "expected 'child parent direction'", line_no);
    Attachment a;
    a.child = parse_int(fields[0], line_no, "child index");
    a.parent = parse_int(fields[1], line_no, "parent index");
    a.direction = parse_int(fields[2], line_no, "direction");
    if (a.child < 2 || a.child > spec.hexagon_count)
      throw SqueezeError(Kind::Parse,
                         "child index " + std::to_string(a.child) + " out of range 2.." +
                             std::to_string(spec.hexagon_count),
                         line_no);
    if (seen[static_cast<std::size_t>(a.child)])
      throw SqueezeError(Kind::Parse, "duplicate child " + std::to_string(a.child), line_no);
    if (a.parent < 1 || a.parent >= a.child)
      throw SqueezeError(Kind::Parse,
                         "parent " + std::to_string(a.parent) + " must be in 1.." +
                             std::to_string(a.child - 1),
                         line_no);
    if (a.direction < 0 || a.direction > 5)
      throw SqueezeError(Kind::Parse, "direction " + std::to_string(a.direction) + " out of range 0..5",
                         line_no);
    seen[static_cast<std::size_t>(a.child)] = true;
    spec.attachments.push_back(a);
  }

  if (!have_header) throw SqueezeError(Kind::Parse, "missing header", line_no);
  if (!have_count) throw SqueezeError(Kind::Parse, "missing hexagon count", line_no);
  if (static_cast<int>(spec.attachments.size()) != spec.hexagon_count - 1)
    throw SqueezeError(Kind::Parse,
                       "expected " + std::to_string(spec.hexagon_count - 1) + " attachments, found " +
                           std::to_string(spec.attachments.size()),
                       line_no);
  return spec;
}

std::string format_squeeze_spec(const SqueezeSpec& spec) {
  std::ostringstream out;
  out << kHeader << '\n' << spec.hexagon_count << '\n';
  for (const auto& a : spec.attachments) out << a.child << ' ' << a.parent << ' ' << a.direction << '\n';
  return out.str();
}

SqueezeSpec generate_linear_spec(int n) {
  if (n < 1) throw std::invalid_argument("hexagon count must be positive");
  SqueezeSpec spec{n, {}};
  for (int k = 2; k <= n; ++k) spec.attachments.push_back({k, k - 1, 0});
  return spec;
}

Squeeze validate_squeeze(const SqueezeSpec& spec) {
  using Kind = SqueezeError::Kind;
  const int n = spec.hexagon_count;
  if (n < 1) throw SqueezeError(Kind::Parse, "hexagon count must be positive");

  std::vector<const Attachment*> by_child(static_cast<std::size_t>(n) + 1, nullptr);
  for (const auto& a : spec.attachments) {
    if (a.child < 2 || a.child > n || by_child[static_cast<std::size_t>(a.child)] != nullptr ||
        a.parent < 1 || a.parent >= a.child || a.direction < 0 || a.direction > 5)
      throw SqueezeError(Kind::Parse, "malformed attachment for child " + std::to_string(a.child));
    by_child[static_cast<std::size_t>(a.child)] = &a;
  }
  if (static_cast<int>(spec.attachments.size()) != n - 1)
    throw SqueezeError(Kind::Parse, "attachment count must be n-1");

  Squeeze sq;
  sq.hexagons.resize(static_cast<std::size_t>(n));

  // Cells.
  std::unordered_map<std::uint64_t, int> cell_owner;
  cell_owner.emplace(pack(sq.hexagons[0]), 0);
  for (int k = 2; k <= n; ++k) {
    const Attachment& a = *by_child[static_cast<std::size_t>(k)];
    const Cell c = step(sq.hexagons[static_cast<std::size_t>(a.parent - 1)], a.direction);
    sq.hexagons[static_cast<std::size_t>(k - 1)] = c;
    const auto [it, fresh] = cell_owner.emplace(pack(c), k - 1);
    if (!fresh)
      throw SqueezeError(Kind::CellCollision, "hexagons " + std::to_string(it->second + 1) + " and " +
                                                  std::to_string(k) + " occupy cell (" +
                                                  std::to_string(c.q) + ", " + std::to_string(c.r) + ")");
  }

  // Corners, shared through their lattice key.
  std::unordered_map<std::uint64_t, std::size_t> vertex_index;
  sq.hexagon_corners.resize(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    for (int c = 0; c < 6; ++c) {
      const Cell key = corner_key(sq.hexagons[static_cast<std::size_t>(h)], c);
      const auto [it, fresh] = vertex_index.emplace(pack(key), sq.vertices.size());
      if (fresh) sq.vertices.push_back({key, {}});
      auto& v = sq.vertices[it->second];
      v.hexagons.push_back(h);
      if (v.hexagons.size() > 2)
        throw SqueezeError(Kind::InternalVertex, "lattice vertex shared by hexagons " +
                                                     std::to_string(v.hexagons[0] + 1) + ", " +
                                                     std::to_string(v.hexagons[1] + 1) + " and " +
                                                     std::to_string(v.hexagons[2] + 1));
      sq.hexagon_corners[static_cast<std::size_t>(h)][static_cast<std::size_t>(c)] = it->second;
    }
  }

  // Lattice adjacency must coincide with the attachment tree.
  std::vector<int> parent_of(static_cast<std::size_t>(n), -1);
  for (int k = 2; k <= n; ++k) parent_of[static_cast<std::size_t>(k - 1)] = by_child[static_cast<std::size_t>(k)]->parent - 1;
  for (int h = 0; h < n; ++h) {
    for (int d = 0; d < 6; ++d) {
      const auto it = cell_owner.find(pack(step(sq.hexagons[static_cast<std::size_t>(h)], d)));
      if (it == cell_owner.end()) continue;
      const int other = it->second;
      if (parent_of[static_cast<std::size_t>(h)] != other && parent_of[static_cast<std::size_t>(other)] != h)
        throw SqueezeError(Kind::DualCycle, "hexagons " + std::to_string(h + 1) + " and " +
                                                std::to_string(other + 1) +
                                                " are adjacent but not parent and child");
    }
  }

  // Sides.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  sq.hexagon_sides.resize(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    const auto& corners = sq.hexagon_corners[static_cast<std::size_t>(h)];
    for (int c = 0; c < 6; ++c) {
      std::size_t a = corners[static_cast<std::size_t>(c)];
      std::size_t b = corners[static_cast<std::size_t>((c + 1) % 6)];
      if (a > b) std::swap(a, b);
      const auto [it, fresh] = edge_index.emplace(std::make_pair(a, b), sq.edges.size());
      if (fresh) sq.edges.push_back({a, b, side_class(c), {}});
      auto& e = sq.edges[it->second];
      if (e.direction_class != side_class(c))
        throw std::logic_error("inconsistent direction class on a shared squeeze edge");
      e.hexagons.push_back(h);
      sq.hexagon_sides[static_cast<std::size_t>(h)][static_cast<std::size_t>(c)] = it->second;
    }
  }

  for (int k = 2; k <= n; ++k) {
    const Attachment& a = *by_child[static_cast<std::size_t>(k)];
    DualEdge de{a.parent - 1, k - 1, a.direction,
                sq.hexagon_sides[static_cast<std::size_t>(a.parent - 1)][static_cast<std::size_t>(a.direction)]};
    if (sq.hexagon_sides[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>((a.direction + 3) % 6)] !=
        de.shared_edge)
      throw std::logic_error("adjacent hexagons do not share the facing side");
    sq.inner_dual.push_back(de);
  }

  if (sq.vertices.size() != static_cast<std::size_t>(4 * n + 2) ||
      sq.edges.size() != static_cast<std::size_t>(5 * n + 1))
    throw std::logic_error("catacondensed vertex/edge counts violated");
  return sq;
}

std::string spec_hash(const SqueezeSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : format_squeeze_spec(spec)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SqueezeSpec random_valid_spec(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("hexagon count must be positive");
  constexpr int kAttemptsPerHexagon = 64;
  for (;;) {
    SqueezeSpec spec{n, {}};
    std::vector<Cell> cells{{0, 0}};
    Occupancy occ;
    occ.place(cells[0]);
    bool stuck = false;
    for (int k = 2; k <= n && !stuck; ++k) {
      bool placed = false;
      for (int attempt = 0; attempt < kAttemptsPerHexagon; ++attempt) {
        const int parent = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
        const int dir = static_cast<int>(rng() % 6);
        const Cell pc = cells[static_cast<std::size_t>(parent - 1)];
        if (!occ.can_attach(pc, dir)) continue;
        cells.push_back(step(pc, dir));
        occ.place(cells.back());
        spec.attachments.push_back({k, parent, dir});
        placed = true;
        break;
      }
      stuck = !placed;
    }
    if (!stuck) return spec;
  }
}

void enumerate_valid_specs(int n, const std::function<void(const SqueezeSpec&)>& visit) {
  if (n < 1) return;
  SqueezeSpec spec{n, {}};
  std::vector<Cell> cells{{0, 0}};
  Occupancy occ;
  occ.place(cells[0]);

  std::function<void(int)> grow = [&](int k) {
    if (k > n) {
      visit(spec);
      return;
    }
    for (int parent = 1; parent < k; ++parent) {
      const Cell pc = cells[static_cast<std::size_t>(parent - 1)];
      for (int dir = 0; dir < 6; ++dir) {
        if (!occ.can_attach(pc, dir)) continue;
        const Cell c = step(pc, dir);
        cells.push_back(c);
        occ.place(c);
        spec.attachments.push_back({k, parent, dir});
        grow(k + 1);
        spec.attachments.pop_back();
        occ.remove(c);
        cells.pop_back();
      }
    }
  };
  grow(2);
}

}  // namespace phenyl
