#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phenyl/phenylene.hpp"

namespace phenyl {

enum class EdgeSide : std::uint8_t { Zero = 0, One = 1, Cut = 2 };

/// One elementary cut (Theta-class) with the two sides of G minus the cut.
/// Side 0 is the component holding vertex 0.
struct ThetaClass {
  std::size_t id = 0;
  std::vector<std::size_t> edge_ids;  // ascending
  std::vector<std::uint8_t> side_of_vertex;
  std::vector<EdgeSide> side_of_edge;
};

/// Edge partition into Theta-classes without side information. Classes are
/// numbered in order of their smallest edge id.
struct ThetaPartition {
  std::vector<std::size_t> class_of_edge;
  std::vector<std::vector<std::size_t>> classes;
};

/// Closes the "opposite side of a face" relation with union-find: side i
/// of a hexagon pairs with side i+3, and the two opposite side pairs of each
/// square pair up.
ThetaPartition theta_partition(const Phenylene& g);

/// theta_partition plus one side-labelling BFS per class.
std::vector<ThetaClass> theta_classes(const Phenylene& g);

/// Splits G minus `cut` into its components and labels them. Throws
/// std::logic_error when the split does not give exactly two components.
ThetaClass make_theta_class(const Phenylene& g, std::size_t id, std::vector<std::size_t> cut);

/// E_1..E_4 by edge direction class (index 0 holds class 1).
std::array<std::vector<std::size_t>, 4> direction_partition(const Phenylene& g);

/// Two cuts cross when they pass through a common face.
bool cuts_intersect(const Phenylene& g, const ThetaClass& a, const ThetaClass& b);

}  // namespace phenyl
