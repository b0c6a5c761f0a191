#pragma once

// Pinched-disk quotient of a rational lamination as a finite graph, and the
// transport of a small lamination into a big one through tuning data.

#include "lamina/angle.hpp"
#include "lamina/lamination.hpp"
#include "lamina/renormalization.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamina {

class LinkedLaminationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counterclockwise arc from first to second.
using Arc = std::pair<Angle, Angle>;

/// A complementary region of the lamination, described by its boundary: the
/// circle arcs it contains in traversal order, and the classes met between
/// consecutive arcs. The whole circle (no classes at all) has no arcs.
struct GapDescriptor {
  std::vector<Arc> arcs;
  std::vector<std::size_t> boundary;
};

enum class NodeKind { class_node, gap };

struct ModelNode {
  std::size_t id = 0;
  NodeKind kind = NodeKind::gap;
  AngleClass angle_class;
  GapDescriptor gap;
};

struct ModelGraph {
  unsigned degree = 2;
  /// Class nodes first (by smallest angle), then gaps (by smallest arc start).
  std::vector<ModelNode> nodes;
  /// (class id, gap id), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t class_count() const;
  std::size_t gap_count() const;
  std::vector<std::vector<std::size_t>> adjacency() const;
  std::size_t components() const;
};

/// Throws LinkedLaminationError unless check_unlinked passes.
ModelGraph quotient_model(const Lamination& lam);

/// The class containing a, or {a}.
AngleClass fiber(const Lamination& lam, const Angle& a);

/// p-images of the classes of sub_lam, closed under sigma_d, merged with the
/// ambient lamination. A crossing between transported and ambient classes
/// throws ExtensionError naming both.
Lamination extend_model(const Lamination& sub_lam, const TuningData& t, const Lamination& ambient);

/// Classes whose angles all decode under nu to at least two distinct angles.
Lamination restrict_to_image(const Lamination& lam, const TuningData& t);

/// Elementwise nu; throws TuningError if some angle is outside the domain.
Lamination decode_lamination(const Lamination& lam, const TuningData& t);

/// Isomorphism of the quotient trees, respecting node kinds.
bool graph_isomorphic(const ModelGraph& a, const ModelGraph& b);

/// quotient(restrict_to_image(extended)) is isomorphic to quotient(sub_lam).
bool factors_through(const Lamination& extended, const Lamination& sub_lam, const TuningData& t);

}  // namespace lamina
