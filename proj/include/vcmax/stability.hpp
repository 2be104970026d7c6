#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vcmax/core.hpp"
#include "vcmax/report.hpp"

namespace vcmax {

/// Points x_1..x_k and members B_1..B_k with x_i in B_j exactly when i <= j:
/// B_j meets the points in the first j of them.
struct LadderWitness {
  std::vector<std::size_t> points;  ///< ground indices, in ladder order
  std::vector<Subset> sets;

  std::size_t length() const { return points.size(); }
};

bool is_ladder(const SetFamily& family, const LadderWitness& w);

struct LadderResult {
  std::size_t dimension = 0;
  LadderWitness witness;
};

/// Exact ladder dimension by depth-first search over point sequences. The
/// search state is, for each j, the members meeting the chosen points in
/// exactly the first j of them.
LadderResult ladder_dimension(const SetFamily& family);

/// "x1,x2 | {..},{..}" rendering used in reports.
std::string format_ladder(const OrderedGround& ground, const LadderWitness& w);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class OneInclusionGraph {
 public:
  explicit OneInclusionGraph(const SetFamily& family);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
  /// Component id per vertex, numbered in order of first vertex.
  const std::vector<std::size_t>& components() const { return component_; }
  std::size_t component_count() const { return component_count_; }
  bool connected() const { return component_count_ <= 1; }
  /// Breadth-first distances from v; kUnreachable across components.
  std::vector<std::size_t> distances_from(std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
  std::size_t edges_ = 0;
};

/// Compares Hamming distance with graph distance for every member pair.
Report verify_distance_law(const SetFamily& family, std::size_t max_witnesses = 8);

/// {C xor a : C in family}.
SetFamily symdiff_family(const SetFamily& family, Subset a);

struct TightLadderExample {
  SetFamily family;          ///< right prefixes, left suffixes and the empty set
  SetFamily literal_family;  ///< the same without the empty set
  Subset flip;               ///< the negative half of the ground
};

/// Ground -n..-1,1..n with the prefixes {1..i} and suffixes {-i..-1}.
TightLadderExample tight_ladder_example(std::size_t n);

/// LD(C xor a) against 2 LD(C), with both witnesses.
Report check_symdiff_bound(const SetFamily& family, Subset a);

/// Member-size containments for a d-maximum family of ladder dimension n:
/// sizes at most n when the empty set is a member, and |C xor B| <= 2n for
/// all members B, C. Throws PreconditionError unless the family is d-maximum.
Report check_cc(const SetFamily& family, std::size_t d);

struct LadderConverse {
  SetFamily family;            ///< initial segments of the ladder points in ladder order
  bool one_maximum = false;
  std::size_t full_minus_empty = 0;
  std::size_t traced_members = 0;  ///< how many of them the input family traces
};

/// Initial segments of the ladder's points, which the ladder's sets trace
/// (all but possibly the empty one).
LadderConverse ladder_converse(const SetFamily& family, const LadderWitness& w);

/// Largest |C1 \ C2| over member pairs against the ladder dimension, plus the
/// converse construction from a longest ladder. Throws PreconditionError
/// unless the family is d-maximum.
Report check_theorem_tt(const SetFamily& family, std::size_t d);

struct NormalForm {
  std::size_t ladder_dimension = 0;
  std::size_t m = 0;         ///< 2 * ladder_dimension
  Subset base;
  bool containment = false;  ///< every member C has |C xor base| <= m
  std::size_t least_m = 0;   ///< least m' with the containment at this base
};

/// Realizes the family inside [X]^{<=m} xor base. The base defaults to the
/// first member.
NormalForm stable_maximum_normal_form(const SetFamily& family, std::optional<Subset> base = std::nullopt);

struct SmallNormalFormSearch {
  std::size_t ladder_dimension = 0;
  Subset best_base;
  std::size_t best_m = 0;
  bool within_ladder_dimension = false;  ///< best_m <= ladder_dimension
};

/// Conjectural: searches every base for the least m. Nothing is asserted
/// about the outcome.
SmallNormalFormSearch search_small_normal_form(const SetFamily& family, std::size_t cap = kDefaultEnumerationCap);

}  // namespace vcmax
