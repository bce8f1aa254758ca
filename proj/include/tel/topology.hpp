#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tel {

/// Point sets are bitmasks over the (sorted) point vector of a space.
using PointSet = std::uint32_t;

constexpr int kMaxSpacePoints = 20;

struct TopologyError : std::runtime_error {
  enum class Code {
    MissingEmpty,
    MissingWhole,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    OpenNotSubsetOfPoints,
    SetNotSubsetOfPoints,
    NotTransitive,
    BoundExceeded,
    TooManyPoints,
    BadPoint,
  };
  TopologyError(Code c, std::string msg) : std::runtime_error(std::move(msg)), code(c) {}
  Code code;
};

/// A finite topological space: sorted point names plus the open-set family,
/// stored as ascending bitmasks. Immutable once built; all queries are pure.
class TopoSpace {
 public:
  /// Checks the topology axioms (contains empty set and X, closed under
  /// pairwise intersection and union) and returns the space with opens in
  /// canonical ascending order. Throws TopologyError with a witness pair
  /// on the first closure failure.
  static TopoSpace validate(std::vector<std::string> points, std::vector<PointSet> opens);

  /// Smallest topology containing the given sets: closes under finite
  /// intersections (X is the empty intersection) and then unions.
  static TopoSpace from_subbasis(std::vector<std::string> points, const std::vector<PointSet>& sets);

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  int size() const { return static_cast<int>(points_.size()); }
  PointSet universe() const { return static_cast<PointSet>((1u << points_.size()) - 1); }

  bool is_open(PointSet a) const;
  PointSet interior(PointSet a) const;
  PointSet closure(PointSet a) const;
  /// A subset-star B iff A \ B is nowhere dense, i.e. int(cl(A \ B)) is empty.
  bool subset_star(PointSet a, PointSet b) const;
  bool dense_in(PointSet v, PointSet u) const;     // U included in cl(V)
  bool nowhere_dense(PointSet v) const;            // int(cl(V)) empty

  int point_index(const std::string& name) const;  // -1 when unknown
  std::string set_to_string(PointSet a) const;
  void require_subset(PointSet a) const;

 private:
  TopoSpace(std::vector<std::string> pts, std::vector<PointSet> ops)
      : points_(std::move(pts)), opens_(std::move(ops)) {}
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
};

/// Sorts and uniqueness-checks point names (at most kMaxSpacePoints).
std::vector<std::string> normalize_points(std::vector<std::string> points);

/// Alexandroff space of a transitive relation: opens generated by the
/// reflexive-closure successor sets, which become the smallest open
/// neighborhoods. R is given as per-point successor bitmasks over the
/// already-sorted point vector. Throws NotTransitive with a witness triple.
TopoSpace alexandroff_from_relation(const std::vector<std::string>& points,
                                    const std::vector<PointSet>& successors);

constexpr int kMaxEnumPoints = 5;

/// All topologies on n labeled points ("a", "b", ...), each exactly once,
/// in a fixed deterministic order. n is capped at kMaxEnumPoints.
std::vector<TopoSpace> enumerate_topologies(int n);

}  // namespace tel
