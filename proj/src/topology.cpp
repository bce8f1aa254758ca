#include "tel/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tel {

namespace {

std::string mask_names(const std::vector<std::string>& points, PointSet a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (a & (PointSet(1) << i)) {
      if (!first) out += ",";
      out += points[i];
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::vector<std::string> normalize_points(std::vector<std::string> points) {
  if (points.empty())
    throw TopologyError(TopologyError::Code::BadPoint, "point set must be nonempty");
  if (points.size() > static_cast<std::size_t>(kMaxSpacePoints))
    throw TopologyError(TopologyError::Code::TooManyPoints,
                        "at most " + std::to_string(kMaxSpacePoints) + " points supported");
  std::sort(points.begin(), points.end());
  auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end())
    throw TopologyError(TopologyError::Code::BadPoint, "duplicate point '" + *dup + "'");
  return points;
}

TopoSpace TopoSpace::validate(std::vector<std::string> points, std::vector<PointSet> opens) {
  points = normalize_points(std::move(points));
  PointSet universe = static_cast<PointSet>((1u << points.size()) - 1);
  for (PointSet o : opens)
    if (o & ~universe)
      throw TopologyError(TopologyError::Code::OpenNotSubsetOfPoints,
                          "open set is not a subset of the point set");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  std::set<PointSet> family(opens.begin(), opens.end());
  if (!family.count(0))
    throw TopologyError(TopologyError::Code::MissingEmpty, "opens must contain the empty set");
  if (!family.count(universe))
    throw TopologyError(TopologyError::Code::MissingWhole, "opens must contain the whole space");
  for (PointSet a : opens)
    for (PointSet b : opens) {
      if (!family.count(a & b))
        throw TopologyError(TopologyError::Code::NotClosedUnderIntersection,
                            "not closed under intersection: " + mask_names(points, a) + " and " +
                                mask_names(points, b));
      if (!family.count(a | b))
        throw TopologyError(TopologyError::Code::NotClosedUnderUnion,
                            "not closed under union: " + mask_names(points, a) + " and " +
                                mask_names(points, b));
    }
  return TopoSpace(std::move(points), std::move(opens));
}

TopoSpace TopoSpace::from_subbasis(std::vector<std::string> points,
                                   const std::vector<PointSet>& sets) {
  points = normalize_points(std::move(points));
  PointSet universe = static_cast<PointSet>((1u << points.size()) - 1);
  for (PointSet s : sets)
    if (s & ~universe)
      throw TopologyError(TopologyError::Code::SetNotSubsetOfPoints,
                          "subbasis set is not a subset of the point set");

  // Finite intersections first (X is the empty intersection), then unions
  // (the empty set is the empty union).
  std::set<PointSet> basis(sets.begin(), sets.end());
  basis.insert(universe);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointSet> cur(basis.begin(), basis.end());
    for (PointSet a : cur)
      for (PointSet b : cur)
        if (basis.insert(a & b).second) grew = true;
  }
  std::set<PointSet> family = basis;
  family.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointSet> cur(family.begin(), family.end());
    for (PointSet a : cur)
      for (PointSet b : cur)
        if (family.insert(a | b).second) grew = true;
  }
  return TopoSpace(std::move(points), std::vector<PointSet>(family.begin(), family.end()));
}

bool TopoSpace::is_open(PointSet a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

PointSet TopoSpace::interior(PointSet a) const {
  require_subset(a);
  PointSet res = 0;
  for (PointSet o : opens_)
    if ((o & ~a) == 0) res |= o;
  return res;
}

PointSet TopoSpace::closure(PointSet a) const {
  require_subset(a);
  return universe() & ~interior(universe() & ~a);
}

bool TopoSpace::subset_star(PointSet a, PointSet b) const {
  require_subset(a);
  require_subset(b);
  return interior(closure(a & ~b)) == 0;
}

bool TopoSpace::dense_in(PointSet v, PointSet u) const {
  require_subset(v);
  require_subset(u);
  return (u & ~closure(v)) == 0;
}

bool TopoSpace::nowhere_dense(PointSet v) const { return interior(closure(v)) == 0; }

int TopoSpace::point_index(const std::string& name) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), name);
  if (it == points_.end() || *it != name) return -1;
  return static_cast<int>(it - points_.begin());
}

std::string TopoSpace::set_to_string(PointSet a) const { return mask_names(points_, a); }

void TopoSpace::require_subset(PointSet a) const {
  if (a & ~universe())
    throw TopologyError(TopologyError::Code::SetNotSubsetOfPoints,
                        "set is not a subset of the point set");
}

TopoSpace alexandroff_from_relation(const std::vector<std::string>& points,
                                    const std::vector<PointSet>& successors) {
  int n = static_cast<int>(points.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (successors[x] & (PointSet(1) << y)) {
        PointSet missing = successors[y] & ~successors[x];
        if (missing) {
          int z = std::countr_zero(missing);
          throw TopologyError(TopologyError::Code::NotTransitive,
                              "relation is not transitive: (" + points[x] + "," + points[y] + "," +
                                  points[z] + ")");
        }
      }
  std::vector<PointSet> reflexive(successors);
  for (int x = 0; x < n; ++x) reflexive[x] |= PointSet(1) << x;
  return TopoSpace::from_subbasis(points, reflexive);
}

std::vector<TopoSpace> enumerate_topologies(int n) {
  if (n < 1 || n > kMaxEnumPoints)
    throw TopologyError(TopologyError::Code::BoundExceeded,
                        "topology enumeration supports 1.." + std::to_string(kMaxEnumPoints) +
                            " points");
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back(std::string(1, static_cast<char>('a' + i)));

  // Finite topologies correspond one-to-one to preorders: the opens are the
  // up-closed sets of the reflexive transitive relation whose successor sets
  // are the minimal open neighborhoods. Iterating relations in mask order
  // yields each topology exactly once, deterministically.
  int offdiag = n * (n - 1);
  std::vector<TopoSpace> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << offdiag); ++rel) {
    std::vector<PointSet> row(n, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      row[i] |= PointSet(1) << i;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (rel & (std::uint64_t(1) << bit)) row[i] |= PointSet(1) << j;
        ++bit;
      }
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if ((row[i] & (PointSet(1) << j)) && (row[j] & ~row[i])) transitive = false;
    if (!transitive) continue;

    std::vector<PointSet> opens;
    PointSet universe = static_cast<PointSet>((1u << n) - 1);
    for (PointSet u = 0; u <= universe; ++u) {
      bool open = true;
      for (int i = 0; i < n && open; ++i)
        if ((u & (PointSet(1) << i)) && (row[i] & ~u)) open = false;
      if (open) opens.push_back(u);
    }
    out.push_back(TopoSpace::validate(points, std::move(opens)));
  }
  return out;
}

}  // namespace tel
