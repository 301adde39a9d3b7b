#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "zerohecke/coxeter.hpp"

namespace zerohecke {

/// u <=_L v in left weak order, i.e. l(v) = l(u) + l(v u^-1).
bool leq_L(const GroupTable& g, ElementId u, ElementId v);

/// A cover w <_L s w inside an interval.
struct Cover {
  ElementId from;
  int generator;
  ElementId to;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// An explicit left weak interval [lo, hi]_L. Members are sorted by rank
/// (l(w) - l(lo)) and then by id, so every rank prefix is a lower set.
class WeakInterval {
 public:
  WeakInterval(GroupPtr group, ElementId lo, ElementId hi);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  ElementId lo() const { return lo_; }
  ElementId hi() const { return hi_; }
  const std::vector<ElementId>& members() const { return members_; }
  const std::vector<Cover>& covers() const { return covers_; }
  std::size_t size() const { return members_.size(); }

  bool contains(ElementId w) const { return position_.count(w) != 0; }
  /// Index of w in members(); throws ArgumentError for non-members.
  std::size_t position(ElementId w) const;
  int rank(ElementId w) const { return group_->length(w) - group_->length(lo_); }

  /// A word s_1 ... s_k (0-based) with w = s_1 ... s_k lo, built from a
  /// chain of covers inside the interval.
  std::vector<int> path_from_lo(ElementId w) const;

 private:
  GroupPtr group_;
  ElementId lo_, hi_;
  std::vector<ElementId> members_;
  std::vector<Cover> covers_;
  std::unordered_map<ElementId, std::size_t> position_;
  std::unordered_map<ElementId, Cover> parent_;
};

/// Upward BFS from u keeping the w with w <=_L v. Throws ArgumentError if u is not <=_L v.
WeakInterval interval(GroupPtr group, ElementId u, ElementId v);

/// A subset Y of an interval closed upward under covers.
class UpperIdeal {
 public:
  /// Validates membership and closure; throws ArgumentError otherwise.
  UpperIdeal(const WeakInterval& iv, std::vector<ElementId> elements);

  /// Elements in interval order.
  const std::vector<ElementId>& elements() const { return elements_; }
  bool contains(ElementId w) const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

 private:
  std::vector<ElementId> elements_;
  std::vector<ElementId> sorted_;
};

bool is_upper_ideal(const WeakInterval& iv, const std::vector<ElementId>& ys);

/// [lo, hi]_L minus [lo, w]_L.
UpperIdeal complement_ideal(const WeakInterval& iv, ElementId w);

/// Upward closure of a random antichain; deterministic per seed.
UpperIdeal random_upper_ideal(const WeakInterval& iv, std::uint64_t seed);

/// Upward closure of an arbitrary subset of the interval.
UpperIdeal upward_closure(const WeakInterval& iv, const std::vector<ElementId>& seeds);

/// Hasse diagram as "dot" or "json". Edges point downward in the drawing,
/// from w to s w, labelled pi_s.
std::string export_hasse(const WeakInterval& iv, const std::string& format);

}  // namespace zerohecke
