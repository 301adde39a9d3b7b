#include "zerohecke/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include <json.hpp>

namespace zerohecke {

bool leq_L(const GroupTable& g, ElementId u, ElementId v) {
  return g.length(v) == g.length(u) + g.length(g.multiply(v, g.inverse(u)));
}

WeakInterval::WeakInterval(GroupPtr group, ElementId lo, ElementId hi)
    : group_(std::move(group)), lo_(lo), hi_(hi) {
  const GroupTable& g = *group_;
  if (lo >= g.size() || hi >= g.size()) throw ArgumentError("interval endpoint out of range");
  if (!leq_L(g, lo, hi))
    throw ArgumentError("interval needs " + g.label(lo) + " <=_L " + g.label(hi));

  std::unordered_map<ElementId, char> seen{{lo, 1}};
  std::deque<ElementId> queue{lo};
  while (!queue.empty()) {
    ElementId w = queue.front();
    queue.pop_front();
    members_.push_back(w);
    for (int s = 0; s < g.rank(); ++s) {
      if (g.left_descents(w).contains(s)) continue;
      ElementId x = g.left_mul(s, w);
      if (!leq_L(g, x, hi)) continue;
      covers_.push_back({w, s, x});
      if (seen.emplace(x, 1).second) {
        parent_.emplace(x, Cover{w, s, x});
        queue.push_back(x);
      }
    }
  }
  std::sort(members_.begin(), members_.end(), [&g](ElementId a, ElementId b) {
    return g.length(a) != g.length(b) ? g.length(a) < g.length(b) : a < b;
  });
  for (std::size_t i = 0; i < members_.size(); ++i) position_.emplace(members_[i], i);
}

std::size_t WeakInterval::position(ElementId w) const {
  auto it = position_.find(w);
  if (it == position_.end()) throw ArgumentError(group_->label(w) + " is not in the interval");
  return it->second;
}

std::vector<int> WeakInterval::path_from_lo(ElementId w) const {
  position(w);
  std::vector<int> word;
  while (w != lo_) {
    const Cover& c = parent_.at(w);
    word.push_back(c.generator);
    w = c.from;
  }
  return word;
}

WeakInterval interval(GroupPtr group, ElementId u, ElementId v) { return WeakInterval(std::move(group), u, v); }

bool is_upper_ideal(const WeakInterval& iv, const std::vector<ElementId>& ys) {
  std::vector<ElementId> sorted = ys;
  std::sort(sorted.begin(), sorted.end());
  auto in = [&](ElementId w) { return std::binary_search(sorted.begin(), sorted.end(), w); };
  for (ElementId y : ys)
    if (!iv.contains(y)) return false;
  for (const Cover& c : iv.covers())
    if (in(c.from) && !in(c.to)) return false;
  return true;
}

UpperIdeal::UpperIdeal(const WeakInterval& iv, std::vector<ElementId> elements) {
  for (ElementId y : elements)
    if (!iv.contains(y)) throw ArgumentError(iv.group().label(y) + " is not in the interval");
  if (!is_upper_ideal(iv, elements)) throw ArgumentError("subset is not an upper order ideal");
  sorted_ = elements;
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  for (ElementId w : iv.members())
    if (std::binary_search(sorted_.begin(), sorted_.end(), w)) elements_.push_back(w);
}

bool UpperIdeal::contains(ElementId w) const { return std::binary_search(sorted_.begin(), sorted_.end(), w); }

UpperIdeal complement_ideal(const WeakInterval& iv, ElementId w) {
  WeakInterval lower(iv.group_ptr(), iv.lo(), w);
  if (!iv.contains(w)) throw ArgumentError("complement_ideal needs w in the interval");
  std::vector<ElementId> out;
  for (ElementId x : iv.members())
    if (!lower.contains(x)) out.push_back(x);
  return UpperIdeal(iv, std::move(out));
}

UpperIdeal upward_closure(const WeakInterval& iv, const std::vector<ElementId>& seeds) {
  std::vector<char> in(iv.size(), 0);
  for (ElementId s : seeds) in[iv.position(s)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Cover& c : iv.covers()) {
      if (in[iv.position(c.from)] && !in[iv.position(c.to)]) {
        in[iv.position(c.to)] = 1;
        changed = true;
      }
    }
  }
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < iv.size(); ++i)
    if (in[i]) out.push_back(iv.members()[i]);
  return UpperIdeal(iv, std::move(out));
}

UpperIdeal random_upper_ideal(const WeakInterval& iv, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Pick a random subset, keep its minimal elements (an antichain), close upward.
  std::vector<ElementId> picked;
  for (ElementId w : iv.members())
    if (rng() & 1u) picked.push_back(w);
  const GroupTable& g = iv.group();
  std::vector<ElementId> antichain;
  for (ElementId a : picked) {
    bool minimal = true;
    for (ElementId b : picked)
      if (b != a && leq_L(g, b, a)) minimal = false;
    if (minimal) antichain.push_back(a);
  }
  return upward_closure(iv, antichain);
}

std::string export_hasse(const WeakInterval& iv, const std::string& format) {
  const GroupTable& g = iv.group();
  if (format == "dot") {
    std::ostringstream out;
    out << "digraph interval {\n  rankdir=TB;\n";
    for (ElementId w : iv.members()) out << "  n" << w << " [label=\"" << g.label(w) << "\"];\n";
    for (const Cover& c : iv.covers())
      out << "  n" << c.from << " -> n" << c.to << " [label=\"pi_" << c.generator + 1 << "\"];\n";
    out << "}\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::json j;
    j["lo"] = iv.lo();
    j["hi"] = iv.hi();
    j["members"] = iv.members();
    nlohmann::json covers = nlohmann::json::array();
    for (const Cover& c : iv.covers()) covers.push_back({c.from, c.generator + 1, c.to});
    j["covers"] = covers;
    return j.dump(2) + "\n";
  }
  throw ArgumentError("unknown export format '" + format + "'");
}

}  // namespace zerohecke
