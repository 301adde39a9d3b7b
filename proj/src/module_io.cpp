#include "zerohecke/module_io.hpp"

#include <sstream>

#include <json.hpp>

#include "zerohecke/twists.hpp"

namespace zerohecke {

using nlohmann::json;

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json gens_json(GenSet s) {
  json out = json::array();
  for (int x : s.members()) out.push_back(x + 1);
  return out;
}

}  // namespace

template <class K>
std::string module_to_json(const HModule<K>& m) {
  json j;
  j["group"] = m.group().model().name();
  j["field"] = K::field_name();
  j["dim"] = m.dim();
  j["labels"] = m.labels();
  json action = json::object();
  for (int s = 0; s < m.rank(); ++s) {
    json entries = json::array();
    for (const auto& x : m.action(s).entries()) entries.push_back(x.str());
    action["s" + std::to_string(s + 1)] = entries;
  }
  j["action"] = action;
  return j.dump(2) + "\n";
}

template <class K>
HModule<K> module_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("module JSON does not parse: ") + e.what());
  }
  try {
    if (j.contains("field") && j.at("field").get<std::string>() != K::field_name())
      throw ArgumentError("module is over " + j.at("field").get<std::string>() + ", expected " + K::field_name());
    auto group = make_group(j.at("group").get<std::string>());
    const auto dim = j.at("dim").get<std::size_t>();
    auto labels = j.value("labels", std::vector<std::string>{});
    std::vector<Matrix<K>> action;
    for (int s = 0; s < group->rank(); ++s) {
      const auto& entries = j.at("action").at("s" + std::to_string(s + 1));
      if (entries.size() != dim * dim) throw ArgumentError("action matrix s" + std::to_string(s + 1) + " has the wrong size");
      Matrix<K> a(dim, dim);
      for (std::size_t k = 0; k < entries.size(); ++k) a(k / dim, k % dim) = K::parse(entries[k].get<std::string>());
      action.push_back(std::move(a));
    }
    if (group->rank() == 0 && labels.empty())
      for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
    return HModule<K>(group, std::move(action), std::move(labels));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed module JSON: ") + e.what());
  }
}

template <class K>
std::string module_digraph_dot(const HModule<K>& m, bool zero_sink) {
  std::ostringstream out;
  out << "digraph module {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < m.dim(); ++i) out << "  b" << i << " [label=" << quoted(m.labels()[i]) << "];\n";
  bool zero_used = false;
  for (int s = 0; s < m.rank(); ++s) {
    const std::string name = "pi_" + std::to_string(s + 1);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      bool any = false;
      for (std::size_t i = 0; i < m.dim(); ++i) {
        const K& c = m.action(s)(i, j);
        if (c.is_zero()) continue;
        any = true;
        std::string label = c == K(1) ? name : name + " (" + c.str() + ")";
        out << "  b" << j << " -> b" << i << " [label=" << quoted(label) << "];\n";
      }
      if (!any && zero_sink) {
        out << "  b" << j << " -> zero [label=" << quoted(name) << "];\n";
        zero_used = true;
      }
    }
  }
  if (zero_used) out << "  zero [label=\"0\", shape=plaintext];\n";
  out << "}\n";
  return out.str();
}

std::string group_to_json(const GroupTable& g) {
  json j;
  j["model"] = g.model().name();
  j["size"] = g.size();
  json elements = json::array();
  for (ElementId w = 0; w < g.size(); ++w) {
    json word = json::array();
    for (int s : g.word(w)) word.push_back(s + 1);
    elements.push_back({{"id", w},
                        {"label", g.label(w)},
                        {"word", word},
                        {"length", g.length(w)},
                        {"dl", gens_json(g.left_descents(w))},
                        {"dr", gens_json(g.right_descents(w))}});
  }
  j["elements"] = elements;
  return j.dump(2) + "\n";
}

std::string descent_classes_dot(const GroupTable& g) {
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
                                  "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"};
  std::ostringstream out;
  out << "digraph descent_classes {\n  rankdir=TB;\n  node [style=filled];\n";
  const auto subsets = all_subsets(g.rank());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    out << "  subgraph cluster_" << k << " {\n    label=" << quoted("D" + to_string(subsets[k])) << ";\n";
    const auto cls = g.descent_class(subsets[k]);
    const char* colour = cls.size() == 1 ? "white" : palette[k % 12];
    for (ElementId w : cls)
      out << "    n" << w << " [label=" << quoted(g.label(w)) << ", fillcolor=\"" << colour << "\"];\n";
    out << "  }\n";
  }
  for (ElementId w = 0; w < g.size(); ++w)
    for (int s = 0; s < g.rank(); ++s)
      if (!g.left_descents(w).contains(s))
        out << "  n" << w << " -> n" << g.left_mul(s, w) << " [label=\"pi_" << s + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string twist_square_dot(GroupPtr group, GenSet I) {
  const GroupTable& g = *group;
  const int r = g.rank();
  const GenSet c = g.conj_w0_set(I);
  // Corners: top row P_I, P_{w0Iw0}; bottom row P_{S-w0Iw0}, P_{S-I}.
  const GenSet corner[4] = {I, c, c.complement(r), I.complement(r)};
  const std::pair<int, int> phi_edges[] = {{0, 1}, {2, 3}}, theta_edges[] = {{0, 2}, {1, 3}}, omega_edges[] = {{0, 3}, {1, 2}};
  std::ostringstream out;
  out << "graph twist_square {\n";
  for (int k = 0; k < 4; ++k)
    out << "  p" << k << " [label=" << quoted("P" + to_string(corner[k])) << "];\n";
  out << "  { rank=same; p0; p1; }\n  { rank=same; p2; p3; }\n";
  auto edges = [&](Twist t, const auto& list) {
    for (auto [a, b] : list) {
      auto twisted = apply_twist(t, projective_module<Rational>(group, corner[a], corner[a]));
      auto iso = is_isomorphic(twisted, projective_module<Rational>(group, corner[b], corner[b]));
      if (iso.status != Verdict::yes)
        throw std::logic_error(to_string(t) + "[P" + to_string(corner[a]) + "] is not P" + to_string(corner[b]));
      out << "  p" << a << " -- p" << b << " [label=" << quoted(to_string(t)) << "];\n";
    }
  };
  edges(Twist::phi, phi_edges);
  edges(Twist::theta_hat, theta_edges);
  edges(Twist::omega_hat, omega_edges);
  out << "}\n";
  return out.str();
}

#define ZEROHECKE_INSTANTIATE(K)                                   \
  template std::string module_to_json(const HModule<K>&);          \
  template HModule<K> module_from_json<K>(const std::string&);     \
  template std::string module_digraph_dot(const HModule<K>&, bool);

ZEROHECKE_INSTANTIATE(Rational)
ZEROHECKE_INSTANTIATE(Fp)

#undef ZEROHECKE_INSTANTIATE

}  // namespace zerohecke
