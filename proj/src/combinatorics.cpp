#include "zerohecke/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zerohecke/errors.hpp"

namespace zerohecke {

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Composition parse_composition(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  Composition alpha;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    int part = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), part);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || part < 1)
      throw ArgumentError("bad composition part '" + std::string(piece) + "'");
    alpha.parts.push_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (alpha.parts.empty()) throw ArgumentError("empty composition");
  return alpha;
}

GenSet comp_set(const Composition& alpha) {
  std::uint32_t bits = 0;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
    partial += alpha.parts[i];
    bits |= 1u << (partial - 1);
  }
  return GenSet(bits);
}

Composition set_comp(GenSet s, int n) {
  if (n < 1) throw ArgumentError("composition size must be positive");
  if (!s.subset_of(GenSet::full(n - 1))) throw ArgumentError("set is not a subset of [n-1]");
  Composition alpha;
  int last = 0;
  for (int x : s.members()) {
    alpha.parts.push_back(x + 1 - last);
    last = x + 1;
  }
  alpha.parts.push_back(n - last);
  return alpha;
}

Composition reverse(const Composition& alpha) {
  Composition r = alpha;
  std::reverse(r.parts.begin(), r.parts.end());
  return r;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  for (GenSet s : all_subsets(n - 1)) out.push_back(set_comp(s, n));
  return out;
}

}  // namespace zerohecke
