#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zerohecke/coxeter.hpp"

namespace zerohecke {

/// A composition of n: a nonempty list of positive parts.
struct Composition {
  std::vector<int> parts;

  int size() const;  // n = sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  /// "(1,4,3)".
  std::string str() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Parses "1,4,3" (parentheses optional). Throws ArgumentError.
Composition parse_composition(std::string_view text);

/// set(alpha) = {a1, a1+a2, ...} as a subset of [n-1], i.e. of the generators of A_{n-1}.
GenSet comp_set(const Composition& alpha);
/// Inverse of comp_set.
Composition set_comp(GenSet s, int n);
Composition reverse(const Composition& alpha);

/// All compositions of n, ordered by their set bitmask.
std::vector<Composition> compositions(int n);

}  // namespace zerohecke
