#pragma once

#include <string>
#include <vector>

#include "zerohecke/combinatorics.hpp"
#include "zerohecke/hecke_module.hpp"

namespace zerohecke {

// Naming follows V = dual immaculate, X = extended Schur, W = row-strict dual
// immaculate, Z = row-strict extended Schur. Some sources swap V and W.

/// A filling of the left-justified diagram of a composition, rows top to bottom.
struct Tableau {
  Composition shape;
  std::vector<std::vector<int>> rows;

  int size() const { return shape.size(); }
  /// "(12)(34)"; entries are comma separated once n exceeds 9.
  std::string str() const;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

inline constexpr int kDefaultMaxComposition = 8;

/// Rows increase left to right and the first column increases downward.
bool is_SIT(const Tableau& t);
/// SIT and every column increases downward.
bool is_SET(const Tableau& t);

/// Lexicographic in the row-by-row entry sequence. Throws OverflowError if |alpha| > max_n.
std::vector<Tableau> enumerate_SIT(const Composition& alpha, int max_n = kDefaultMaxComposition);
std::vector<Tableau> enumerate_SET(const Composition& alpha, int max_n = kDefaultMaxComposition);

struct SpecialTableaux {
  Tableau t0;        // rows filled consecutively from the top
  Tableau t1;        // first column, then the remaining cells row by row from the bottom
  Tableau curly_t1;  // column by column, left to right
};
SpecialTableaux special_tableaux(const Composition& alpha);

/// Rows read right to left, top row first.
Form rw(const Tableau& t);
/// Rows read left to right, bottom row first.
Form rw_R(const Tableau& t);

/// Every ascent pair of v is an ascent pair of u (one-line permutations).
bool ascent_pair_leq(const Form& u, const Form& v);

/// The symmetric group S_n as the type A_{n-1} Coxeter group.
GroupPtr symmetric_group(int n);

template <class K>
HModule<K> build_V(GroupPtr group, const Composition& alpha);
template <class K>
HModule<K> build_X(GroupPtr group, const Composition& alpha);
/// W and Z as interval modules on row-strict reading words.
template <class K>
HModule<K> build_W(GroupPtr group, const Composition& alpha);
template <class K>
HModule<K> build_Z(GroupPtr group, const Composition& alpha);
/// W (extended = false) or Z (extended = true) on tableaux: pi_i fixes T when
/// i+1 is strictly below i, kills it in the same row, and swaps i, i+1 when
/// i+1 is strictly above.
template <class K>
HModule<K> tableau_module(GroupPtr group, const Composition& alpha, bool extended);

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Section5Report {
  Composition alpha;
  std::vector<CheckLine> lines;
  bool ok() const;
};

template <class K>
Section5Report verify_section5(const Composition& alpha, std::uint64_t seed = 0);

template <class K>
struct CoverWResult {
  Multiplicities predicted;  // from the supplied classes
  Multiplicities computed;   // from projective_cover(W)
  bool match = false;
};

/// Compares the sum over beta in classes of P_{set(beta^r)} with the computed cover of W.
template <class K>
CoverWResult<K> cover_W(const Composition& alpha, const std::vector<Composition>& classes, std::uint64_t seed = 0);

}  // namespace zerohecke
