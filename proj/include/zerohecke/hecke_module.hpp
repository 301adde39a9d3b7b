#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerohecke/combinatorics.hpp"
#include "zerohecke/coxeter.hpp"
#include "zerohecke/matrix.hpp"
#include "zerohecke/weak_order.hpp"

namespace zerohecke {

/// A finite-dimensional H_W(0)-module: one matrix per generator, acting on
/// column vectors (column j is the image of basis vector j).
template <class K>
class HModule {
 public:
  HModule() = default;
  HModule(GroupPtr group, std::vector<Matrix<K>> action, std::vector<std::string> labels = {});

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t dim() const { return dim_; }
  int rank() const { return static_cast<int>(action_.size()); }
  const Matrix<K>& action(int s) const { return action_[s]; }
  const std::vector<Matrix<K>>& actions() const { return action_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Group elements indexing the basis, for modules built on an interval or
  /// descent class; empty otherwise.
  const std::vector<ElementId>& elements() const { return elements_; }
  void set_elements(std::vector<ElementId> elements);
  std::size_t position(ElementId w) const;

  /// Test hook: overwrite one action entry.
  void corrupt(int s, std::size_t i, std::size_t j, const K& value) { action_[s](i, j) = value; }

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix<K>> action_;
  std::vector<std::string> labels_;
  std::vector<ElementId> elements_;
};

/// Multiplicities of simple modules, keyed by their index I (pi_s acts by 1 exactly on I).
using Multiplicities = std::map<GenSet, int>;

int total(const Multiplicities& m);
std::string to_string(const Multiplicities& m);

enum class Verdict { yes, no, undetermined };
const char* to_string(Verdict v);

template <class K>
HModule<K> interval_module(const WeakInterval& iv);
template <class K>
HModule<K> interval_module(GroupPtr group, ElementId u, ElementId v);
/// Basis D_I^J, with pi_s w = s w when s is not a left descent and D_R(s w) is inside J.
template <class K>
HModule<K> projective_module(GroupPtr group, GenSet I, GenSet J);
template <class K>
HModule<K> simple_module(GroupPtr group, GenSet I);

struct RelationCheck {
  bool ok = true;
  std::string witness;
};
/// Idempotence and braid relations, checked exactly.
template <class K>
RelationCheck verify_relations(const HModule<K>& m);

template <class K>
bool is_invariant(const HModule<K>& m, const Subspace<K>& n);
/// Restriction to an invariant subspace, in its echelon basis.
template <class K>
HModule<K> submodule(const HModule<K>& m, const Subspace<K>& n);
/// Quotient by an invariant subspace; basis = the unit vectors off the pivots of n.
template <class K>
HModule<K> quotient(const HModule<K>& m, const Subspace<K>& n);
/// Span of the ideal's basis vectors inside an interval-type module.
template <class K>
Subspace<K> ideal_subspace(const HModule<K>& m, const UpperIdeal& y);
template <class K>
HModule<K> submodule_from_ideal(const HModule<K>& m, const UpperIdeal& y);
template <class K>
HModule<K> quotient_by_ideal(const HModule<K>& m, const UpperIdeal& y);
template <class K>
HModule<K> direct_sum(const HModule<K>& a, const HModule<K>& b);

/// Basis of Hom(M, N) as dim N x dim M matrices T with T A_s = B_s T, echelonized.
template <class K>
std::vector<Matrix<K>> hom_space(const HModule<K>& m, const HModule<K>& n);

/// Functionals f with f A_s = [s in I] f, as rows.
template <class K>
Subspace<K> functionals_to_simple(const HModule<K>& m, GenSet I);
/// {v : A_s v = [s in I] v}.
template <class K>
Subspace<K> joint_eigenspace(const HModule<K>& m, GenSet I);

template <class K>
Multiplicities top(const HModule<K>& m);
template <class K>
Subspace<K> radical(const HModule<K>& m);

template <class K>
struct SocleInfo {
  Subspace<K> space;
  Multiplicities multiplicities;
};
template <class K>
SocleInfo<K> socle(const HModule<K>& m);

template <class K>
Multiplicities composition_factors(const HModule<K>& m);
/// Type A only: each factor I becomes the composition alpha with set(alpha) = I.
template <class K>
std::map<Composition, int> characteristic(const HModule<K>& m);

/// Matrix of the map M/rad M -> N/rad N induced by t, in the quotient bases.
template <class K>
Matrix<K> top_map(const Matrix<K>& t, const Subspace<K>& rad_m, const Subspace<K>& rad_n);
/// t restricted to the columns spanning soc M.
template <class K>
Matrix<K> socle_map(const Matrix<K>& t, const Subspace<K>& soc_m);

template <class K>
struct RankSearch {
  Verdict status = Verdict::undetermined;
  std::vector<K> coeffs;
};
/// Looks for a combination of mats of rank target: basis elements first,
/// then seeded random combinations, then (for few enough mats) every point
/// of the grid {0..target}^k, whose exhaustion proves no combination exists.
template <class K>
RankSearch<K> find_full_rank(const std::vector<Matrix<K>>& mats, std::size_t target, std::uint64_t seed);

template <class K>
Matrix<K> combine(const std::vector<Matrix<K>>& mats, const std::vector<K>& coeffs);

template <class K>
struct IsoResult {
  Verdict status = Verdict::undetermined;
  std::optional<Matrix<K>> witness;  // N <- M
  std::string reason;
};
template <class K>
IsoResult<K> is_isomorphic(const HModule<K>& m, const HModule<K>& n, std::uint64_t seed = 0);

enum class Indecomposability { certified_yes, decomposable, probable_yes };
const char* to_string(Indecomposability v);

template <class K>
struct IndecResult {
  Indecomposability status = Indecomposability::probable_yes;
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;  // of the nilpotent ideal found inside End
  std::vector<std::size_t> split_dims;
};
template <class K>
IndecResult<K> is_indecomposable(const HModule<K>& m, std::uint64_t seed = 0);

/// Summands in order of discovery; each one had no split found.
template <class K>
std::vector<HModule<K>> decompose(const HModule<K>& m, std::uint64_t seed = 0);

}  // namespace zerohecke
