#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zerohecke/errors.hpp"

namespace zerohecke {

/// Dense index of a group element; 0 is always the identity.
using ElementId = std::uint32_t;

/// A subset of the simple generators S, one bit per generator index.
/// Generator indices are 0-based internally and printed 1-based (s1, s2, ...).
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}

  static GenSet full(int rank) { return GenSet(rank >= 32 ? ~0u : (1u << rank) - 1u); }
  /// Builds a set from 1-based generator numbers, matching the printed form.
  static GenSet of(std::initializer_list<int> one_based);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }

  GenSet with(int s) const { return GenSet(bits_ | (1u << s)); }
  GenSet complement(int rank) const { return GenSet(full(rank).bits_ & ~bits_); }
  std::vector<int> members() const;

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(GenSet, GenSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// "{1,3}" with 1-based generator numbers; "{}" for the empty set.
std::string to_string(GenSet s);

/// Parses "{1,3}", "1,3" or "{}". Throws ArgumentError for generators outside 1..rank.
GenSet parse_genset(std::string_view text, int rank);

/// All subsets of a rank-r generating set, in bitmask order.
std::vector<GenSet> all_subsets(int rank);

enum class CoxeterType { A, B, D, I2 };

/// A supported finite Coxeter type: A_n, B_n, D_n or I2(m).
struct ModelSpec {
  CoxeterType type = CoxeterType::A;
  int param = 1;  // n for A/B/D, m for I2

  int rank() const { return type == CoxeterType::I2 ? 2 : param; }
  /// "A3", "B4", "D4", "I2:7".
  std::string name() const;
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// Parses "A3", "B4", "D4", "I2:7". Throws ConfigError on anything else.
ModelSpec parse_model(std::string_view text);

/// Canonical form of a group element in a concrete model.
using Form = std::vector<int>;

/// A concrete faithful model of (W,S): canonical forms plus the left and
/// right actions of each generator on them. The builder only sees this
/// interface, so further types can be plugged in without touching it.
struct CoxeterModel {
  ModelSpec spec;
  std::vector<std::vector<int>> coxeter_matrix;
  Form identity;
  std::function<void(int s, Form&)> left_act;   // w -> s w
  std::function<void(Form&, int s)> right_act;  // w -> w s
  std::function<std::string(const Form&)> label;
  std::function<std::optional<Form>(std::string_view)> parse_label;
};

CoxeterModel make_model(const ModelSpec& spec);

/// Fully enumerated finite Coxeter group. Immutable once built.
class GroupTable {
 public:
  const ModelSpec& model() const { return model_.spec; }
  std::size_t size() const { return forms_.size(); }
  int rank() const { return rank_; }
  int coxeter_m(int s, int t) const { return model_.coxeter_matrix[s][t]; }
  GenSet all_generators() const { return GenSet::full(rank_); }

  ElementId identity() const { return 0; }
  ElementId generator(int s) const { return left_[index(s, 0)]; }
  ElementId longest() const { return longest_; }

  ElementId left_mul(int s, ElementId w) const { return left_[index(s, w)]; }
  ElementId right_mul(ElementId w, int s) const { return right_[static_cast<std::size_t>(w) * rank_ + s]; }
  ElementId multiply(ElementId w, ElementId x) const;
  ElementId inverse(ElementId w) const { return inverse_[w]; }

  int length(ElementId w) const { return length_[w]; }
  GenSet left_descents(ElementId w) const { return left_desc_[w]; }
  GenSet right_descents(ElementId w) const { return right_desc_[w]; }

  /// One reduced word s_1 ... s_k with w = s_1 ... s_k (0-based generators).
  std::vector<int> word(ElementId w) const;

  const Form& form(ElementId w) const { return forms_[w]; }
  std::string label(ElementId w) const { return model_.label(forms_[w]); }
  std::optional<ElementId> find(const Form& f) const;
  std::optional<ElementId> find_label(std::string_view text) const;
  /// Like find_label but throws ArgumentError for unknown labels.
  ElementId element(std::string_view text) const;

  ElementId longest_parabolic(GenSet I) const;
  /// (u_I, v_I): shortest and longest elements with right descent set I.
  std::pair<ElementId, ElementId> descent_class_bounds(GenSet I) const;
  std::vector<ElementId> descent_class(GenSet I) const;
  /// Elements with I <= D_R(w) <= J, ordered by (length, id).
  std::vector<ElementId> descent_union(GenSet I, GenSet J) const;

  int conj_w0_generator(int s) const { return conj_gen_[s]; }
  ElementId conj_w0(ElementId w) const;
  GenSet conj_w0_set(GenSet I) const;

  friend GroupTable build_group(const CoxeterModel& model, std::size_t max_size);

 private:
  std::size_t index(int s, ElementId w) const { return static_cast<std::size_t>(s) * forms_.size() + w; }

  struct FormHash {
    std::size_t operator()(const Form& f) const noexcept;
  };

  CoxeterModel model_;
  int rank_ = 0;
  std::vector<Form> forms_;
  std::unordered_map<Form, ElementId, FormHash> lookup_;
  std::vector<ElementId> left_;    // [s * size + w]
  std::vector<ElementId> right_;   // [w * rank + s]
  std::vector<ElementId> inverse_;
  std::vector<int> length_;
  std::vector<GenSet> left_desc_;
  std::vector<GenSet> right_desc_;
  std::vector<std::pair<int, ElementId>> parent_;  // w = s * parent
  std::vector<int> conj_gen_;
  ElementId longest_ = 0;
};

inline constexpr std::size_t kDefaultMaxGroupSize = 1'000'000;

/// Breadth-first closure from the identity under left multiplication by the
/// generators. Element ids follow BFS order, so id 0 is the identity and
/// lengths are BFS depths. Throws OverflowError past max_size elements.
GroupTable build_group(const CoxeterModel& model, std::size_t max_size = kDefaultMaxGroupSize);
GroupTable build_group(const ModelSpec& spec, std::size_t max_size = kDefaultMaxGroupSize);

using GroupPtr = std::shared_ptr<const GroupTable>;
GroupPtr make_group(std::string_view model_spec, std::size_t max_size = kDefaultMaxGroupSize);

}  // namespace zerohecke
