#pragma once

#include <map>
#include <optional>
#include <string>

#include "zerohecke/hecke_module.hpp"

namespace zerohecke {

/// N inside rad M. Throws ArgumentError if N is not a submodule.
template <class K>
bool is_superfluous(const HModule<K>& m, const Subspace<K>& n);

enum class Essential { essential, not_essential, improper };
const char* to_string(Essential e);

/// soc M inside N; N = M is reported as improper.
template <class K>
Essential is_essential(const HModule<K>& m, const Subspace<K>& n);

/// Sum over I of m_I copies of P_I.
template <class K>
HModule<K> projective_sum(GroupPtr group, const Multiplicities& mult);

template <class K>
struct CoverCertificate {
  Verdict status = Verdict::undetermined;
  Multiplicities cover;  // I -> number of copies of P_I
  std::optional<Matrix<K>> epi;
  bool kernel_in_radical = false;
};

template <class K>
CoverCertificate<K> projective_cover(const HModule<K>& m, std::uint64_t seed = 0);

/// The simple index of soc P_I for every I, computed on the group.
template <class K>
std::map<GenSet, GenSet> projective_socle_labels(GroupPtr group);

template <class K>
struct HullCertificate {
  Verdict status = Verdict::undetermined;
  Multiplicities hull;  // I -> number of copies of P_I
  std::optional<Matrix<K>> mono;
  bool socle_contained = false;
};

template <class K>
HullCertificate<K> injective_hull(const HModule<K>& m, std::uint64_t seed = 0);

enum class CheckStatus { pass, fail, precondition };
const char* to_string(CheckStatus s);

struct TheoremCheck {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Y an upper ideal of D_I^J with u_J not in Y: K Y lies in rad P_I^J.
template <class K>
TheoremCheck verify_cover_theorem(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y);

/// Y an upper ideal of D_I^J containing v_I: soc P_I^J lies in K Y.
template <class K>
TheoremCheck verify_hull_theorem(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y);

/// With u_J not in Y: every cover-path word from u_I to each y in Y uses a letter outside J.
TheoremCheck verify_path_lemma(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y);

}  // namespace zerohecke
