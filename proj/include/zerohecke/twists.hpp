#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "zerohecke/hecke_module.hpp"

namespace zerohecke {

enum class Twist { phi, theta, chi, theta_hat, omega_hat };

std::string to_string(Twist t);
/// "phi", "theta", "chi", "theta_hat", "omega_hat".
Twist parse_twist(std::string_view text);

/// Matrix realisation: phi permutes the generators by w0-conjugation, theta
/// sends A to 1 - A, chi transposes; theta_hat and omega_hat compose them.
template <class K>
HModule<K> apply_twist(Twist tag, const HModule<K>& m);

/// Index pair (I', J') with tag[P_I^J] isomorphic to P_{I'}^{J'}.
std::pair<GenSet, GenSet> twisted_projective_index(Twist tag, const GroupTable& g, GenSet I, GenSet J);

/// The module the twist theorem predicts for tag applied to B(u,v)/K Y
/// (tags phi, theta_hat, omega_hat only).
template <class K>
HModule<K> predicted_twist_of_quotient(Twist tag, GroupPtr group, ElementId u, ElementId v, const UpperIdeal& y);

template <class K>
struct TwistCheck {
  Verdict status = Verdict::undetermined;
  bool explicit_witness = true;  // omega_hat only: the signed bijection intertwines
  std::string reason;
};

template <class K>
TwistCheck<K> verify_twist_theorem(Twist tag, GroupPtr group, ElementId u, ElementId v, const UpperIdeal& y,
                                   std::uint64_t seed = 0);

/// w* -> (-1)^{l(w w0 u^-1)} w0 w from omega_hat[B(u,v)/K Y] to the predicted module.
template <class K>
Matrix<K> omega_hat_bijection(const HModule<K>& twisted, const HModule<K>& predicted, ElementId u);

}  // namespace zerohecke
