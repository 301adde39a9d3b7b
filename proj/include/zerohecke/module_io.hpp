#pragma once

#include <string>

#include "zerohecke/hecke_module.hpp"

namespace zerohecke {

/// {group, field, dim, labels, action: {"s1": [row-major scalars], ...}}.
template <class K>
std::string module_to_json(const HModule<K>& m);

/// Reads module_to_json output. The field recorded in the text must be K
/// (and, for Fp, the current modulus).
template <class K>
HModule<K> module_from_json(const std::string& text);

/// Action digraph: an edge w -> pi_s(w) per generator, loops for fixed
/// vectors and, when zero_sink is set, edges into a "0" node.
template <class K>
std::string module_digraph_dot(const HModule<K>& m, bool zero_sink = true);

/// {model, size, elements: [{id, label, word, length, dl, dr}]}.
std::string group_to_json(const GroupTable& g);

/// The left weak order of the whole group, each right descent class in its own colour (singletons white).
std::string descent_classes_dot(const GroupTable& g);

/// P_I, P_{w0Iw0}, P_{S-w0Iw0} and P_{S-I} joined by phi, theta_hat and
/// omega_hat; every edge is confirmed by an isomorphism check.
std::string twist_square_dot(GroupPtr group, GenSet I);

}  // namespace zerohecke
