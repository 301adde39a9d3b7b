#include "zerohecke/twists.hpp"

#include <algorithm>

namespace zerohecke {

std::string to_string(Twist t) {
  switch (t) {
    case Twist::phi: return "phi";
    case Twist::theta: return "theta";
    case Twist::chi: return "chi";
    case Twist::theta_hat: return "theta_hat";
    default: return "omega_hat";
  }
}

Twist parse_twist(std::string_view text) {
  for (Twist t : {Twist::phi, Twist::theta, Twist::chi, Twist::theta_hat, Twist::omega_hat})
    if (to_string(t) == text) return t;
  throw ArgumentError("unknown twist '" + std::string(text) + "'");
}

template <class K>
HModule<K> apply_twist(Twist tag, const HModule<K>& m) {
  const GroupTable& g = m.group();
  const auto one = Matrix<K>::identity(m.dim());
  std::vector<Matrix<K>> action;
  for (int s = 0; s < m.rank(); ++s) {
    const Matrix<K>& a = m.action(s);
    const Matrix<K>& conj = m.action(g.conj_w0_generator(s));
    switch (tag) {
      case Twist::phi: action.push_back(conj); break;
      case Twist::theta: action.push_back(one - a); break;
      case Twist::chi: action.push_back(a.transpose()); break;
      case Twist::theta_hat: action.push_back((one - a).transpose()); break;
      case Twist::omega_hat: action.push_back((one - conj).transpose()); break;
    }
  }
  bool dual = tag == Twist::chi || tag == Twist::theta_hat || tag == Twist::omega_hat;
  std::vector<std::string> labels;
  for (const auto& l : m.labels()) labels.push_back(dual ? l + "*" : l);
  return HModule<K>(m.group_ptr(), std::move(action), std::move(labels));
}

std::pair<GenSet, GenSet> twisted_projective_index(Twist tag, const GroupTable& g, GenSet I, GenSet J) {
  const int r = g.rank();
  switch (tag) {
    case Twist::phi: return {g.conj_w0_set(I), g.conj_w0_set(J)};
    case Twist::theta_hat: return {g.conj_w0_set(J).complement(r), g.conj_w0_set(I).complement(r)};
    case Twist::omega_hat: return {J.complement(r), I.complement(r)};
    default: throw ArgumentError("no projective prediction for twist " + to_string(tag));
  }
}

namespace {

std::vector<ElementId> complement_in(const WeakInterval& iv, const std::vector<ElementId>& removed) {
  std::vector<ElementId> sorted = removed, out;
  std::sort(sorted.begin(), sorted.end());
  for (ElementId w : iv.members())
    if (!std::binary_search(sorted.begin(), sorted.end(), w)) out.push_back(w);
  return out;
}

}  // namespace

template <class K>
HModule<K> predicted_twist_of_quotient(Twist tag, GroupPtr group, ElementId u, ElementId v, const UpperIdeal& y) {
  const GroupTable& g = *group;
  const ElementId w0 = g.longest();
  std::vector<ElementId> image;
  switch (tag) {
    case Twist::phi: {
      auto iv = interval(group, g.conj_w0(u), g.conj_w0(v));
      for (ElementId w : y.elements()) image.push_back(g.conj_w0(w));
      return quotient_by_ideal(interval_module<K>(iv), UpperIdeal(iv, image));
    }
    case Twist::theta_hat: {
      // Right multiplication by w0 reverses the order, so Y w0 is a lower set.
      auto iv = interval(group, g.multiply(v, w0), g.multiply(u, w0));
      for (ElementId w : y.elements()) image.push_back(g.multiply(w, w0));
      return submodule_from_ideal(interval_module<K>(iv), UpperIdeal(iv, complement_in(iv, image)));
    }
    case Twist::omega_hat: {
      auto iv = interval(group, g.multiply(w0, v), g.multiply(w0, u));
      for (ElementId w : y.elements()) image.push_back(g.multiply(w0, w));
      return submodule_from_ideal(interval_module<K>(iv), UpperIdeal(iv, complement_in(iv, image)));
    }
    default: throw ArgumentError("no interval prediction for twist " + to_string(tag));
  }
}

template <class K>
Matrix<K> omega_hat_bijection(const HModule<K>& twisted, const HModule<K>& predicted, ElementId u) {
  const GroupTable& g = twisted.group();
  const ElementId w0 = g.longest(), u_inv = g.inverse(u);
  Matrix<K> f(predicted.dim(), twisted.dim());
  for (std::size_t j = 0; j < twisted.dim(); ++j) {
    ElementId w = twisted.elements()[j];
    int len = g.length(g.multiply(g.multiply(w, w0), u_inv));
    f(predicted.position(g.multiply(w0, w)), j) = len % 2 == 0 ? K(1) : K(-1);
  }
  return f;
}

template <class K>
TwistCheck<K> verify_twist_theorem(Twist tag, GroupPtr group, ElementId u, ElementId v, const UpperIdeal& y,
                                   std::uint64_t seed) {
  TwistCheck<K> out;
  auto quot = quotient_by_ideal(interval_module<K>(group, u, v), y);
  auto twisted = apply_twist(tag, quot);
  auto predicted = predicted_twist_of_quotient<K>(tag, group, u, v, y);
  if (!verify_relations(twisted).ok) {
    out.status = Verdict::no;
    out.reason = "twisted module fails the relations";
    return out;
  }
  auto iso = is_isomorphic(twisted, predicted, seed);
  out.status = iso.status;
  out.reason = iso.reason;
  if (tag == Twist::omega_hat) {
    twisted.set_elements(quot.elements());
    auto f = omega_hat_bijection(twisted, predicted, u);
    bool ok = is_invertible(f);
    for (int s = 0; s < twisted.rank() && ok; ++s) ok = f * twisted.action(s) == predicted.action(s) * f;
    out.explicit_witness = ok;
    if (!ok) {
      out.status = Verdict::no;
      out.reason = "signed bijection is not an intertwiner";
    }
  }
  return out;
}

#define ZEROHECKE_INSTANTIATE(K)                                                                                    \
  template HModule<K> apply_twist(Twist, const HModule<K>&);                                                        \
  template HModule<K> predicted_twist_of_quotient<K>(Twist, GroupPtr, ElementId, ElementId, const UpperIdeal&);     \
  template TwistCheck<K> verify_twist_theorem<K>(Twist, GroupPtr, ElementId, ElementId, const UpperIdeal&,          \
                                                 std::uint64_t);                                                    \
  template Matrix<K> omega_hat_bijection(const HModule<K>&, const HModule<K>&, ElementId);

ZEROHECKE_INSTANTIATE(Rational)
ZEROHECKE_INSTANTIATE(Fp)

#undef ZEROHECKE_INSTANTIATE

}  // namespace zerohecke
