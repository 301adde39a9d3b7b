#include "zerohecke/homology.hpp"

#include <mutex>

namespace zerohecke {

const char* to_string(Essential e) {
  switch (e) {
    case Essential::essential: return "essential";
    case Essential::not_essential: return "not-essential";
    default: return "improper";
  }
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "precondition";
  }
}

template <class K>
bool is_superfluous(const HModule<K>& m, const Subspace<K>& n) {
  if (!is_invariant(m, n)) throw ArgumentError("subspace is not a submodule");
  return radical(m).contains(n);
}

template <class K>
Essential is_essential(const HModule<K>& m, const Subspace<K>& n) {
  if (!is_invariant(m, n)) throw ArgumentError("subspace is not a submodule");
  if (n.dim() == m.dim()) return Essential::improper;
  return n.contains(socle(m).space) ? Essential::essential : Essential::not_essential;
}

template <class K>
HModule<K> projective_sum(GroupPtr group, const Multiplicities& mult) {
  std::optional<HModule<K>> out;
  for (const auto& [I, k] : mult)
    for (int c = 0; c < k; ++c) {
      auto p = projective_module<K>(group, I, I);
      out = out ? direct_sum(*out, p) : p;
    }
  if (!out) throw ArgumentError("empty projective sum");
  return *out;
}

template <class K>
CoverCertificate<K> projective_cover(const HModule<K>& m, std::uint64_t seed) {
  if (m.dim() == 0) throw ArgumentError("projective cover of the zero module");
  CoverCertificate<K> out;
  out.cover = top(m);
  auto cover = projective_sum<K>(m.group_ptr(), out.cover);
  auto homs = hom_space(cover, m);
  auto rad_p = radical(cover), rad_m = radical(m);
  std::vector<Matrix<K>> tops;
  for (const auto& t : homs) tops.push_back(top_map(t, rad_p, rad_m));
  auto search = find_full_rank(tops, static_cast<std::size_t>(total(out.cover)), seed);
  out.status = search.status;
  if (search.status != Verdict::yes) return out;
  Matrix<K> epi = combine(homs, search.coeffs);
  if (rank(epi) != m.dim()) throw std::logic_error("surjective top map did not lift to an epimorphism");
  out.kernel_in_radical = rad_p.contains(kernel(epi));
  out.epi = std::move(epi);
  return out;
}

template <class K>
std::map<GenSet, GenSet> projective_socle_labels(GroupPtr group) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::string>, std::map<GenSet, GenSet>> cache;
  const auto key = std::make_pair(group->model().name(), K::field_name());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::map<GenSet, GenSet> out;
  for (GenSet I : all_subsets(group->rank())) {
    auto soc = socle(projective_module<K>(group, I, I)).multiplicities;
    if (total(soc) != 1) throw std::logic_error("socle of P" + to_string(I) + " is not simple");
    out[I] = soc.begin()->first;
  }
  std::lock_guard lock(mutex);
  cache[key] = out;
  return out;
}

template <class K>
HullCertificate<K> injective_hull(const HModule<K>& m, std::uint64_t seed) {
  if (m.dim() == 0) throw ArgumentError("injective hull of the zero module");
  HullCertificate<K> out;
  auto soc = socle(m);
  std::map<GenSet, GenSet> by_label;
  for (const auto& [I, label] : projective_socle_labels<K>(m.group_ptr())) by_label[label] = I;
  for (const auto& [label, k] : soc.multiplicities) out.hull[by_label.at(label)] += k;
  auto hull = projective_sum<K>(m.group_ptr(), out.hull);
  auto homs = hom_space(m, hull);
  std::vector<Matrix<K>> restricted;
  for (const auto& t : homs) restricted.push_back(socle_map(t, soc.space));
  auto search = find_full_rank(restricted, soc.space.dim(), seed);
  out.status = search.status;
  if (search.status != Verdict::yes) return out;
  Matrix<K> mono = combine(homs, search.coeffs);
  if (rank(mono) != m.dim()) throw std::logic_error("socle-injective map is not injective");
  out.socle_contained = image(mono).contains(socle(hull).space);
  out.mono = std::move(mono);
  return out;
}

template <class K>
TheoremCheck verify_cover_theorem(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y) {
  const auto [uJ, vJ] = group->descent_class_bounds(J);
  if (y.contains(uJ)) return {CheckStatus::precondition, "u_J lies in Y"};
  auto p = projective_module<K>(group, I, J);
  auto ky = ideal_subspace(p, y);
  if (!is_superfluous(p, ky)) return {CheckStatus::fail, "K Y is not contained in rad P_I^J"};
  return {};
}

template <class K>
TheoremCheck verify_hull_theorem(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y) {
  const auto [uI, vI] = group->descent_class_bounds(I);
  if (!y.contains(vI)) return {CheckStatus::precondition, "v_I is not in Y"};
  auto p = projective_module<K>(group, I, J);
  auto ky = ideal_subspace(p, y);
  if (!ky.contains(socle(p).space)) return {CheckStatus::fail, "soc P_I^J is not contained in K Y"};
  return {};
}

TheoremCheck verify_path_lemma(GroupPtr group, GenSet I, GenSet J, const UpperIdeal& y) {
  const GroupTable& g = *group;
  const auto [uI, vI] = g.descent_class_bounds(I);
  const auto [uJ, vJ] = g.descent_class_bounds(J);
  if (y.contains(uJ)) return {CheckStatus::precondition, "u_J lies in Y"};
  WeakInterval iv(group, uI, vJ);
  for (ElementId w : y.elements()) {
    bool outside = false;
    for (int s : iv.path_from_lo(w)) outside = outside || !J.contains(s);
    if (!outside) return {CheckStatus::fail, "path to " + g.label(w) + " stays inside J"};
  }
  return {};
}

#define ZEROHECKE_INSTANTIATE(K)                                                                        \
  template bool is_superfluous(const HModule<K>&, const Subspace<K>&);                                  \
  template Essential is_essential(const HModule<K>&, const Subspace<K>&);                               \
  template HModule<K> projective_sum<K>(GroupPtr, const Multiplicities&);                               \
  template CoverCertificate<K> projective_cover(const HModule<K>&, std::uint64_t);                      \
  template std::map<GenSet, GenSet> projective_socle_labels<K>(GroupPtr);                               \
  template HullCertificate<K> injective_hull(const HModule<K>&, std::uint64_t);                         \
  template TheoremCheck verify_cover_theorem<K>(GroupPtr, GenSet, GenSet, const UpperIdeal&);           \
  template TheoremCheck verify_hull_theorem<K>(GroupPtr, GenSet, GenSet, const UpperIdeal&);

ZEROHECKE_INSTANTIATE(Rational)
ZEROHECKE_INSTANTIATE(Fp)

#undef ZEROHECKE_INSTANTIATE

}  // namespace zerohecke
