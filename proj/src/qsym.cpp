#include "zerohecke/qsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "zerohecke/homology.hpp"
#include "zerohecke/twists.hpp"

namespace zerohecke {

std::string Tableau::str() const {
  const bool compact = size() <= 9;
  std::string out;
  for (const auto& row : rows) {
    out += '(';
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j && !compact) out += ',';
      out += std::to_string(row[j]);
    }
    out += ')';
  }
  return out;
}

bool is_SIT(const Tableau& t) {
  std::vector<int> seen(t.size() + 1, 0);
  if (t.rows.size() != t.shape.parts.size()) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape.parts[i]) return false;
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      int x = t.rows[i][j];
      if (x < 1 || x > t.size() || seen[x]++) return false;
      if (j > 0 && t.rows[i][j - 1] >= x) return false;
    }
    if (i > 0 && t.rows[i - 1][0] >= t.rows[i][0]) return false;
  }
  return true;
}

bool is_SET(const Tableau& t) {
  if (!is_SIT(t)) return false;
  // Columns may skip shorter rows; compare each cell with the last one above it.
  std::vector<int> above;
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j < above.size() && above[j] >= row[j]) return false;
      if (j < above.size()) above[j] = row[j];
      else above.push_back(row[j]);
    }
  }
  return true;
}

std::vector<Tableau> enumerate_SIT(const Composition& alpha, int max_n) {
  const int n = alpha.size();
  if (n > max_n) throw OverflowError("composition size " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < alpha.length(); ++i)
    for (int j = 0; j < alpha.parts[i]; ++j) cells.emplace_back(i, j);
  Tableau t{alpha, {}};
  for (int part : alpha.parts) t.rows.emplace_back(part, 0);
  std::vector<char> used(n + 1, 0);
  std::vector<Tableau> out;
  auto place = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = cells[k];
    int floor = 0;
    if (j > 0) floor = t.rows[i][j - 1];
    if (j == 0 && i > 0) floor = t.rows[i - 1][0];
    for (int x = floor + 1; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      t.rows[i][j] = x;
      self(self, k + 1);
      used[x] = 0;
    }
  };
  place(place, 0);
  return out;
}

std::vector<Tableau> enumerate_SET(const Composition& alpha, int max_n) {
  auto all = enumerate_SIT(alpha, max_n);
  std::vector<Tableau> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), is_SET);
  return out;
}

SpecialTableaux special_tableaux(const Composition& alpha) {
  SpecialTableaux out{{alpha, {}}, {alpha, {}}, {alpha, {}}};
  for (int part : alpha.parts) {
    out.t0.rows.emplace_back(part, 0);
    out.t1.rows.emplace_back(part, 0);
    out.curly_t1.rows.emplace_back(part, 0);
  }
  int next = 1;
  for (auto& row : out.t0.rows)
    for (int& x : row) x = next++;

  next = 1;
  for (auto& row : out.t1.rows) row[0] = next++;
  for (auto it = out.t1.rows.rbegin(); it != out.t1.rows.rend(); ++it)
    for (std::size_t j = 1; j < it->size(); ++j) (*it)[j] = next++;

  next = 1;
  const int width = *std::max_element(alpha.parts.begin(), alpha.parts.end());
  for (int j = 0; j < width; ++j)
    for (auto& row : out.curly_t1.rows)
      if (j < static_cast<int>(row.size())) row[j] = next++;
  return out;
}

Form rw(const Tableau& t) {
  Form out;
  for (const auto& row : t.rows) out.insert(out.end(), row.rbegin(), row.rend());
  return out;
}

Form rw_R(const Tableau& t) {
  Form out;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

bool ascent_pair_leq(const Form& u, const Form& v) {
  if (u.size() != v.size()) throw ArgumentError("permutations of different sizes");
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] < v[j] && !(u[i] < u[j])) return false;
  return true;
}

GroupPtr symmetric_group(int n) {
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const GroupTable>(build_group(ModelSpec{CoxeterType::A, n - 1}));
  return slot;
}

namespace {

void check_group(const GroupPtr& group, const Composition& alpha) {
  if (group->model().type != CoxeterType::A || group->rank() + 1 != alpha.size())
    throw ArgumentError("composition " + alpha.str() + " needs the group S_" + std::to_string(alpha.size()));
}

ElementId element_of(const GroupPtr& group, const Form& f) {
  auto id = group->find(f);
  if (!id) throw std::logic_error("reading word is not a permutation");
  return *id;
}

}  // namespace

template <class K>
HModule<K> build_V(GroupPtr group, const Composition& alpha) {
  check_group(group, alpha);
  auto sp = special_tableaux(alpha);
  return interval_module<K>(group, element_of(group, rw(sp.t0)), element_of(group, rw(sp.t1)));
}

template <class K>
HModule<K> build_X(GroupPtr group, const Composition& alpha) {
  check_group(group, alpha);
  auto sp = special_tableaux(alpha);
  return interval_module<K>(group, element_of(group, rw(sp.t0)), element_of(group, rw(sp.curly_t1)));
}

template <class K>
HModule<K> build_W(GroupPtr group, const Composition& alpha) {
  check_group(group, alpha);
  auto sp = special_tableaux(alpha);
  return interval_module<K>(group, element_of(group, rw_R(sp.t1)), element_of(group, rw_R(sp.t0)));
}

template <class K>
HModule<K> build_Z(GroupPtr group, const Composition& alpha) {
  check_group(group, alpha);
  auto sp = special_tableaux(alpha);
  return interval_module<K>(group, element_of(group, rw_R(sp.curly_t1)), element_of(group, rw_R(sp.t0)));
}

template <class K>
HModule<K> tableau_module(GroupPtr group, const Composition& alpha, bool extended) {
  check_group(group, alpha);
  const int n = alpha.size();
  auto basis = extended ? enumerate_SET(alpha, n) : enumerate_SIT(alpha, n);
  std::map<Tableau, std::size_t> pos;
  for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
  std::vector<Matrix<K>> action;
  for (int s = 0; s < n - 1; ++s) {
    const int i = s + 1;
    Matrix<K> a(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Tableau& t = basis[k];
      int row_i = -1, row_next = -1;
      for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
        for (int x : t.rows[r]) {
          if (x == i) row_i = r;
          if (x == i + 1) row_next = r;
        }
      if (row_next > row_i) {
        a(k, k) = K(1);
      } else if (row_next < row_i) {
        Tableau swapped = t;
        for (auto& row : swapped.rows)
          for (int& x : row) x = x == i ? i + 1 : x == i + 1 ? i : x;
        auto it = pos.find(swapped);
        if (it != pos.end()) a(it->second, k) = K(1);
      }
    }
    action.push_back(std::move(a));
  }
  std::vector<std::string> labels;
  std::vector<ElementId> elements;
  for (const auto& t : basis) {
    labels.push_back(t.str());
    elements.push_back(element_of(group, rw_R(t)));
  }
  HModule<K> m(group, std::move(action), std::move(labels));
  m.set_elements(std::move(elements));
  return m;
}

bool Section5Report::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

namespace {

// Same module up to the basis bijection given by the element labels.
template <class K>
bool equal_on_elements(const HModule<K>& a, const HModule<K>& b) {
  if (a.dim() != b.dim() || a.elements().size() != a.dim() || b.elements().size() != b.dim()) return false;
  std::vector<std::size_t> perm(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto it = std::find(b.elements().begin(), b.elements().end(), a.elements()[k]);
    if (it == b.elements().end()) return false;
    perm[k] = static_cast<std::size_t>(it - b.elements().begin());
  }
  for (int s = 0; s < a.rank(); ++s)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!(a.action(s)(i, j) == b.action(s)(perm[i], perm[j]))) return false;
  return true;
}

}  // namespace

template <class K>
Section5Report verify_section5(const Composition& alpha, std::uint64_t seed) {
  Section5Report rep{alpha, {}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.lines.push_back({std::move(name), ok, std::move(detail)});
  };
  const int n = alpha.size();
  auto group = symmetric_group(n);
  const GroupTable& g = *group;
  const int r = g.rank();
  const GenSet set_a = comp_set(alpha), set_ar = comp_set(reverse(alpha));
  const GenSet cover_index = set_a.complement(r);

  std::uint32_t reflected = 0;
  for (int x : set_a.members()) reflected |= 1u << (n - (x + 1) - 1);
  add("set(alpha^r) = {n - x : x in set(alpha)}", GenSet(reflected) == set_ar);
  add("(w0 set(alpha)^c w0)^c = set(alpha^r)", g.conj_w0_set(cover_index).complement(r) == set_ar);

  auto sp = special_tableaux(alpha);
  auto sit = enumerate_SIT(alpha, n);
  auto set_tab = enumerate_SET(alpha, n);
  add("T0, curlyT1 in SET and T1 in SIT", is_SET(sp.t0) && is_SET(sp.curly_t1) && is_SIT(sp.t1));

  const auto [u_cov, v_cov] = g.descent_class_bounds(cover_index);
  const auto [u_hull, v_hull] = g.descent_class_bounds(set_ar);
  add("rw(T0) = u_{set(alpha)^c}", element_of(group, rw(sp.t0)) == u_cov, g.label(element_of(group, rw(sp.t0))));
  add("rw_R(T0) = v_{set(alpha^r)}", element_of(group, rw_R(sp.t0)) == v_hull,
      g.label(element_of(group, rw_R(sp.t0))));

  bool words = true;
  std::vector<ElementId> readings;
  for (const auto& t : sit) {
    ElementId a = element_of(group, rw_R(t));
    words = words && a == g.multiply(element_of(group, rw(t)), g.longest());
    readings.push_back(a);
  }
  add("rw_R(T) = rw(T) w0 on SIT", words);
  WeakInterval w_iv(group, element_of(group, rw_R(sp.t1)), v_hull);
  std::vector<ElementId> members = w_iv.members();
  std::sort(members.begin(), members.end());
  std::sort(readings.begin(), readings.end());
  bool descents = std::all_of(readings.begin(), readings.end(),
                              [&](ElementId w) { return g.right_descents(w) == set_ar; });
  add("{rw_R(T)} = [rw_R(T1), rw_R(T0)]_L with right descents set(alpha^r)", members == readings && descents);

  auto v = build_V<K>(group, alpha), x = build_X<K>(group, alpha);
  auto w = build_W<K>(group, alpha), z = build_Z<K>(group, alpha);
  add("dim V = |SIT|, dim W = |SIT|, dim X = dim Z = |SET|",
      v.dim() == sit.size() && w.dim() == sit.size() && x.dim() == set_tab.size() && z.dim() == set_tab.size(),
      std::to_string(sit.size()) + "/" + std::to_string(set_tab.size()));

  bool relations = true;
  for (const auto* m : {&v, &x, &w, &z}) relations = relations && verify_relations(*m).ok;
  add("relations hold on V, X, W, Z", relations);

  add("W: tableau action equals interval action", equal_on_elements(tableau_module<K>(group, alpha, false), w));
  add("Z: tableau action equals interval action", equal_on_elements(tableau_module<K>(group, alpha, true), z));

  // V, X as quotients of P_{set(alpha)^c}; W, Z as submodules of P_{set(alpha^r)}.
  auto p_cov = projective_module<K>(group, cover_index, cover_index);
  WeakInterval cov_iv(group, u_cov, v_cov);
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"V", &v}, {"X", &x}}) {
    ElementId top_el = m->elements().back();
    bool ok = cov_iv.contains(top_el) && m->elements().front() == u_cov;
    if (ok) ok = equal_on_elements(quotient_by_ideal(p_cov, complement_ideal(cov_iv, top_el)), *m);
    add(std::string(name) + " is a quotient of P_{set(alpha)^c}", ok);
  }
  auto p_hull = projective_module<K>(group, set_ar, set_ar);
  WeakInterval hull_iv(group, u_hull, v_hull);
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"W", &w}, {"Z", &z}}) {
    bool ok = std::all_of(m->elements().begin(), m->elements().end(), [&](ElementId e) { return hull_iv.contains(e); });
    ok = ok && is_upper_ideal(hull_iv, m->elements());
    if (ok) ok = equal_on_elements(submodule_from_ideal(p_hull, UpperIdeal(hull_iv, m->elements())), *m);
    add(std::string(name) + " is a submodule of P_{set(alpha^r)}", ok);
  }

  auto certify = [&](const std::string& name, const HModule<K>& m) {
    auto res = is_indecomposable(m, seed);
    add("indecomposable " + name, res.status == Indecomposability::certified_yes, to_string(res.status));
  };
  certify("V", v);
  certify("X", x);
  certify("W", w);
  certify("Z", z);
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"V", &v}, {"X", &x}}) {
    WeakInterval iv(group, m->elements().front(), m->elements().back());
    for (std::uint64_t k = 0; k < 3; ++k) {
      auto y = random_upper_ideal(iv, seed + k);
      if (y.contains(iv.lo())) continue;
      certify("quotient of " + std::string(name) + " by ideal of size " + std::to_string(y.size()),
              quotient_by_ideal(*m, y));
    }
  }
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"W", &w}, {"Z", &z}}) {
    WeakInterval iv(group, m->elements().front(), m->elements().back());
    for (std::uint64_t k = 0; k < 3; ++k) {
      auto y = random_upper_ideal(iv, seed + k);
      if (y.empty()) continue;
      certify("submodule of " + std::string(name) + " of size " + std::to_string(y.size()), submodule_from_ideal(*m, y));
    }
  }

  const Multiplicities want_cover{{cover_index, 1}}, want_hull{{set_ar, 1}};
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"V", &v}, {"X", &x}}) {
    auto c = projective_cover(*m, seed);
    add("cover(" + std::string(name) + ") = P_{set(alpha)^c}",
        c.status == Verdict::yes && c.cover == want_cover && c.kernel_in_radical, to_string(c.cover));
  }
  for (const auto& [name, m] : {std::pair<const char*, const HModule<K>*>{"W", &w}, {"Z", &z}}) {
    auto h = injective_hull(*m, seed);
    add("hull(" + std::string(name) + ") = P_{set(alpha^r)}",
        h.status == Verdict::yes && h.hull == want_hull && h.socle_contained, to_string(h.hull));
  }

  auto iso_w = is_isomorphic(w, apply_twist(Twist::theta_hat, v), seed);
  add("W = theta_hat[V]", iso_w.status == Verdict::yes, iso_w.reason);
  auto iso_z = is_isomorphic(z, apply_twist(Twist::theta_hat, x), seed);
  add("Z = theta_hat[X]", iso_z.status == Verdict::yes, iso_z.reason);

  std::map<Composition, int> flipped;
  for (const auto& [beta, k] : characteristic(v)) flipped[set_comp(comp_set(beta).complement(r), n)] += k;
  add("characteristic(W) is the complement image of characteristic(V)", characteristic(w) == flipped);
  return rep;
}

template <class K>
CoverWResult<K> cover_W(const Composition& alpha, const std::vector<Composition>& classes, std::uint64_t seed) {
  CoverWResult<K> out;
  for (const auto& beta : classes) {
    if (beta.size() != alpha.size()) throw ArgumentError("class member " + beta.str() + " has the wrong size");
    out.predicted[comp_set(reverse(beta))] += 1;
  }
  auto cover = projective_cover(build_W<K>(symmetric_group(alpha.size()), alpha), seed);
  out.computed = cover.cover;
  out.match = cover.status == Verdict::yes && out.predicted == out.computed;
  return out;
}

#define ZEROHECKE_INSTANTIATE(K)                                                                     \
  template HModule<K> build_V<K>(GroupPtr, const Composition&);                                      \
  template HModule<K> build_X<K>(GroupPtr, const Composition&);                                      \
  template HModule<K> build_W<K>(GroupPtr, const Composition&);                                      \
  template HModule<K> build_Z<K>(GroupPtr, const Composition&);                                      \
  template HModule<K> tableau_module<K>(GroupPtr, const Composition&, bool);                         \
  template Section5Report verify_section5<K>(const Composition&, std::uint64_t);                     \
  template CoverWResult<K> cover_W<K>(const Composition&, const std::vector<Composition>&, std::uint64_t);

ZEROHECKE_INSTANTIATE(Rational)
ZEROHECKE_INSTANTIATE(Fp)

#undef ZEROHECKE_INSTANTIATE

}  // namespace zerohecke
