#include "zerohecke/hecke_module.hpp"

#include <random>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>

namespace zerohecke {

int total(const Multiplicities& m) {
  int t = 0;
  for (const auto& [I, k] : m) t += k;
  return t;
}

std::string to_string(const Multiplicities& m) {
  std::string out;
  for (const auto& [I, k] : m) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += "S" + to_string(I);
  }
  return out.empty() ? "0" : out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undetermined";
  }
}

const char* to_string(Indecomposability v) {
  switch (v) {
    case Indecomposability::certified_yes: return "certified-yes";
    case Indecomposability::decomposable: return "decomposable";
    default: return "probable-yes";
  }
}

template <class K>
HModule<K>::HModule(GroupPtr group, std::vector<Matrix<K>> action, std::vector<std::string> labels)
    : group_(std::move(group)), action_(std::move(action)), labels_(std::move(labels)) {
  if (!group_) throw ArgumentError("module needs a group");
  if (static_cast<int>(action_.size()) != group_->rank())
    throw ArgumentError("module needs one matrix per generator");
  dim_ = action_.empty() ? labels_.size() : action_[0].rows();
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw ArgumentError("action matrices must be square of equal size");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));
  if (labels_.size() != dim_) throw ArgumentError("label count does not match dimension");
}

template <class K>
void HModule<K>::set_elements(std::vector<ElementId> elements) {
  if (!elements.empty() && elements.size() != dim_) throw ArgumentError("element count does not match dimension");
  elements_ = std::move(elements);
}

template <class K>
std::size_t HModule<K>::position(ElementId w) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == w) return i;
  throw ArgumentError("element " + group_->label(w) + " is not a basis element");
}

namespace {

template <class K>
K random_scalar(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<K, Rational>) {
    return K(static_cast<long>(rng() % 2001) - 1000);
  } else {
    return K(static_cast<long>(rng() % Fp::modulus()));
  }
}

template <class K>
K indicator(GenSet I, int s) {
  return I.contains(s) ? K(1) : K(0);
}

template <class K>
HModule<K> basis_module(GroupPtr group, const std::vector<ElementId>& basis, GenSet J, bool projective,
                        const WeakInterval* iv) {
  const GroupTable& g = *group;
  std::unordered_map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  std::vector<Matrix<K>> action;
  for (int s = 0; s < g.rank(); ++s) {
    Matrix<K> a(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ElementId w = basis[j];
      if (g.left_descents(w).contains(s)) {
        a(j, j) = K(1);
        continue;
      }
      ElementId sw = g.left_mul(s, w);
      bool keep = projective ? g.right_descents(sw).subset_of(J) : iv->contains(sw);
      if (keep) a(pos.at(sw), j) = K(1);
    }
    action.push_back(std::move(a));
  }
  std::vector<std::string> labels;
  for (ElementId w : basis) labels.push_back(g.label(w));
  HModule<K> m(std::move(group), std::move(action), std::move(labels));
  m.set_elements(basis);
  return m;
}

template <class K>
std::string combination_label(const Vec<K>& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (v[i] == K(1)) {
      out += (out.empty() ? "" : "+") + labels[i];
    } else if (v[i] == K(-1)) {
      out += "-" + labels[i];
    } else {
      out += (out.empty() ? "[" : "+[") + v[i].str() + "]" + labels[i];
    }
  }
  return out.empty() ? "0" : out;
}

template <class K>
std::optional<std::size_t> unit_index(const Vec<K>& v) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (idx || !(v[i] == K(1))) return std::nullopt;
    idx = i;
  }
  return idx;
}

template <class K>
Matrix<K> stacked_shift(const HModule<K>& m, GenSet I, bool transpose) {
  const std::size_t n = m.dim();
  Matrix<K> out(n * m.rank(), n);
  for (int s = 0; s < m.rank(); ++s) {
    K c = indicator<K>(I, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        K x = transpose ? m.action(s)(j, i) : m.action(s)(i, j);
        if (i == j) x -= c;
        out(s * n + i, j) = std::move(x);
      }
  }
  return out;
}

template <class K>
struct TopData {
  Multiplicities mult;
  std::vector<std::pair<GenSet, Vec<K>>> functionals;
};

template <class K>
TopData<K> top_data(const HModule<K>& m) {
  TopData<K> out;
  if (m.dim() == 0) return out;
  for (GenSet I : all_subsets(m.rank())) {
    auto f = functionals_to_simple(m, I);
    if (f.dim() == 0) continue;
    out.mult[I] = static_cast<int>(f.dim());
    for (auto& v : f.basis()) out.functionals.emplace_back(I, std::move(v));
  }
  return out;
}

// Generators of m lifting a basis of its top, merged across isotypic
// components so that their number is the largest top multiplicity.
template <class K>
std::vector<Vec<K>> module_generators(const HModule<K>& m) {
  auto td = top_data(m);
  const std::size_t n = m.dim(), d = td.functionals.size();
  std::vector<Vec<K>> rows;
  for (const auto& [I, f] : td.functionals) rows.push_back(f);
  auto rr = rref(Matrix<K>::from_rows(rows, n));
  Matrix<K> fp(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) fp(i, j) = rows[i][rr.pivots[j]];
  Matrix<K> inv = inverse(fp);
  std::vector<Vec<K>> gens;
  std::map<GenSet, std::size_t> seen;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t slot = seen[td.functionals[i].first]++;
    if (slot == gens.size()) gens.emplace_back(n, K(0));
    for (std::size_t j = 0; j < d; ++j)
      if (!inv(j, i).is_zero()) gens[slot][rr.pivots[j]] += inv(j, i);
  }
  return gens;
}

// Incrementally maintained echelon set of vectors (not fully reduced).
template <class K>
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}
  std::size_t size() const { return rows_.size(); }
  /// Reduces v in place; returns true and stores it when independent.
  bool insert(Vec<K> v) {
    reduce(v);
    for (std::size_t j = 0; j < n_; ++j)
      if (!v[j].is_zero()) {
        K inv = v[j].inverse();
        for (auto& x : v)
          if (!x.is_zero()) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    return false;
  }
  void reduce(Vec<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      K f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  const std::vector<Vec<K>>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

template <class K>
HModule<K> interval_module(const WeakInterval& iv) {
  return basis_module<K>(iv.group_ptr(), iv.members(), GenSet(), false, &iv);
}

template <class K>
HModule<K> interval_module(GroupPtr group, ElementId u, ElementId v) {
  return interval_module<K>(interval(std::move(group), u, v));
}

template <class K>
HModule<K> projective_module(GroupPtr group, GenSet I, GenSet J) {
  auto basis = group->descent_union(I, J);
  return basis_module<K>(std::move(group), basis, J, true, nullptr);
}

template <class K>
HModule<K> simple_module(GroupPtr group, GenSet I) {
  if (!I.subset_of(group->all_generators())) throw ArgumentError("index set is not a subset of S");
  std::vector<Matrix<K>> action;
  for (int s = 0; s < group->rank(); ++s) {
    Matrix<K> a(1, 1);
    a(0, 0) = indicator<K>(I, s);
    action.push_back(std::move(a));
  }
  ElementId u = group->longest_parabolic(I);
  std::string label = group->label(u);
  HModule<K> m(std::move(group), std::move(action), {label});
  m.set_elements({u});
  return m;
}

template <class K>
RelationCheck verify_relations(const HModule<K>& m) {
  const int r = m.rank();
  for (int s = 0; s < r; ++s)
    if (!(m.action(s) * m.action(s) == m.action(s)))
      return {false, "pi_" + std::to_string(s + 1) + "^2 != pi_" + std::to_string(s + 1)};
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t) {
      int len = m.group().coxeter_m(s, t);
      Matrix<K> a = Matrix<K>::identity(m.dim()), b = a;
      for (int k = 0; k < len; ++k) {
        a = a * m.action(k % 2 == 0 ? s : t);
        b = b * m.action(k % 2 == 0 ? t : s);
      }
      if (!(a == b))
        return {false, "braid relation fails for (pi_" + std::to_string(s + 1) + ", pi_" + std::to_string(t + 1) +
                           "), m = " + std::to_string(len)};
    }
  return {};
}

template <class K>
bool is_invariant(const HModule<K>& m, const Subspace<K>& n) {
  if (n.ambient() != m.dim()) throw ArgumentError("subspace lives in the wrong space");
  for (const auto& b : n.basis())
    for (const auto& a : m.actions())
      if (!n.contains(a.apply(b))) return false;
  return true;
}

template <class K>
HModule<K> submodule(const HModule<K>& m, const Subspace<K>& n) {
  if (!is_invariant(m, n)) throw ArgumentError("subspace is not invariant under the action");
  const auto basis = n.basis();
  std::vector<Matrix<K>> action;
  for (const auto& a : m.actions()) {
    Matrix<K> b(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto c = n.coordinates(a.apply(basis[k]));
      for (std::size_t i = 0; i < c.size(); ++i) b(i, k) = c[i];
    }
    action.push_back(std::move(b));
  }
  std::vector<std::string> labels;
  std::vector<ElementId> elements;
  bool units = true;
  for (const auto& v : basis) {
    labels.push_back(combination_label(v, m.labels()));
    auto idx = unit_index(v);
    if (idx && !m.elements().empty())
      elements.push_back(m.elements()[*idx]);
    else
      units = false;
  }
  HModule<K> out(m.group_ptr(), std::move(action), std::move(labels));
  if (units) out.set_elements(std::move(elements));
  return out;
}

template <class K>
HModule<K> quotient(const HModule<K>& m, const Subspace<K>& n) {
  if (!is_invariant(m, n)) throw ArgumentError("subspace is not invariant under the action");
  const auto comp = n.complement_indices();
  std::vector<Matrix<K>> action;
  for (const auto& a : m.actions()) {
    Matrix<K> b(comp.size(), comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) {
      auto q = n.quotient_coordinates(a.column(comp[j]));
      for (std::size_t i = 0; i < q.size(); ++i) b(i, j) = q[i];
    }
    action.push_back(std::move(b));
  }
  std::vector<std::string> labels;
  std::vector<ElementId> elements;
  for (std::size_t c : comp) {
    labels.push_back(m.labels()[c]);
    if (!m.elements().empty()) elements.push_back(m.elements()[c]);
  }
  HModule<K> out(m.group_ptr(), std::move(action), std::move(labels));
  out.set_elements(std::move(elements));
  return out;
}

template <class K>
Subspace<K> ideal_subspace(const HModule<K>& m, const UpperIdeal& y) {
  if (m.elements().empty()) throw ArgumentError("module has no element basis");
  std::vector<std::size_t> idx;
  for (ElementId w : y.elements()) idx.push_back(m.position(w));
  std::sort(idx.begin(), idx.end());
  return Subspace<K>::coordinate(idx, m.dim());
}

template <class K>
HModule<K> submodule_from_ideal(const HModule<K>& m, const UpperIdeal& y) {
  return submodule(m, ideal_subspace(m, y));
}

template <class K>
HModule<K> quotient_by_ideal(const HModule<K>& m, const UpperIdeal& y) {
  return quotient(m, ideal_subspace(m, y));
}

template <class K>
HModule<K> direct_sum(const HModule<K>& a, const HModule<K>& b) {
  if (a.group().model() != b.group().model()) throw ArgumentError("modules over different groups");
  const std::size_t p = a.dim(), q = b.dim();
  std::vector<Matrix<K>> action;
  for (int s = 0; s < a.rank(); ++s) {
    Matrix<K> c(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) c(i, j) = a.action(s)(i, j);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) c(p + i, p + j) = b.action(s)(i, j);
    action.push_back(std::move(c));
  }
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return HModule<K>(a.group_ptr(), std::move(action), std::move(labels));
}

template <class K>
std::vector<Matrix<K>> hom_space(const HModule<K>& m, const HModule<K>& n) {
  if (m.group().model() != n.group().model()) throw ArgumentError("modules over different groups");
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  const auto gens = module_generators(m);
  const std::size_t unknowns = gens.size() * dn;

  // Spin the generators: every vector reached is x = pi_word g, and T x = L y
  // where y stacks the images of the generators.
  struct Item {
    Vec<K> vec;
    Matrix<K> lift;
  };
  std::vector<Item> queue;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Matrix<K> l(dn, unknowns);
    for (std::size_t i = 0; i < dn; ++i) l(i, j * dn + i) = K(1);
    queue.push_back({gens[j], std::move(l)});
  }
  Echelon<K> span(dm);
  std::vector<Item> basis, dependent;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Item item = std::move(queue[head]);
    if (span.insert(item.vec)) {
      for (int s = 0; s < m.rank(); ++s) queue.push_back({m.action(s).apply(item.vec), n.action(s) * item.lift});
      basis.push_back(std::move(item));
    } else {
      dependent.push_back(std::move(item));
    }
  }
  if (basis.size() != dm) throw std::logic_error("hom_space: generators do not generate the module");

  std::vector<Vec<K>> xcols;
  for (const auto& b : basis) xcols.push_back(b.vec);
  const Matrix<K> c = inverse(Matrix<K>::from_columns(xcols, dm));

  Echelon<K> constraints(unknowns);
  for (const auto& d : dependent) {
    if (constraints.size() == unknowns) break;
    Vec<K> coeff = c.apply(d.vec);
    Matrix<K> block = d.lift;
    for (std::size_t l = 0; l < dm; ++l)
      if (!coeff[l].is_zero()) block -= coeff[l] * basis[l].lift;
    for (std::size_t i = 0; i < dn; ++i) constraints.insert(block.row(i));
  }
  Matrix<K> sys = constraints.size() ? Matrix<K>::from_rows(constraints.rows(), unknowns) : Matrix<K>(0, unknowns);
  auto sol = kernel(sys);

  std::vector<Vec<K>> flat;
  for (const auto& y : sol.basis()) {
    Matrix<K> images(dn, dm);
    for (std::size_t k = 0; k < dm; ++k) {
      auto col = basis[k].lift.apply(y);
      for (std::size_t i = 0; i < dn; ++i) images(i, k) = col[i];
    }
    flat.push_back((images * c).entries());
  }
  auto echelon = Subspace<K>::span(flat, dn * dm);
  std::vector<Matrix<K>> out;
  for (const auto& v : echelon.basis()) {
    Matrix<K> t(dn, dm);
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) t(i, j) = v[i * dm + j];
    out.push_back(std::move(t));
  }
  return out;
}

template <class K>
Subspace<K> functionals_to_simple(const HModule<K>& m, GenSet I) {
  return kernel(stacked_shift(m, I, true));
}

template <class K>
Subspace<K> joint_eigenspace(const HModule<K>& m, GenSet I) {
  // Cut the space down one generator at a time; B holds a basis as columns.
  const std::size_t n = m.dim();
  Matrix<K> b = Matrix<K>::identity(n);
  for (int s = 0; s < m.rank() && b.cols() > 0; ++s) {
    Matrix<K> shifted = m.action(s) * b;
    const K c = indicator<K>(I, s);
    if (!c.is_zero())
      for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i)
          if (!b(i, j).is_zero()) shifted(i, j) -= c * b(i, j);
    auto ker = kernel(shifted);
    b = b * Matrix<K>::from_columns(ker.basis(), b.cols());
  }
  std::vector<Vec<K>> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
  return Subspace<K>::span(cols, n);
}

template <class K>
Multiplicities top(const HModule<K>& m) {
  return top_data(m).mult;
}

template <class K>
Subspace<K> radical(const HModule<K>& m) {
  auto td = top_data(m);
  if (td.functionals.empty()) return Subspace<K>::whole(m.dim());
  std::vector<Vec<K>> rows;
  for (const auto& [I, f] : td.functionals) rows.push_back(f);
  return kernel(Matrix<K>::from_rows(rows, m.dim()));
}

template <class K>
SocleInfo<K> socle(const HModule<K>& m) {
  SocleInfo<K> out{Subspace<K>(m.dim()), {}};
  if (m.dim() == 0) return out;
  for (GenSet I : all_subsets(m.rank())) {
    auto e = joint_eigenspace(m, I);
    if (e.dim() == 0) continue;
    out.multiplicities[I] = static_cast<int>(e.dim());
    out.space = sum(out.space, e);
  }
  return out;
}

template <class K>
Multiplicities composition_factors(const HModule<K>& m) {
  Multiplicities out;
  HModule<K> cur = m;
  while (cur.dim() > 0) {
    auto td = top_data(cur);
    for (const auto& [I, k] : td.mult) out[I] += k;
    std::vector<Vec<K>> rows;
    for (const auto& [I, f] : td.functionals) rows.push_back(f);
    cur = submodule(cur, kernel(Matrix<K>::from_rows(rows, cur.dim())));
  }
  return out;
}

template <class K>
std::map<Composition, int> characteristic(const HModule<K>& m) {
  if (m.group().model().type != CoxeterType::A) throw ArgumentError("characteristic needs a type A group");
  const int n = m.rank() + 1;
  std::map<Composition, int> out;
  for (const auto& [I, k] : composition_factors(m)) out[set_comp(I, n)] += k;
  return out;
}

template <class K>
Matrix<K> top_map(const Matrix<K>& t, const Subspace<K>& rad_m, const Subspace<K>& rad_n) {
  const auto cm = rad_m.complement_indices();
  const std::size_t dn = rad_n.ambient() - rad_n.dim();
  Matrix<K> out(dn, cm.size());
  for (std::size_t j = 0; j < cm.size(); ++j) {
    auto q = rad_n.quotient_coordinates(t.column(cm[j]));
    for (std::size_t i = 0; i < dn; ++i) out(i, j) = q[i];
  }
  return out;
}

template <class K>
Matrix<K> socle_map(const Matrix<K>& t, const Subspace<K>& soc_m) {
  return t * soc_m.columns();
}

template <class K>
Matrix<K> combine(const std::vector<Matrix<K>>& mats, const std::vector<K>& coeffs) {
  if (mats.empty()) throw ArgumentError("empty combination");
  Matrix<K> out(mats[0].rows(), mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * mats[i];
  return out;
}

template <class K>
RankSearch<K> find_full_rank(const std::vector<Matrix<K>>& mats, std::size_t target, std::uint64_t seed) {
  RankSearch<K> out;
  const std::size_t k = mats.size();
  if (target == 0) {
    out.status = Verdict::yes;
    out.coeffs.assign(k, K(0));
    return out;
  }
  if (k == 0 || target > std::min(mats[0].rows(), mats[0].cols())) {
    out.status = Verdict::no;
    return out;
  }
  auto hit = [&](const std::vector<K>& c) { return rank(combine(mats, c)) >= target; };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<K> c(k, K(0));
    c[i] = K(1);
    if (hit(c)) return {Verdict::yes, c};
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<K> c;
    for (std::size_t i = 0; i < k; ++i) c.push_back(random_scalar<K>(rng));
    if (hit(c)) return {Verdict::yes, c};
  }
  // Each target-minor has degree <= target in every variable, so a nonzero
  // one is nonzero somewhere on {0..target}^k.
  const std::size_t side = target + 1;
  if (k > 6 || (!std::is_same_v<K, Rational> && side > static_cast<std::size_t>(K::characteristic()))) return out;
  std::size_t points = 1;
  for (std::size_t i = 0; i < k; ++i) {
    points *= side;
    if (points > 200000) return out;
  }
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t p = 0; p < points; ++p) {
    std::vector<K> c;
    for (auto d : digit) c.push_back(K(static_cast<long>(d)));
    if (hit(c)) return {Verdict::yes, c};
    for (std::size_t i = 0; i < k && ++digit[i] == side; ++i) digit[i] = 0;
  }
  out.status = Verdict::no;
  return out;
}

template <class K>
IsoResult<K> is_isomorphic(const HModule<K>& m, const HModule<K>& n, std::uint64_t seed) {
  if (m.group().model() != n.group().model()) throw ArgumentError("modules over different groups");
  IsoResult<K> out;
  if (m.dim() != n.dim()) {
    out.status = Verdict::no;
    out.reason = "dimensions differ (" + std::to_string(m.dim()) + " vs " + std::to_string(n.dim()) + ")";
    return out;
  }
  if (m.dim() == 0) {
    out.status = Verdict::yes;
    out.witness = Matrix<K>(0, 0);
    return out;
  }
  auto tm = top(m), tn = top(n);
  if (tm != tn) {
    out.status = Verdict::no;
    out.reason = "tops differ: " + to_string(tm) + " vs " + to_string(tn);
    return out;
  }
  auto fm = composition_factors(m), fn = composition_factors(n);
  if (fm != fn) {
    out.status = Verdict::no;
    out.reason = "composition factors differ";
    return out;
  }
  auto homs = hom_space(m, n);
  auto rad_m = radical(m), rad_n = radical(n);
  std::vector<Matrix<K>> tops;
  for (const auto& t : homs) tops.push_back(top_map(t, rad_m, rad_n));
  auto search = find_full_rank(tops, static_cast<std::size_t>(total(tm)), seed);
  out.status = search.status;
  if (search.status == Verdict::yes) {
    Matrix<K> w = combine(homs, search.coeffs);
    if (!is_invertible(w)) throw std::logic_error("top isomorphism did not lift to an isomorphism");
    out.witness = std::move(w);
  } else if (search.status == Verdict::no) {
    out.reason = "no invertible element in Hom (dim " + std::to_string(homs.size()) + ")";
  } else {
    out.reason = "invertibility search exhausted (dim Hom " + std::to_string(homs.size()) + ")";
  }
  return out;
}

namespace {

template <class K>
std::optional<std::pair<Subspace<K>, Subspace<K>>> find_split(const HModule<K>& m, const std::vector<Matrix<K>>& end,
                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::size_t n = m.dim();
  auto attempt = [&](const Matrix<K>& phi) -> std::optional<std::pair<Subspace<K>, Subspace<K>>> {
    auto mp = min_poly(phi);
    if (mp.degree() <= 1) return std::nullopt;
    for (const auto& lambda : roots_in_field(mp)) {
      auto split = fitting_split(phi - lambda * Matrix<K>::identity(n));
      if (split.first.dim() > 0 && split.second.dim() > 0) return split;
    }
    return std::nullopt;
  };
  for (const auto& phi : end)
    if (auto s = attempt(phi)) return s;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<K> c;
    for (std::size_t i = 0; i < end.size(); ++i) c.push_back(random_scalar<K>(rng));
    if (auto s = attempt(combine(end, c))) return s;
  }
  return std::nullopt;
}

}  // namespace

template <class K>
IndecResult<K> is_indecomposable(const HModule<K>& m, std::uint64_t seed) {
  IndecResult<K> out;
  if (m.dim() == 0) {
    out.status = Indecomposability::decomposable;
    return out;
  }
  auto end = hom_space(m, m);
  const std::size_t k = end.size();
  out.end_dim = k;
  if (k == 1) {
    out.status = Indecomposability::certified_yes;
    return out;
  }
  // Maps vanishing on the top, or on the socle, form nilpotent ideals of End.
  auto rad = radical(m);
  auto soc = socle(m).space;
  std::vector<Vec<K>> top_cols, soc_cols;
  for (const auto& phi : end) {
    top_cols.push_back(top_map(phi, rad, rad).entries());
    soc_cols.push_back(socle_map(phi, soc).entries());
  }
  auto j = sum(kernel(Matrix<K>::from_columns(top_cols, top_cols[0].size())),
               kernel(Matrix<K>::from_columns(soc_cols, soc_cols[0].size())));
  if (K::characteristic() == 0 && k - j.dim() > 1) {
    // Radical of the trace form, which is the Jacobson radical in characteristic 0.
    Matrix<K> gram(k, k);
    const std::size_t n = m.dim();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        K tr(0);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (!end[a](x, y).is_zero() && !end[b](y, x).is_zero()) tr += end[a](x, y) * end[b](y, x);
        gram(a, b) = tr;
        gram(b, a) = tr;
      }
    j = sum(j, kernel(gram));
  }
  out.radical_dim = j.dim();
  if (k - j.dim() == 1) {
    out.status = Indecomposability::certified_yes;
    return out;
  }
  if (auto split = find_split(m, end, seed)) {
    out.status = Indecomposability::decomposable;
    out.split_dims = {split->first.dim(), split->second.dim()};
    return out;
  }
  out.status = Indecomposability::probable_yes;
  return out;
}

template <class K>
std::vector<HModule<K>> decompose(const HModule<K>& m, std::uint64_t seed) {
  if (m.dim() <= 1 || total(top(m)) == 1 || total(socle(m).multiplicities) == 1) return {m};
  auto end = hom_space(m, m);
  if (end.size() <= 1) return {m};
  auto split = find_split(m, end, seed);
  if (!split) return {m};
  auto out = decompose(submodule(m, split->first), seed);
  for (auto& x : decompose(submodule(m, split->second), seed)) out.push_back(std::move(x));
  return out;
}

#define ZEROHECKE_INSTANTIATE(K)                                                                              \
  template class HModule<K>;                                                                                   \
  template HModule<K> interval_module<K>(const WeakInterval&);                                                 \
  template HModule<K> interval_module<K>(GroupPtr, ElementId, ElementId);                                      \
  template HModule<K> projective_module<K>(GroupPtr, GenSet, GenSet);                                          \
  template HModule<K> simple_module<K>(GroupPtr, GenSet);                                                      \
  template RelationCheck verify_relations(const HModule<K>&);                                                  \
  template bool is_invariant(const HModule<K>&, const Subspace<K>&);                                           \
  template HModule<K> submodule(const HModule<K>&, const Subspace<K>&);                                        \
  template HModule<K> quotient(const HModule<K>&, const Subspace<K>&);                                         \
  template Subspace<K> ideal_subspace(const HModule<K>&, const UpperIdeal&);                                   \
  template HModule<K> submodule_from_ideal(const HModule<K>&, const UpperIdeal&);                              \
  template HModule<K> quotient_by_ideal(const HModule<K>&, const UpperIdeal&);                                 \
  template HModule<K> direct_sum(const HModule<K>&, const HModule<K>&);                                        \
  template std::vector<Matrix<K>> hom_space(const HModule<K>&, const HModule<K>&);                             \
  template Subspace<K> functionals_to_simple(const HModule<K>&, GenSet);                                       \
  template Subspace<K> joint_eigenspace(const HModule<K>&, GenSet);                                            \
  template Multiplicities top(const HModule<K>&);                                                              \
  template Subspace<K> radical(const HModule<K>&);                                                             \
  template SocleInfo<K> socle(const HModule<K>&);                                                              \
  template Multiplicities composition_factors(const HModule<K>&);                                              \
  template std::map<Composition, int> characteristic(const HModule<K>&);                                       \
  template Matrix<K> top_map(const Matrix<K>&, const Subspace<K>&, const Subspace<K>&);                        \
  template Matrix<K> socle_map(const Matrix<K>&, const Subspace<K>&);                                          \
  template Matrix<K> combine(const std::vector<Matrix<K>>&, const std::vector<K>&);                            \
  template RankSearch<K> find_full_rank(const std::vector<Matrix<K>>&, std::size_t, std::uint64_t);            \
  template IsoResult<K> is_isomorphic(const HModule<K>&, const HModule<K>&, std::uint64_t);                    \
  template IndecResult<K> is_indecomposable(const HModule<K>&, std::uint64_t);                                 \
  template std::vector<HModule<K>> decompose(const HModule<K>&, std::uint64_t);

ZEROHECKE_INSTANTIATE(Rational)
ZEROHECKE_INSTANTIATE(Fp)

#undef ZEROHECKE_INSTANTIATE

}  // namespace zerohecke
