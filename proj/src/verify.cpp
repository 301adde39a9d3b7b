#include "zerohecke/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zerohecke/homology.hpp"
#include "zerohecke/qsym.hpp"
#include "zerohecke/twists.hpp"

namespace zerohecke {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "undetermined";
  }
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [&](const Outcome& o) { return o.status == s; }));
}

int Report::exit_code() const {
  if (count(Status::fail) > 0) return 1;
  if (count(Status::undetermined) > 0) return 2;
  return 0;
}

std::string Report::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["group"] = group;
  j["field"] = field;
  j["seed"] = seed;
  j["summary"] = {{"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"undetermined", count(Status::undetermined)}};
  auto results = nlohmann::json::array();
  for (const auto& o : outcomes)
    results.push_back({{"suite", o.suite},
                       {"check", o.check},
                       {"instance", o.instance},
                       {"status", to_string(o.status)},
                       {"detail", o.detail}});
  j["results"] = results;
  return j.dump(2) + "\n";
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << to_string(o.status) << "  " << o.suite << "  " << o.check << "  [" << o.instance << "]";
    if (!o.detail.empty()) out << "  " << o.detail;
    out << "\n";
  }
  out << suite << " on " << group << " over " << field << ": " << count(Status::pass) << " pass, "
      << count(Status::fail) << " fail, " << count(Status::undetermined) << " undetermined\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "thm-interval-projective", "thm-decomposition",
                                              "thm-twists", "thm-covers", "thm-hulls", "lemma-w0", "section5",
                                              "all"};
  return names;
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("ZEROHECKE_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

using Task = std::function<std::vector<Outcome>()>;

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

Status from_verdict(Verdict v) {
  switch (v) {
    case Verdict::yes: return Status::pass;
    case Verdict::no: return Status::fail;
    default: return Status::undetermined;
  }
}

std::string pair_name(GenSet I, GenSet J) { return "I=" + to_string(I) + " J=" + to_string(J); }

std::vector<std::pair<GenSet, GenSet>> chains(int rank) {
  std::vector<std::pair<GenSet, GenSet>> out;
  for (GenSet I : all_subsets(rank))
    for (GenSet J : all_subsets(rank))
      if (I.subset_of(J)) out.emplace_back(I, J);
  return out;
}

/// I <= X <= J, each once: the summands of P_I^J.
Multiplicities summands(int rank, GenSet I, GenSet J) {
  Multiplicities m;
  for (GenSet X : all_subsets(rank))
    if (I.subset_of(X) && X.subset_of(J)) m[X] = 1;
  return m;
}

/// A random pair u <=_L v: v uniform, u a suffix of a reduced word of v.
std::pair<ElementId, ElementId> random_pair(const GroupTable& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ElementId v = static_cast<ElementId>(rng() % g.size());
  auto word = g.word(v);
  std::size_t cut = word.empty() ? 0 : rng() % (word.size() + 1);
  ElementId u = g.identity();
  for (std::size_t i = cut; i < word.size(); ++i) u = g.right_mul(u, word[i]);
  return {u, v};
}

template <class K>
bool same_action(const HModule<K>& a, const HModule<K>& b) {
  return a.dim() == b.dim() && a.actions() == b.actions();
}

template <class K>
bool intertwines(const HModule<K>& m, const HModule<K>& n, const Matrix<K>& t) {
  for (int s = 0; s < m.rank(); ++s)
    if (!(t * m.action(s) == n.action(s) * t)) return false;
  return true;
}

// relations

template <class K>
std::vector<Task> relations_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  auto check = [](std::vector<Outcome>& out, const std::string& name, const HModule<K>& m) {
    auto rc = verify_relations(m);
    out.push_back({"relations", "relations hold", name, from_bool(rc.ok), rc.witness});
  };
  for (GenSet I : all_subsets(r))
    tasks.push_back([=] {
      std::vector<Outcome> out;
      check(out, "simple " + to_string(I), simple_module<K>(group, I));
      return out;
    });
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      std::vector<Outcome> out;
      auto p = projective_module<K>(group, I, J);
      check(out, "P " + pair_name(I, J), p);
      auto [uI, vI] = group->descent_class_bounds(I);
      auto [uJ, vJ] = group->descent_class_bounds(J);
      check(out, "B(u_I,v_J) " + pair_name(I, J), interval_module<K>(group, uI, vJ));
      for (Twist t : {Twist::phi, Twist::theta, Twist::chi, Twist::theta_hat, Twist::omega_hat})
        check(out, to_string(t) + " of P " + pair_name(I, J), apply_twist(t, p));
      return out;
    });
  for (std::uint64_t k = 0; k < 20; ++k)
    tasks.push_back([=] {
      std::vector<Outcome> out;
      const std::uint64_t seed = cfg.seed * 1000 + k;
      auto [u, v] = random_pair(*group, seed);
      auto iv = interval(group, u, v);
      auto m = interval_module<K>(iv);
      auto y = random_upper_ideal(iv, seed);
      const std::string name = "B(" + group->label(u) + "," + group->label(v) + ")";
      check(out, name, m);
      check(out, name + " submodule |Y|=" + std::to_string(y.size()), submodule_from_ideal(m, y));
      check(out, name + " quotient |Y|=" + std::to_string(y.size()), quotient_by_ideal(m, y));
      check(out, name + " plus simple", direct_sum(m, simple_module<K>(group, GenSet(seed % (1u << r)))));
      return out;
    });
  if (cfg.inject_corruption)
    tasks.push_back([=] {
      std::vector<Outcome> out;
      auto m = projective_module<K>(group, GenSet(), group->all_generators());
      m.corrupt(0, 0, 0, K(2));
      check(out, "corrupted regular module", m);
      return out;
    });
  return tasks;
}

// thm-interval-projective, with the structure of P_I

template <class K>
std::vector<Task> interval_projective_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  const std::string suite = "thm-interval-projective";
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      auto [uI, vI] = group->descent_class_bounds(I);
      auto [uJ, vJ] = group->descent_class_bounds(J);
      auto p = projective_module<K>(group, I, J);
      auto b = interval_module<K>(group, uI, vJ);
      auto iso = is_isomorphic(p, b, cfg.seed);
      Status st = from_verdict(iso.status);
      std::string detail = iso.reason;
      if (st == Status::pass && !(iso.witness && is_invertible(*iso.witness) && intertwines(p, b, *iso.witness))) {
        st = Status::fail;
        detail = "witness is not an invertible intertwiner";
      }
      return std::vector<Outcome>{{suite, "P_I^J isomorphic to B(u_I,v_J)", pair_name(I, J), st, detail}};
    });
  tasks.push_back([=] {
    std::size_t sum = 0;
    for (GenSet I : all_subsets(r)) sum += group->descent_class(I).size();
    return std::vector<Outcome>{{suite, "descent classes partition W", group->model().name(), from_bool(sum == group->size()),
                                 std::to_string(sum) + "/" + std::to_string(group->size())}};
  });
  for (GenSet I : all_subsets(r))
    tasks.push_back([=] {
      std::vector<Outcome> out;
      const std::string name = "I=" + to_string(I);
      auto p = projective_module<K>(group, I, I);
      const auto cls = group->descent_class(I);
      out.push_back({suite, "dim P_I = |D_I|", name, from_bool(p.dim() == cls.size()), std::to_string(p.dim())});
      auto t = top(p);
      out.push_back({suite, "top P_I is the simple I", name, from_bool(t == Multiplicities{{I, 1}}), to_string(t)});
      auto soc = socle(p);
      auto [uI, vI] = group->descent_class_bounds(I);
      Subspace<K> at_v = Subspace<K>::coordinate({p.position(vI)}, p.dim());
      out.push_back({suite, "socle P_I is simple and spanned by v_I", name,
                     from_bool(total(soc.multiplicities) == 1 && soc.space == at_v), to_string(soc.multiplicities)});
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < p.dim(); ++i)
        if (i != p.position(uI)) rest.push_back(i);
      out.push_back({suite, "radical P_I is the span of D_I minus u_I", name,
                     from_bool(radical(p) == Subspace<K>::coordinate(rest, p.dim()))});
      return out;
    });
  return tasks;
}

// thm-decomposition, plus indecomposability of the interval quotients

template <class K>
std::vector<Task> decomposition_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  const std::string suite = "thm-decomposition";
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      std::vector<std::size_t> want, got;
      for (const auto& [X, k] : summands(r, I, J)) want.push_back(group->descent_class(X).size());
      for (const auto& m : decompose(projective_module<K>(group, I, J), cfg.seed)) got.push_back(m.dim());
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      std::string detail;
      for (auto d : got) detail += (detail.empty() ? "" : ",") + std::to_string(d);
      return std::vector<Outcome>{{suite, "summand dims of P_I^J are |D_X|, I <= X <= J", pair_name(I, J),
                                   from_bool(want == got), "{" + detail + "}"}};
    });
  auto indec = [=](const std::string& check, const std::string& name, const HModule<K>& m) {
    auto res = is_indecomposable(m, cfg.seed);
    return Outcome{suite, check, name, from_bool(res.status == Indecomposability::certified_yes), to_string(res.status)};
  };
  for (GenSet I : all_subsets(r))
    for (ElementId w : group->descent_class(I))
      tasks.push_back([=] {
        std::vector<Outcome> out;
        auto [uI, vI] = group->descent_class_bounds(I);
        const std::string lbl = "I=" + to_string(I) + " w=" + group->label(w);
        WeakInterval upper(group, w, vI), lower(group, uI, w);
        auto mu = interval_module<K>(upper), ml = interval_module<K>(lower);
        out.push_back(indec("B(w,v_I) indecomposable", lbl, mu));
        out.push_back(indec("B(u_I,w) indecomposable", lbl, ml));
        auto y = random_upper_ideal(upper, cfg.seed + w);
        if (!y.empty())
          out.push_back(indec("submodule of B(w,v_I) indecomposable", lbl + " |Y|=" + std::to_string(y.size()),
                              submodule_from_ideal(mu, y)));
        auto z = random_upper_ideal(lower, cfg.seed + w);
        if (!z.contains(uI))
          out.push_back(indec("quotient of B(u_I,w) indecomposable", lbl + " |Y|=" + std::to_string(z.size()),
                              quotient_by_ideal(ml, z)));
        return out;
      });
  if (group->model() == ModelSpec{CoxeterType::A, 3})
    tasks.push_back([=] {
      std::vector<Outcome> out;
      std::vector<std::size_t> dims;
      for (const auto& m : decompose(projective_module<K>(group, GenSet::of({1}), GenSet::of({1, 3})), cfg.seed))
        dims.push_back(m.dim());
      std::sort(dims.begin(), dims.end());
      out.push_back({suite, "P_{1}^{1,3} splits as 3 + 5", "A3", from_bool(dims == std::vector<std::size_t>{3, 5})});
      return out;
    });
  return tasks;
}

// thm-twists

Multiplicities image_of(const Multiplicities& m, Twist t, const GroupTable& g) {
  Multiplicities out;
  for (const auto& [I, k] : m) {
    GenSet X = I;
    if (t == Twist::phi || t == Twist::omega_hat) X = g.conj_w0_set(X);
    if (t == Twist::theta || t == Twist::theta_hat || t == Twist::omega_hat) X = X.complement(g.rank());
    out[X] += k;
  }
  return out;
}

template <class K>
std::vector<Task> twist_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  const std::string suite = "thm-twists";
  const Twist tags[] = {Twist::phi, Twist::theta_hat, Twist::omega_hat};
  auto theorem = [=](const std::string& name, ElementId u, ElementId v, const UpperIdeal& y, std::uint64_t seed) {
    std::vector<Outcome> out;
    for (Twist t : tags) {
      auto res = verify_twist_theorem<K>(t, group, u, v, y, seed);
      out.push_back({suite, "twist theorem " + to_string(t), name, from_verdict(res.status), res.reason});
      if (t == Twist::omega_hat)
        out.push_back({suite, "omega_hat signed bijection", name, from_bool(res.explicit_witness)});
    }
    return out;
  };
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      auto [uI, vI] = group->descent_class_bounds(I);
      auto [uJ, vJ] = group->descent_class_bounds(J);
      auto iv = interval(group, uI, vJ);
      auto out = theorem(pair_name(I, J) + " Y={}", uI, vJ, UpperIdeal(iv, {}), cfg.seed);
      auto y = random_upper_ideal(iv, cfg.seed);
      auto more = theorem(pair_name(I, J) + " |Y|=" + std::to_string(y.size()), uI, vJ, y, cfg.seed);
      out.insert(out.end(), more.begin(), more.end());

      auto p = projective_module<K>(group, I, J);
      for (Twist t : tags) {
        auto [I2, J2] = twisted_projective_index(t, *group, I, J);
        auto iso = is_isomorphic(apply_twist(t, p), projective_module<K>(group, I2, J2), cfg.seed);
        out.push_back({suite, to_string(t) + " of P_I^J is P" + to_string(I2) + "^" + to_string(J2), pair_name(I, J),
                       from_verdict(iso.status), iso.reason});
      }
      for (Twist t : {Twist::phi, Twist::theta, Twist::chi, Twist::theta_hat, Twist::omega_hat}) {
        auto tw = apply_twist(t, p);
        bool ok = tw.dim() == p.dim() && verify_relations(tw).ok &&
                  composition_factors(tw) == image_of(composition_factors(p), t, *group);
        out.push_back({suite, to_string(t) + " keeps dim, relations and maps factors", pair_name(I, J), from_bool(ok)});
      }
      bool composed = same_action(apply_twist(Twist::theta_hat, p), apply_twist(Twist::theta, apply_twist(Twist::chi, p))) &&
                      same_action(apply_twist(Twist::omega_hat, p), apply_twist(Twist::phi, apply_twist(Twist::theta_hat, p)));
      out.push_back({suite, "theta_hat = theta chi and omega_hat = phi theta_hat", pair_name(I, J), from_bool(composed)});
      return out;
    });
  for (GenSet I : all_subsets(r))
    tasks.push_back([=] {
      auto iso = is_isomorphic(apply_twist(Twist::theta, simple_module<K>(group, I)),
                               simple_module<K>(group, I.complement(r)), cfg.seed);
      return std::vector<Outcome>{{suite, "theta of a simple is the complementary simple", "I=" + to_string(I),
                                   from_verdict(iso.status), iso.reason}};
    });
  for (std::uint64_t k = 0; k < 50; ++k)
    tasks.push_back([=] {
      const std::uint64_t seed = cfg.seed * 1000 + k;
      auto [u, v] = random_pair(*group, seed);
      auto iv = interval(group, u, v);
      auto y = random_upper_ideal(iv, seed);
      std::string name = "random " + std::to_string(k) + " B(" + group->label(u) + "," + group->label(v) + ") |Y|=" +
                         std::to_string(y.size());
      return theorem(name, u, v, y, seed);
    });
  return tasks;
}

// thm-covers and thm-hulls

template <class K>
std::vector<Task> cover_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  const std::string suite = "thm-covers";
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      std::vector<Outcome> out;
      auto [uI, vI] = group->descent_class_bounds(I);
      auto [uJ, vJ] = group->descent_class_bounds(J);
      auto iv = interval(group, uI, vJ);
      const auto want = summands(r, I, J);
      for (ElementId w : group->descent_class(J)) {
        const std::string name = pair_name(I, J) + " w=" + group->label(w);
        auto y = complement_ideal(iv, w);
        auto th = verify_cover_theorem<K>(group, I, J, y);
        out.push_back({suite, "K Y lies in rad P_I^J", name, from_bool(th.status == CheckStatus::pass), th.detail});
        auto pl = verify_path_lemma(group, I, J, y);
        out.push_back({suite, "paths to Y leave J", name, from_bool(pl.status == CheckStatus::pass), pl.detail});
        auto c = projective_cover(interval_module<K>(group, uI, w), cfg.seed);
        Status st = c.status == Verdict::yes ? from_bool(c.cover == want && c.kernel_in_radical) : from_verdict(c.status);
        out.push_back({suite, "cover of B(u_I,w) is P_I^J", name, st, to_string(c.cover)});
        out.push_back({suite, "cover indecomposable iff I = J", name,
                       from_bool((total(c.cover) == 1) == (I == J)), std::to_string(total(c.cover)) + " summands"});
      }
      return out;
    });
  if (group->model() == ModelSpec{CoxeterType::A, 3})
    tasks.push_back([=] {
      auto c = projective_cover(interval_module<K>(group, group->element("2134"), group->element("4132")), cfg.seed);
      Multiplicities want{{GenSet::of({1}), 1}, {GenSet::of({1, 3}), 1}};
      return std::vector<Outcome>{{suite, "cover of B(2134,4132) is P_{1} + P_{1,3}", "A3",
                                   from_bool(c.status == Verdict::yes && c.cover == want), to_string(c.cover)}};
    });
  return tasks;
}

template <class K>
std::vector<Task> hull_tasks(GroupPtr group, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const int r = group->rank();
  const std::string suite = "thm-hulls";
  for (auto [I, J] : chains(r))
    tasks.push_back([=] {
      std::vector<Outcome> out;
      auto [uI, vI] = group->descent_class_bounds(I);
      auto [uJ, vJ] = group->descent_class_bounds(J);
      auto iv = interval(group, uI, vJ);
      const auto want = summands(r, I, J);
      for (ElementId w : group->descent_class(I)) {
        const std::string name = pair_name(I, J) + " w=" + group->label(w);
        auto th = verify_hull_theorem<K>(group, I, J, upward_closure(iv, {w}));
        out.push_back({suite, "soc P_I^J lies in K Y", name, from_bool(th.status == CheckStatus::pass), th.detail});
        auto h = injective_hull(interval_module<K>(group, w, vJ), cfg.seed);
        Status st = h.status == Verdict::yes ? from_bool(h.hull == want && h.socle_contained) : from_verdict(h.status);
        out.push_back({suite, "hull of B(w,v_J) is P_I^J", name, st, to_string(h.hull)});
      }
      // Duality: omega_hat turns the cover sweep into hulls of the twisted modules.
      Multiplicities dual;
      for (const auto& [X, k] : want) dual[X.complement(r)] += k;
      for (ElementId w : group->descent_class(J)) {
        const std::string name = pair_name(I, J) + " w=" + group->label(w);
        auto h = injective_hull(apply_twist(Twist::omega_hat, interval_module<K>(group, uI, w)), cfg.seed);
        Status st = h.status == Verdict::yes ? from_bool(h.hull == dual && h.socle_contained) : from_verdict(h.status);
        out.push_back({suite, "hull of omega_hat[B(u_I,w)] is omega_hat of its cover", name, st, to_string(h.hull)});
      }
      return out;
    });
  return tasks;
}

// lemma-w0

std::vector<Task> lemma_tasks(GroupPtr group) {
  std::vector<Task> tasks;
  const int r = group->rank();
  tasks.push_back([=] {
    std::vector<Outcome> out;
    const GroupTable& g = *group;
    const ElementId w0 = g.longest();
    for (GenSet I : all_subsets(r)) {
      const std::string name = "I=" + to_string(I);
      auto [u, v] = g.descent_class_bounds(I);
      const GenSet c = g.conj_w0_set(I);
      auto [uc, vc] = g.descent_class_bounds(c);
      auto [ua, va] = g.descent_class_bounds(c.complement(r));
      auto [ub, vb] = g.descent_class_bounds(I.complement(r));
      out.push_back({"lemma-w0", "w0 u_I w0 = u_{w0Iw0} and w0 v_I w0 = v_{w0Iw0}", name,
                     from_bool(g.conj_w0(u) == uc && g.conj_w0(v) == vc)});
      out.push_back({"lemma-w0", "u_I w0 = v_{S-w0Iw0} and v_I w0 = u_{S-w0Iw0}", name,
                     from_bool(g.multiply(u, w0) == va && g.multiply(v, w0) == ua)});
      out.push_back({"lemma-w0", "w0 u_I = v_{S-I} and w0 v_I = u_{S-I}", name,
                     from_bool(g.multiply(w0, u) == vb && g.multiply(w0, v) == ub)});
    }
    return out;
  });
  return tasks;
}

// section5

template <class K>
std::vector<Task> section5_tasks(const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  const std::string suite = "section5";
  for (int n = 1; n <= cfg.max_n; ++n)
    for (const auto& alpha : compositions(n))
      tasks.push_back([=] {
        std::vector<Outcome> out;
        auto rep = verify_section5<K>(alpha, cfg.seed);
        for (const auto& line : rep.lines) out.push_back({suite, line.name, alpha.str(), from_bool(line.ok), line.detail});
        return out;
      });
  if (cfg.max_n >= 4)
    tasks.push_back([=] {
      auto group = symmetric_group(4);
      const auto alpha = parse_composition("2,2");
      auto iso = is_isomorphic(build_W<K>(group, alpha), interval_module<K>(group, group->element("2314"), group->element("3412")),
                               cfg.seed);
      return std::vector<Outcome>{
          {suite, "|SIT| = 3", "(2,2)", from_bool(enumerate_SIT(alpha).size() == 3)},
          {suite, "W isomorphic to B(2314,3412)", "(2,2)", from_verdict(iso.status), iso.reason}};
    });
  for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
    tasks.push_back([=] {
      auto group = symmetric_group(n);
      const GroupTable& g = *group;
      std::size_t pairs = 0, bad = 0;
      for (ElementId u = 0; u < g.size(); ++u)
        for (ElementId v = 0; v < g.size(); ++v) {
          ++pairs;
          if (ascent_pair_leq(g.form(u), g.form(v)) != leq_L(g, u, v)) ++bad;
        }
      return std::vector<Outcome>{{suite, "ascent pairs agree with left weak order", "S_" + std::to_string(n),
                                   from_bool(bad == 0), std::to_string(pairs) + " pairs"}};
    });
  return tasks;
}

template <class K>
std::vector<Task> tasks_for(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<Task> tasks;
  auto add = [&](std::vector<Task> more) { tasks.insert(tasks.end(), more.begin(), more.end()); };
  const bool all = suite == "all";
  GroupPtr group;
  if (suite != "section5") group = make_group(cfg.group, cfg.max_group);
  if (all || suite == "relations") add(relations_tasks<K>(group, cfg));
  if (all || suite == "thm-interval-projective") add(interval_projective_tasks<K>(group, cfg));
  if (all || suite == "thm-decomposition") add(decomposition_tasks<K>(group, cfg));
  if (all || suite == "thm-twists") add(twist_tasks<K>(group, cfg));
  if (all || suite == "thm-covers") add(cover_tasks<K>(group, cfg));
  if (all || suite == "thm-hulls") add(hull_tasks<K>(group, cfg));
  if (all || suite == "lemma-w0") add(lemma_tasks(group));
  if (all || suite == "section5") add(section5_tasks<K>(cfg));
  return tasks;
}

std::vector<Outcome> run_tasks(const std::vector<Task>& tasks, const VerifyConfig& cfg) {
  std::vector<std::vector<Outcome>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        next = tasks.size();
        return;
      }
      if (cfg.progress) {
        std::lock_guard lock(mutex);
        for (const auto& o : results[i]) cfg.progress(o);
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Outcome> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return out;
}

}  // namespace

Report run_verify(const std::string& suite, const VerifyConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw ConfigError("unknown suite: " + suite);
  Report report{suite, suite == "section5" ? "A" : config.group, config.field.name(), config.seed, {}};
  if (config.field.rational) {
    report.outcomes = run_tasks(tasks_for<Rational>(suite, config), config);
  } else {
    ScopedModulus modulus(config.field.prime);
    report.outcomes = run_tasks(tasks_for<Fp>(suite, config), config);
  }
  std::stable_sort(report.outcomes.begin(), report.outcomes.end(), [](const Outcome& a, const Outcome& b) {
    return std::tie(a.suite, a.check, a.instance) < std::tie(b.suite, b.check, b.instance);
  });
  return report;
}

}  // namespace zerohecke
