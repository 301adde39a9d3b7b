// One line per acceptance criterion, for Q and for GF(101).
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "zerohecke/hecke_module.hpp"
#include "zerohecke/qsym.hpp"
#include "zerohecke/verify.hpp"

using namespace zerohecke;

namespace {

struct Line {
  bool ok = true;
  std::string detail;
};

const std::vector<std::string> kAllGroups{"A3", "A4", "B3", "D4", "I2:5", "I2:7"};

/// Runs a suite on each group and keeps the outcomes whose check passes the filter.
Line sweep(const FieldSpec& field, const std::string& suite, const std::vector<std::string>& groups,
           const std::function<bool(const Outcome&)>& keep = nullptr) {
  Line line;
  std::size_t n = 0;
  for (const auto& g : groups) {
    VerifyConfig cfg;
    cfg.group = g;
    cfg.field = field;
    cfg.threads = threads_from_env();
    auto report = run_verify(suite, cfg);
    for (const auto& o : report.outcomes) {
      if (keep && !keep(o)) continue;
      ++n;
      if (o.status != Status::pass) {
        if (line.ok) line.detail = "first problem: " + o.check + " [" + g + " " + o.instance + "] " + to_string(o.status) + "; ";
        line.ok = false;
      }
    }
  }
  line.detail += std::to_string(n) + " instances";
  return line;
}

auto check_named(std::initializer_list<const char*> names) {
  std::vector<std::string> list(names.begin(), names.end());
  return [list](const Outcome& o) { return std::find(list.begin(), list.end(), o.check) != list.end(); };
}

template <class K>
Line census() {
  auto g = make_group("A3");
  std::vector<std::size_t> sizes;
  for (GenSet I : all_subsets(3)) sizes.push_back(g->descent_class(I).size());
  Line line;
  line.ok = sizes == std::vector<std::size_t>{1, 3, 5, 3, 3, 5, 3, 1};
  std::size_t checked = 0;
  for (const auto& name : kAllGroups) {
    auto h = make_group(name);
    std::size_t sum = 0;
    for (GenSet I : all_subsets(h->rank())) {
      sum += h->descent_class(I).size();
      line.ok = line.ok && projective_module<K>(h, I, I).dim() == h->descent_class(I).size();
      ++checked;
    }
    line.ok = line.ok && sum == h->size();
  }
  line.detail = "A3 classes (1,3,5,3,3,5,3,1), " + std::to_string(checked) + " projectives";
  return line;
}

template <class K>
Line tops_and_socles() {
  Line line;
  std::size_t checked = 0;
  for (const auto& name : kAllGroups) {
    auto g = make_group(name);
    for (GenSet I : all_subsets(g->rank())) {
      auto p = projective_module<K>(g, I, I);
      auto soc = socle(p);
      auto v = g->descent_class_bounds(I).second;
      bool ok = top(p) == Multiplicities{{I, 1}} && total(soc.multiplicities) == 1 &&
                soc.space == Subspace<K>::coordinate({p.position(v)}, p.dim());
      if (!ok && line.ok) line.detail = "first problem: " + name + " I=" + to_string(I) + "; ";
      line.ok = line.ok && ok;
      ++checked;
    }
  }
  line.detail += std::to_string(checked) + " projectives on A3, A4, B3, D4, I2:5, I2:7";
  return line;
}

template <class K>
Line socle_example() {
  auto g = make_group("A3");
  auto m = interval_module<K>(g, g->element("2143"), g->element("4132"));
  auto soc = socle(m);
  Vec<K> a(m.dim()), b(m.dim());
  a[m.position(g->element("3142"))] = K(1);
  a[m.position(g->element("4132"))] = K(-1);
  b[m.position(g->element("4132"))] = K(1);
  return {soc.space.dim() >= 2 && soc.space.contains(a) && soc.space.contains(b),
          "dim soc B(2143,4132) = " + std::to_string(soc.space.dim())};
}

Line ascent_oracle() {
  Line line;
  std::size_t pairs = 0;
  for (int n : {4, 5}) {
    auto g = symmetric_group(n);
    for (ElementId u = 0; u < g->size(); ++u)
      for (ElementId v = 0; v < g->size(); ++v) {
        ++pairs;
        line.ok = line.ok && ascent_pair_leq(g->form(u), g->form(v)) == leq_L(*g, u, v);
      }
  }
  line.detail = std::to_string(pairs) + " pairs on S_4 and S_5";
  return line;
}

Line determinism(const FieldSpec& field) {
  VerifyConfig cfg;
  cfg.field = field;
  cfg.seed = 11;
  const auto first = run_verify("all", cfg).json();
  cfg.threads = 2;
  const auto second = run_verify("all", cfg).json();
  return {first == second, std::to_string(first.size()) + " bytes, 1 and 2 threads"};
}

template <class K>
int run(const FieldSpec& field) {
  int failures = 0;
  auto report = [&](int number, const std::string& title, const std::function<Line()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Line line;
    try {
      line = body();
    } catch (const std::exception& e) {
      line = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!line.ok) ++failures;
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << (line.ok ? "PASS" : "FAIL") << "  [" << field.name() << "] " << number << ". " << title << ": "
        << line.detail << " (" << secs << "s)";
    std::cout << out.str() << std::endl;
  };
  report(1, "relations on every constructed module", [&] { return sweep(field, "relations", kAllGroups); });
  report(2, "P_I^J isomorphic to B(u_I,v_J)", [&] {
    return sweep(field, "thm-interval-projective", {"A3", "B3", "I2:5"}, check_named({"P_I^J isomorphic to B(u_I,v_J)"}));
  });
  report(3, "P_I^J splits into the P_X, I <= X <= J", [&] {
    return sweep(field, "thm-decomposition", {"A3", "B3"},
                 check_named({"summand dims of P_I^J are |D_X|, I <= X <= J", "P_{1}^{1,3} splits as 3 + 5"}));
  });
  report(4, "descent census and dim P_I = |D_I|", [&] { return census<K>(); });
  report(5, "simple top and socle of P_I", [&] {
    auto line = tops_and_socles<K>();
    auto ex = socle_example<K>();
    return Line{line.ok && ex.ok, line.detail + ", " + ex.detail};
  });
  report(6, "twist theorem and twisted projectives", [&] { return sweep(field, "thm-twists", {"A3", "B3", "I2:7"}); });
  report(7, "projective covers", [&] { return sweep(field, "thm-covers", {"A3", "B3", "I2:5"}); });
  report(8, "injective hulls and the omega_hat duality", [&] { return sweep(field, "thm-hulls", {"A3", "B3", "I2:5"}); });
  report(9, "w0 identities", [&] { return sweep(field, "lemma-w0", kAllGroups); });
  report(10, "compositions of n <= 6", [&] { return sweep(field, "section5", {"A3"}); });
  report(11, "ascent pairs against weak order", [&] { return ascent_oracle(); });
  report(12, "byte-identical verify all reports", [&] { return determinism(field); });
  return failures;
}

}  // namespace

int main() {
  int failures = run<Rational>(parse_field("Q"));
  {
    ScopedModulus guard(101);
    failures += run<Fp>(parse_field("Fp:101"));
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
