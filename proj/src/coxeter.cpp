#include "zerohecke/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace zerohecke {

GenSet GenSet::of(std::initializer_list<int> one_based) {
  std::uint32_t bits = 0;
  for (int s : one_based) bits |= 1u << (s - 1);
  return GenSet(bits);
}

std::vector<int> GenSet::members() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string to_string(GenSet s) {
  std::string out = "{";
  bool first = true;
  for (int g : s.members()) {
    if (!first) out += ',';
    out += std::to_string(g + 1);
    first = false;
  }
  return out + "}";
}

GenSet parse_genset(std::string_view text, int rank) {
  if (text.starts_with('{') && text.ends_with('}')) text = text.substr(1, text.size() - 2);
  GenSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    int s = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), s);
    if (ec != std::errc() || ptr != item.data() + item.size() || s < 1 || s > rank)
      throw ArgumentError("bad generator '" + std::string(item) + "' (expected 1.." + std::to_string(rank) + ")");
    out = out.with(s - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<GenSet> all_subsets(int rank) {
  std::vector<GenSet> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  return out;
}

std::string ModelSpec::name() const {
  switch (type) {
    case CoxeterType::A: return "A" + std::to_string(param);
    case CoxeterType::B: return "B" + std::to_string(param);
    case CoxeterType::D: return "D" + std::to_string(param);
    case CoxeterType::I2: return "I2:" + std::to_string(param);
  }
  return "?";
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::vector<int>> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto piece : split(text, ',')) {
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) return std::nullopt;
    out.push_back(value);
  }
  return out;
}

std::string join_ints(const Form& f, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(f[i]);
  }
  return out;
}

std::vector<std::vector<int>> base_matrix(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

void link(std::vector<std::vector<int>>& m, int s, int t, int order) {
  m[s][t] = order;
  m[t][s] = order;
}

// Type A_n: permutations of 1..n+1 in one-line notation. s_i swaps the values
// i, i+1 from the left and the positions i, i+1 from the right.
CoxeterModel type_a(const ModelSpec& spec) {
  const int n = spec.param;
  CoxeterModel m;
  m.spec = spec;
  m.coxeter_matrix = base_matrix(n);
  for (int i = 0; i + 1 < n; ++i) link(m.coxeter_matrix, i, i + 1, 3);
  m.identity.resize(n + 1);
  for (int i = 0; i <= n; ++i) m.identity[i] = i + 1;
  m.left_act = [](int s, Form& f) {
    for (int& x : f) {
      if (x == s + 1) x = s + 2;
      else if (x == s + 2) x = s + 1;
    }
  };
  m.right_act = [](Form& f, int s) { std::swap(f[s], f[s + 1]); };
  const bool compact = n + 1 <= 9;
  m.label = [compact](const Form& f) { return join_ints(f, compact); };
  m.parse_label = [n](std::string_view text) -> std::optional<Form> {
    if (text.find(',') != std::string_view::npos) return parse_int_list(text);
    Form f;
    for (char c : text) {
      if (c < '1' || c > '9') return std::nullopt;
      f.push_back(c - '0');
    }
    if (static_cast<int>(f.size()) != n + 1) return std::nullopt;
    return f;
  };
  return m;
}

int sign(int x) { return x < 0 ? -1 : 1; }

void swap_values(Form& f, int a, int b) {
  for (int& x : f) {
    if (std::abs(x) == a) x = sign(x) * b;
    else if (std::abs(x) == b) x = sign(x) * a;
  }
}

// Types B_n and D_n: signed permutations (even number of sign changes for D).
// Generator 0 is the sign flip of the letter 1 (B) or the map 1 -> -2,
// 2 -> -1 (D); generators 1..n-1 swap adjacent letters.
CoxeterModel signed_type(const ModelSpec& spec) {
  const int n = spec.param;
  const bool is_d = spec.type == CoxeterType::D;
  CoxeterModel m;
  m.spec = spec;
  m.coxeter_matrix = base_matrix(n);
  for (int i = 1; i + 1 < n; ++i) link(m.coxeter_matrix, i, i + 1, 3);
  if (is_d) link(m.coxeter_matrix, 0, 2, 3);
  else link(m.coxeter_matrix, 0, 1, 4);
  m.identity.resize(n);
  for (int i = 0; i < n; ++i) m.identity[i] = i + 1;
  m.left_act = [is_d](int s, Form& f) {
    if (s > 0) {
      swap_values(f, s, s + 1);
      return;
    }
    for (int& x : f) {
      if (!is_d) {
        if (std::abs(x) == 1) x = -x;
      } else if (std::abs(x) == 1) {
        x = -sign(x) * 2;
      } else if (std::abs(x) == 2) {
        x = -sign(x) * 1;
      }
    }
  };
  m.right_act = [is_d](Form& f, int s) {
    if (s > 0) {
      std::swap(f[s - 1], f[s]);
    } else if (!is_d) {
      f[0] = -f[0];
    } else {
      int a = f[0];
      f[0] = -f[1];
      f[1] = -a;
    }
  };
  m.label = [](const Form& f) { return join_ints(f, false); };
  m.parse_label = [n](std::string_view text) -> std::optional<Form> {
    auto f = parse_int_list(text);
    if (!f || static_cast<int>(f->size()) != n) return std::nullopt;
    return f;
  };
  return m;
}

// I2(m): the affine maps x -> +-x + k on Z/m. Form (k, flag) with flag = 1
// for reflections; s: x -> -x, t: x -> 1 - x, so st is a rotation of order m.
CoxeterModel dihedral(const ModelSpec& spec) {
  const int order = spec.param;
  CoxeterModel m;
  m.spec = spec;
  m.coxeter_matrix = base_matrix(2);
  link(m.coxeter_matrix, 0, 1, order);
  m.identity = {0, 0};
  auto compose = [order](const Form& a, const Form& b) {
    int eps = a[1] ? -1 : 1;
    int k = ((a[0] + eps * b[0]) % order + order) % order;
    return Form{k, a[1] ^ b[1]};
  };
  m.left_act = [compose](int s, Form& f) { f = compose(Form{s, 1}, f); };
  m.right_act = [compose](Form& f, int s) { f = compose(f, Form{s, 1}); };
  m.label = [](const Form& f) { return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + ")"; };
  m.parse_label = [](std::string_view text) -> std::optional<Form> {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    auto f = parse_int_list(text);
    if (!f || f->size() != 2) return std::nullopt;
    return f;
  };
  return m;
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  if (text.size() < 2) throw ConfigError("unsupported model '" + std::string(text) + "'");
  ModelSpec spec;
  if (text.starts_with("I2:")) {
    spec.type = CoxeterType::I2;
    spec.param = parse_int(text.substr(3));
    if (spec.param < 3) throw ConfigError("I2(m) requires m >= 3");
    return spec;
  }
  switch (text.front()) {
    case 'A': spec.type = CoxeterType::A; break;
    case 'B': spec.type = CoxeterType::B; break;
    case 'D': spec.type = CoxeterType::D; break;
    default: throw ConfigError("unsupported model '" + std::string(text) + "'");
  }
  spec.param = parse_int(text.substr(1));
  int min_rank = spec.type == CoxeterType::A ? 1 : spec.type == CoxeterType::B ? 2 : 4;
  if (spec.param < min_rank)
    throw ConfigError("model " + std::string(text) + " needs rank >= " + std::to_string(min_rank));
  if (spec.param > 31) throw ConfigError("rank too large");
  return spec;
}

CoxeterModel make_model(const ModelSpec& spec) {
  switch (spec.type) {
    case CoxeterType::A:
      if (spec.param < 0) break;
      return type_a(spec);
    case CoxeterType::B:
      if (spec.param < 2) break;
      return signed_type(spec);
    case CoxeterType::D:
      if (spec.param < 4) break;
      return signed_type(spec);
    case CoxeterType::I2:
      if (spec.param < 3) break;
      return dihedral(spec);
  }
  throw ConfigError("unsupported model " + spec.name());
}

std::size_t GroupTable::FormHash::operator()(const Form& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : f) {
    h ^= static_cast<std::size_t>(x + 1024);
    h *= 1099511628211ull;
  }
  return h;
}

GroupTable build_group(const CoxeterModel& model, std::size_t max_size) {
  GroupTable g;
  g.model_ = model;
  g.rank_ = model.spec.rank();
  const int rank = g.rank_;

  std::vector<ElementId> left_rows;  // [w * rank + s] during BFS
  g.forms_.push_back(model.identity);
  g.lookup_.emplace(model.identity, 0);
  g.length_.push_back(0);
  g.parent_.emplace_back(-1, 0);

  for (std::size_t w = 0; w < g.forms_.size(); ++w) {
    for (int s = 0; s < rank; ++s) {
      Form f = g.forms_[w];
      model.left_act(s, f);
      auto [it, inserted] = g.lookup_.try_emplace(f, static_cast<ElementId>(g.forms_.size()));
      if (inserted) {
        if (g.forms_.size() >= max_size)
          throw OverflowError("group " + model.spec.name() + " exceeds the size bound " + std::to_string(max_size));
        g.forms_.push_back(std::move(f));
        g.length_.push_back(g.length_[w] + 1);
        g.parent_.emplace_back(s, static_cast<ElementId>(w));
      }
      left_rows.push_back(it->second);
    }
  }

  const std::size_t n = g.forms_.size();
  g.left_.assign(static_cast<std::size_t>(rank) * n, 0);
  g.right_.assign(static_cast<std::size_t>(rank) * n, 0);
  g.left_desc_.assign(n, GenSet());
  g.right_desc_.assign(n, GenSet());
  for (std::size_t w = 0; w < n; ++w) {
    for (int s = 0; s < rank; ++s) {
      g.left_[g.index(s, static_cast<ElementId>(w))] = left_rows[w * rank + s];
      Form f = g.forms_[w];
      model.right_act(f, s);
      auto it = g.lookup_.find(f);
      if (it == g.lookup_.end()) throw ConfigError("model " + model.spec.name() + " is not closed under right action");
      g.right_[w * rank + s] = it->second;
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    std::uint32_t l = 0, r = 0;
    for (int s = 0; s < rank; ++s) {
      if (g.length_[g.left_[g.index(s, static_cast<ElementId>(w))]] < g.length_[w]) l |= 1u << s;
      if (g.length_[g.right_[w * rank + s]] < g.length_[w]) r |= 1u << s;
    }
    g.left_desc_[w] = GenSet(l);
    g.right_desc_[w] = GenSet(r);
  }

  g.inverse_.assign(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    auto [s, p] = g.parent_[w];
    g.inverse_[w] = g.right_mul(g.inverse_[p], s);
  }

  g.longest_ = static_cast<ElementId>(std::max_element(g.length_.begin(), g.length_.end()) - g.length_.begin());

  g.conj_gen_.assign(rank, -1);
  for (int s = 0; s < rank; ++s) {
    ElementId x = g.multiply(g.multiply(g.longest_, g.generator(s)), g.longest_);
    for (int t = 0; t < rank; ++t)
      if (g.generator(t) == x) g.conj_gen_[s] = t;
  }
  return g;
}

GroupTable build_group(const ModelSpec& spec, std::size_t max_size) {
  return build_group(make_model(spec), max_size);
}

GroupPtr make_group(std::string_view model_spec, std::size_t max_size) {
  return std::make_shared<const GroupTable>(build_group(parse_model(model_spec), max_size));
}

ElementId GroupTable::multiply(ElementId w, ElementId x) const {
  for (int s : word(x)) w = right_mul(w, s);
  return w;
}

std::vector<int> GroupTable::word(ElementId w) const {
  std::vector<int> out;
  while (w != 0) {
    auto [s, p] = parent_[w];
    out.push_back(s);
    w = p;
  }
  return out;
}

std::optional<ElementId> GroupTable::find(const Form& f) const {
  auto it = lookup_.find(f);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> GroupTable::find_label(std::string_view text) const {
  auto f = model_.parse_label(text);
  if (!f) return std::nullopt;
  return find(*f);
}

ElementId GroupTable::element(std::string_view text) const {
  auto w = find_label(text);
  if (!w) throw ArgumentError("'" + std::string(text) + "' is not an element of " + model().name());
  return *w;
}

ElementId GroupTable::longest_parabolic(GenSet I) const {
  std::vector<char> seen(size(), 0);
  std::deque<ElementId> queue{identity()};
  seen[identity()] = 1;
  ElementId best = identity();
  while (!queue.empty()) {
    ElementId w = queue.front();
    queue.pop_front();
    if (length(w) > length(best)) best = w;
    for (int s : I.members()) {
      ElementId x = left_mul(s, w);
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
  }
  return best;
}

std::pair<ElementId, ElementId> GroupTable::descent_class_bounds(GenSet I) const {
  ElementId u = longest_parabolic(I);
  ElementId v = multiply(longest_, longest_parabolic(I.complement(rank_)));
  return {u, v};
}

std::vector<ElementId> GroupTable::descent_class(GenSet I) const { return descent_union(I, I); }

std::vector<ElementId> GroupTable::descent_union(GenSet I, GenSet J) const {
  if (!I.subset_of(J)) throw ArgumentError("descent_union requires I to be a subset of J");
  std::vector<ElementId> out;
  for (ElementId w = 0; w < size(); ++w) {
    GenSet d = right_descents(w);
    if (I.subset_of(d) && d.subset_of(J)) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(), [this](ElementId a, ElementId b) { return length(a) < length(b); });
  return out;
}

ElementId GroupTable::conj_w0(ElementId w) const { return multiply(multiply(longest_, w), longest_); }

GenSet GroupTable::conj_w0_set(GenSet I) const {
  GenSet out;
  for (int s : I.members()) out = out.with(conj_gen_[s]);
  return out;
}

}  // namespace zerohecke
