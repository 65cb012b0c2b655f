#include "daggerhom/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace daggerhom {

namespace {

void reduce_word(std::vector<int32_t>& w) {
  std::vector<int32_t> out;
  for (int32_t letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  w = std::move(out);
}

std::vector<std::vector<int>> symmetric_table(int n, std::vector<std::vector<int>>& perms) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  perms.clear();
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  // identity is the lexicographically least permutation, index 0
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t t = 0; t < perms.size(); ++t) {
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = perms[s][perms[t][i]];
      table[s][t] = index[comp];
    }
  }
  return table;
}

}  // namespace

Group Group::free_group(int rank) {
  if (rank < 1) throw std::invalid_argument("free_group: rank must be >= 1");
  Group g;
  g.kind_ = GroupKind::Free;
  g.rank_ = rank;
  g.spec_ = "free:" + std::to_string(rank);
  for (int i = 1; i <= rank; ++i) {
    g.generators_.push_back(Element{{static_cast<int32_t>(i)}});
    g.generators_.push_back(Element{{static_cast<int32_t>(-i)}});
  }
  return g;
}

Group Group::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free_abelian: rank must be >= 1");
  Group g;
  g.kind_ = GroupKind::FreeAbelian;
  g.rank_ = rank;
  g.spec_ = "zn:" + std::to_string(rank);
  for (int i = 0; i < rank; ++i) {
    Element plus{std::vector<int32_t>(rank, 0)}, minus{std::vector<int32_t>(rank, 0)};
    plus.v[i] = 1;
    minus.v[i] = -1;
    g.generators_.push_back(plus);
    g.generators_.push_back(minus);
  }
  return g;
}

Group Group::finite(std::vector<std::vector<int>> table, std::vector<int> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("finite: empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("finite: table is not square");
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw std::invalid_argument("finite: table index out of range");
  }
  // locate the identity
  int e = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] != static_cast<int>(j) || table[j][i] != static_cast<int>(j)) {
        ok = false;
        break;
      }
    if (ok) {
      e = static_cast<int>(i);
      break;
    }
  }
  if (e != 0) {
    if (e < 0) throw std::invalid_argument("finite: table has no identity element");
    // renumber so the identity sits at index 0
    std::vector<int> to_new(n);
    for (std::size_t i = 0; i < n; ++i) to_new[i] = static_cast<int>(i);
    std::swap(to_new[0], to_new[e]);
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t2[to_new[i]][to_new[j]] = to_new[table[i][j]];
    table = std::move(t2);
    for (int& gidx : generators) gidx = to_new[gidx];
  }
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw std::invalid_argument("finite: table is not associative");
  }

  Group g;
  g.kind_ = GroupKind::Finite;
  g.rank_ = static_cast<int>(n);
  g.spec_ = "finite:" + std::to_string(n);
  g.table_ = std::move(table);

  if (generators.empty()) {
    for (std::size_t i = 1; i < n; ++i) generators.push_back(static_cast<int>(i));
  }
  // close under inverses
  std::set<int> gens(generators.begin(), generators.end());
  gens.erase(0);
  for (int gi : std::vector<int>(gens.begin(), gens.end())) {
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[gi][j] == 0) gens.insert(static_cast<int>(j));
  }
  for (int gi : gens) g.generators_.push_back(Element{{gi}});

  // BFS word lengths from the identity
  g.finite_lengths_.assign(n, -1);
  g.finite_lengths_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Element& gen : g.generators_) {
      int nxt = g.table_[cur][gen.v[0]];
      if (g.finite_lengths_[nxt] < 0) {
        g.finite_lengths_[nxt] = g.finite_lengths_[cur] + 1;
        queue.push_back(nxt);
      }
    }
  }
  for (long l : g.finite_lengths_)
    if (l < 0) throw std::invalid_argument("finite: generators do not generate the group");
  return g;
}

Group Group::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  Group g = finite(std::move(table));
  g.spec_ = "cyclic:" + std::to_string(n);
  return g;
}

Group Group::symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric: supported degrees are 1..6");
  std::vector<std::vector<int>> perms;
  Group g = finite(symmetric_table(n, perms));
  g.spec_ = "sym:" + std::to_string(n);
  return g;
}

Group Group::parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must look like kind:arg, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "free") return free_group(std::stoi(arg));
  if (kind == "zn") return free_abelian(std::stoi(arg));
  if (kind == "sym") return symmetric(std::stoi(arg));
  if (kind == "cyclic") return cyclic(std::stoi(arg));
  if (kind == "finite") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("finite: cannot open table file '" + arg + "'");
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<std::vector<int>> table;
    std::vector<int> gens;
    if (j.is_array()) {
      table = j.get<std::vector<std::vector<int>>>();
    } else {
      table = j.at("table").get<std::vector<std::vector<int>>>();
      if (j.contains("generators")) gens = j["generators"].get<std::vector<int>>();
    }
    return finite(std::move(table), std::move(gens));
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

std::size_t Group::order() const {
  if (kind_ != GroupKind::Finite) throw std::logic_error("order: group is infinite");
  return table_.size();
}

Element Group::identity() const {
  switch (kind_) {
    case GroupKind::Free: return Element{};
    case GroupKind::FreeAbelian: return Element{std::vector<int32_t>(rank_, 0)};
    case GroupKind::Finite: return Element{{0}};
  }
  return Element{};
}

Element Group::multiply(const Element& a, const Element& b) const {
  switch (kind_) {
    case GroupKind::Free: {
      Element r = a;
      r.v.insert(r.v.end(), b.v.begin(), b.v.end());
      reduce_word(r.v);
      return r;
    }
    case GroupKind::FreeAbelian: {
      Element r = a;
      for (int i = 0; i < rank_; ++i) r.v[i] += b.v[i];
      return r;
    }
    case GroupKind::Finite:
      return Element{{static_cast<int32_t>(table_[a.v[0]][b.v[0]])}};
  }
  return Element{};
}

Element Group::inverse(const Element& a) const {
  switch (kind_) {
    case GroupKind::Free: {
      Element r;
      r.v.reserve(a.v.size());
      for (auto it = a.v.rbegin(); it != a.v.rend(); ++it) r.v.push_back(-*it);
      return r;
    }
    case GroupKind::FreeAbelian: {
      Element r = a;
      for (auto& c : r.v) c = -c;
      return r;
    }
    case GroupKind::Finite: {
      for (std::size_t j = 0; j < table_.size(); ++j)
        if (table_[a.v[0]][j] == 0) return Element{{static_cast<int32_t>(j)}};
      throw std::logic_error("inverse: table lacks an inverse");
    }
  }
  return Element{};
}

bool Group::is_valid(const Element& a) const {
  switch (kind_) {
    case GroupKind::Free:
      for (std::size_t i = 0; i < a.v.size(); ++i) {
        if (a.v[i] == 0 || std::abs(a.v[i]) > rank_) return false;
        if (i + 1 < a.v.size() && a.v[i + 1] == -a.v[i]) return false;
      }
      return true;
    case GroupKind::FreeAbelian:
      return static_cast<int>(a.v.size()) == rank_;
    case GroupKind::Finite:
      return a.v.size() == 1 && a.v[0] >= 0 &&
             static_cast<std::size_t>(a.v[0]) < table_.size();
  }
  return false;
}

long Group::word_length(const Element& g) const {
  if (!is_valid(g)) throw std::invalid_argument("word_length: element does not belong to group");
  switch (kind_) {
    case GroupKind::Free:
      return static_cast<long>(g.v.size());
    case GroupKind::FreeAbelian: {
      long s = 0;
      for (auto c : g.v) s += std::abs(c);
      return s;
    }
    case GroupKind::Finite:
      return finite_lengths_[g.v[0]];
  }
  return 0;
}

long Group::distance(const Element& g, const Element& h) const {
  return word_length(multiply(inverse(g), h));
}

std::vector<Element> Group::ball(int radius, std::size_t cap) const {
  if (radius < 0) throw std::invalid_argument("ball: radius must be >= 0");
  std::vector<Element> out;
  switch (kind_) {
    case GroupKind::Free: {
      std::vector<Element> frontier{identity()};
      out.push_back(identity());
      for (int r = 1; r <= radius; ++r) {
        std::vector<Element> next;
        for (const Element& w : frontier) {
          for (int32_t letter = -rank_; letter <= rank_; ++letter) {
            if (letter == 0) continue;
            if (!w.v.empty() && w.v.back() == -letter) continue;
            Element x = w;
            x.v.push_back(letter);
            next.push_back(std::move(x));
            if (out.size() + next.size() > cap) throw BallCapExceeded(cap);
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      break;
    }
    case GroupKind::FreeAbelian: {
      std::vector<int32_t> cur(rank_, 0);
      std::function<void(int, int)> rec = [&](int dim, int budget) {
        if (dim == rank_) {
          if (out.size() >= cap) throw BallCapExceeded(cap);
          out.push_back(Element{cur});
          return;
        }
        for (int c = -budget; c <= budget; ++c) {
          cur[dim] = c;
          rec(dim + 1, budget - std::abs(c));
        }
        cur[dim] = 0;
      };
      rec(0, radius);
      break;
    }
    case GroupKind::Finite: {
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (finite_lengths_[i] <= radius) {
          if (out.size() >= cap) throw BallCapExceeded(cap);
          out.push_back(Element{{static_cast<int32_t>(i)}});
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element Group::from_letters(const std::vector<int32_t>& letters) const {
  switch (kind_) {
    case GroupKind::Free: {
      Element g{letters};
      reduce_word(g.v);
      if (!is_valid(g)) throw std::invalid_argument("from_letters: letter out of range");
      return g;
    }
    case GroupKind::FreeAbelian: {
      Element g{letters};
      if (!is_valid(g)) throw std::invalid_argument("from_letters: wrong coordinate count");
      return g;
    }
    case GroupKind::Finite: {
      if (letters.size() != 1) throw std::invalid_argument("from_letters: expected one index");
      Element g{letters};
      if (!is_valid(g)) throw std::invalid_argument("from_letters: index out of range");
      return g;
    }
  }
  return Element{};
}

std::string Group::format(const Element& g) const {
  switch (kind_) {
    case GroupKind::Free: {
      if (g.v.empty()) return "e";
      std::string s;
      for (auto letter : g.v)
        s += static_cast<char>((letter > 0 ? 'a' + letter : 'A' - letter) - 1);
      return s;
    }
    case GroupKind::FreeAbelian: {
      std::string s = "(";
      for (int i = 0; i < rank_; ++i) {
        if (i) s += ",";
        s += std::to_string(g.v[i]);
      }
      return s + ")";
    }
    case GroupKind::Finite:
      return g.v[0] == 0 ? "e" : "g" + std::to_string(g.v[0]);
  }
  return "";
}

Element Group::parse_element(const std::string& text) const {
  switch (kind_) {
    case GroupKind::Free: {
      if (text == "e") return identity();
      std::vector<int32_t> letters;
      for (char c : text) {
        if (c >= 'a' && c <= 'z')
          letters.push_back(static_cast<int32_t>(c - 'a' + 1));
        else if (c >= 'A' && c <= 'Z')
          letters.push_back(-static_cast<int32_t>(c - 'A' + 1));
        else
          throw std::invalid_argument("parse_element: bad letter '" + std::string(1, c) + "'");
      }
      return from_letters(letters);
    }
    case GroupKind::FreeAbelian: {
      std::string t = text;
      std::erase(t, '(');
      std::erase(t, ')');
      std::vector<int32_t> coords;
      std::stringstream ss(t);
      std::string item;
      while (std::getline(ss, item, ',')) coords.push_back(std::stoi(item));
      return from_letters(coords);
    }
    case GroupKind::Finite: {
      if (text == "e") return identity();
      std::string t = text;
      if (!t.empty() && t[0] == 'g') t = t.substr(1);
      return from_letters({std::stoi(t)});
    }
  }
  return Element{};
}

Element Combing::evaluate(int stage, const Element& g) const {
  if (stage < 0) throw std::invalid_argument("combing: stage must be >= 0");
  return eval_(stage, g);
}

Combing Combing::builtin(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Free: {
      auto eval = [](int stage, const Element& x) {
        if (static_cast<std::size_t>(stage) >= x.v.size()) return x;
        Element p;
        p.v.assign(x.v.begin(), x.v.begin() + stage);
        return p;
      };
      return Combing(g, eval, CombingConstants{Rational(1), Rational(1), 1});
    }
    case GroupKind::FreeAbelian: {
      auto eval = [](int stage, const Element& x) {
        Element p = x;
        int remaining = stage;
        for (auto& c : p.v) {
          int take = std::min<int>(std::abs(c), remaining);
          remaining -= take;
          c = c < 0 ? -take : take;
        }
        return p;
      };
      return Combing(g, eval, CombingConstants{Rational(2), Rational(1), 1});
    }
    case GroupKind::Finite: {
      Element e = g.identity();
      long diam = 0;
      for (const Element& x : g.ball(static_cast<int>(g.order())))
        diam = std::max(diam, g.word_length(x));
      auto eval = [e](int stage, const Element& x) { return stage == 0 ? e : x; };
      return Combing(g, eval,
                     CombingConstants{Rational(1), Rational(std::max<long>(diam, 1)), 1});
    }
  }
  throw std::logic_error("builtin combing: unknown group kind");
}

CombingProfile combing_profile(const Combing& c, int radius, std::size_t cap) {
  const Group& g = c.group();
  const std::vector<Element> ball = g.ball(radius, cap);
  const int stage_limit = 4 * radius + 4;

  CombingProfile p;
  p.c_est = 0;
  p.s_est = 0;
  p.d_est = 0;

  // stage images per element, up to the stage cap
  std::vector<std::vector<Element>> stages(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    stages[i].reserve(stage_limit + 1);
    for (int k = 0; k <= stage_limit; ++k) stages[i].push_back(c.evaluate(k, ball[i]));
  }

  int max_stage = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    long j = 0;
    int last_change = -1;
    for (int k = 0; k < stage_limit; ++k) {
      if (stages[i][k] != stages[i][k + 1]) {
        ++j;
        last_change = k;
        max_stage = std::max(max_stage, k + 1);
        Rational step(g.distance(stages[i][k], stages[i][k + 1]));
        p.s_est = std::max(p.s_est, step);
      }
    }
    p.j_table[ball[i]] = j;
    // require a constant tail at the fixed point; a lone equal pair at the
    // window edge does not count as stabilization
    if (stages[i].back() != ball[i] || last_change + 4 > stage_limit) p.stabilized = false;
  }
  p.max_stage = max_stage;

  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Rational denom(g.word_length(ball[i]) + 1);
    for (int k = 0; k <= max_stage; ++k) {
      Rational ratio = Rational(g.word_length(stages[i][k]) + 1) / denom;
      p.d_est = std::max(p.d_est, ratio);
    }
  }

  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = i + 1; j < ball.size(); ++j) {
      const Rational denom(g.distance(ball[i], ball[j]) + 1);
      for (int k = 0; k <= max_stage; ++k) {
        Rational ratio = Rational(g.distance(stages[i][k], stages[j][k])) / denom;
        p.c_est = std::max(p.c_est, ratio);
      }
    }
  }

  // least-squares fit of log J against log(l+1)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [el, j] : p.j_table) {
    if (j < 1 || g.word_length(el) < 1) continue;
    double x = std::log(static_cast<double>(g.word_length(el)) + 1.0);
    double y = std::log(static_cast<double>(j));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n >= 2 && sxx * n - sx * sx > 1e-12) {
    p.fitted_growth_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else if (n >= 1 && sx > 1e-12) {
    p.fitted_growth_order = sy / sx;
  }
  return p;
}

}  // namespace daggerhom
