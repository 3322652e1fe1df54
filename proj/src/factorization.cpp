#include "taufact/factorization.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"

namespace taufact {

namespace {

// Exploration limit for the boundedness state graph.
constexpr std::size_t kStateBudget = 100000;

Element product(const Ring& R, const std::vector<Element>& xs) {
  Element p = R.one();
  for (const auto& x : xs) p = R.mul(p, x);
  return p;
}

Element least_in_orbit(const Ring& R, const Element& x) {
  Element best = x;
  for (const auto& u : R.units()) best = std::min(best, R.mul(u, x));
  return best;
}

// The divisors of the target with memoized arithmetic, indexed in element
// order.
class Universe {
 public:
  Universe(const TauRelation& t, const Element& a) : R_(t.ring()), t_(t), a_(a) {
    el_ = R_.divisors(a);
    n_ = el_.size();
    idx_.reserve(n_ * 2);
    for (std::size_t i = 0; i < n_; ++i) idx_.emplace(el_[i], static_cast<int>(i));
    unit_.assign(n_, 0);
    near_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      unit_[i] = R_.is_unit(el_[i]);
      if (!unit_[i] && !R_.is_zero(el_[i])) raw_.push_back(static_cast<int>(i));
    }
    one_ = find(R_.one());
    a_idx_ = find(a);
    for (const auto& u : R_.units()) near_[find(R_.mul(u, a))] = 1;
    mul_.assign(n_ * n_, -1);
    tau_.assign(n_ * n_, -1);
    cls_.assign(n_, -1);
    self_very_.assign(n_, -1);
  }

  const Ring& ring() const { return R_; }
  const TauRelation& tau() const { return t_; }
  std::size_t size() const { return n_; }
  const Element& at(int i) const { return el_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& raw() const { return raw_; }
  int one() const { return one_; }
  int target() const { return a_idx_; }
  bool near_target(int i) const { return near_[static_cast<std::size_t>(i)]; }

  int find(const Element& x) const {
    auto it = idx_.find(x);
    return it == idx_.end() ? -1 : it->second;
  }

  // Index of el[i] * el[j], or -2 when the product does not divide a.
  int mul(int i, int j) {
    int& slot = mul_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    if (slot == -1) {
      int k = find(R_.mul(at(i), at(j)));
      slot = k < 0 ? -2 : k;
      mul_[static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(i)] = slot;
    }
    return slot;
  }

  bool tau(int i, int j) {
    auto& slot = tau_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    if (slot < 0) {
      slot = t_.holds(at(i), at(j)) ? 1 : 0;
      tau_[static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(i)] = slot;
    }
    return slot == 1;
  }

  bool self_very(int i) {
    auto& s = self_very_[static_cast<std::size_t>(i)];
    if (s < 0) s = R_.associated(at(i), at(i), AssociateKind::VeryStrongAssociate) ? 1 : 0;
    return s == 1;
  }

  // Class id under beta: index of the least class member. A non-self-very-
  // strong x under VeryStrongAssociate is its own class.
  int class_id(int i, AssociateKind beta) {
    int& c = cls_[static_cast<std::size_t>(i)];
    if (c >= 0) return c;
    switch (beta) {
      case AssociateKind::StrongAssociate: {
        int best = i;
        for (const auto& u : R_.units()) best = std::min(best, find(R_.mul(u, at(i))));
        c = best;
        break;
      }
      case AssociateKind::Associate:
        c = i;
        for (int j = 0; j < i; ++j)
          if (R_.divides(at(j), at(i)) && R_.divides(at(i), at(j))) {
            c = j;
            break;
          }
        break;
      case AssociateKind::VeryStrongAssociate:
        c = i;
        if (self_very(i))
          for (int j = 0; j < i; ++j)
            if (self_very(j) && R_.divides(at(j), at(i)) && R_.divides(at(i), at(j))) {
              c = j;
              break;
            }
        break;
    }
    return c;
  }

  KeyPart key_part(int i, AssociateKind beta) {
    int c = class_id(i, beta);
    bool identity = beta == AssociateKind::VeryStrongAssociate && !self_very(i);
    return KeyPart{at(c), identity};
  }

  // Orbit representatives among raw(), valid when tau is unit-invariant.
  std::vector<int> orbit_reps() {
    std::vector<int> out;
    for (int i : raw_) {
      int best = i;
      for (const auto& u : R_.units()) best = std::min(best, find(R_.mul(u, at(i))));
      if (best == i) out.push_back(i);
    }
    return out;
  }

 private:
  const Ring& R_;
  const TauRelation& t_;
  Element a_;
  std::vector<Element> el_;
  std::size_t n_ = 0;
  std::unordered_map<Element, int, ElementHash> idx_;
  std::vector<char> unit_, near_;
  std::vector<int> raw_;
  int one_ = -1, a_idx_ = -1;
  std::vector<int> mul_;
  std::vector<signed char> tau_;
  std::vector<int> cls_;
  std::vector<signed char> self_very_;
};

// Nondecreasing multisets over `cands` whose partial products divide a.
template <class Visit>
bool dfs(Universe& U, const std::vector<int>& cands, int cap, std::vector<int>& cur, std::size_t start, int P,
         Visit& visit) {
  for (std::size_t k = start; k < cands.size(); ++k) {
    int x = cands[k];
    bool ok = true;
    for (int y : cur)
      if (!U.tau(x, y)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int P2 = U.mul(P, x);
    if (P2 < 0) continue;
    cur.push_back(x);
    if (U.near_target(P2) && !visit(cur, P2)) return false;
    if (static_cast<int>(cur.size()) < cap && !dfs(U, cands, cap, cur, k, P2, visit)) return false;
    cur.pop_back();
  }
  return true;
}

struct BoundResult {
  Unbounded unbounded = Unbounded::Unknown;
  bool exists = false;
  std::optional<int> shortest;
  std::optional<int> longest;  // longest accepted path, when bounded
  std::optional<Pump> pump;
};

// State graph over (clique of distinct factors, partial product, mark).
// For a uniform relation the clique collapses to a marker. A useful cycle
// means factorizations of every length exist; otherwise the longest path
// bounds the length. With `marked`, only paths using a marked factor count.
class BoundGraph {
 public:
  BoundGraph(Universe& U, const std::vector<int>& cands, std::vector<char> marked = {})
      : U_(U), cands_(cands), uniform_(U.tau().uniform()), marked_(std::move(marked)) {}

  BoundResult run(bool want_pump = true) {
    BoundResult res;
    if (!explore()) return res;
    tarjan();
    mark_useful();
    res.exists = useful_[0] != 0;
    for (std::size_t s = 0; s < states_.size(); ++s)
      if (accept(static_cast<int>(s)) && (!res.shortest || dist_[s] < *res.shortest)) res.shortest = dist_[s];
    for (std::size_t s = 0; s < states_.size(); ++s)
      if (useful_[s] && cyclic_[scc_[s]]) {
        res.unbounded = Unbounded::Yes;
        if (want_pump) res.pump = pump_through(static_cast<int>(s));
        return res;
      }
    res.unbounded = Unbounded::No;
    if (longest_[0] >= 0) res.longest = longest_[0];
    return res;
  }

 private:
  struct Edge {
    int to;
    int x;
  };
  struct Key {
    std::vector<int> C;
    int P;
    bool mark;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  static constexpr int kAllInDomain = -1;

  bool accept(int s) const {
    const auto& k = states_[s];
    return !k.C.empty() && U_.near_target(k.P) && (marked_.empty() || k.mark);
  }

  int intern(Key key, int parent, int via) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    ids_.emplace(key, id);
    states_.push_back(std::move(key));
    adj_.emplace_back();
    parent_.push_back({parent, via});
    dist_.push_back(parent < 0 ? 0 : dist_[parent] + 1);
    return id;
  }

  bool explore() {
    intern(Key{{}, U_.one(), false}, -1, -1);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int x : cands_) {
        const Key cur = states_[s];
        std::vector<int> C2;
        if (uniform_) {
          bool in = U_.tau().in_domain(U_.at(x));
          if (cur.C.empty()) C2 = {in ? kAllInDomain : x};
          else if (cur.C[0] == kAllInDomain && in) C2 = cur.C;
          else continue;
        } else {
          bool ok = true;
          for (int y : cur.C)
            if (!U_.tau(x, y)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          C2 = cur.C;
          auto pos = std::lower_bound(C2.begin(), C2.end(), x);
          if (pos == C2.end() || *pos != x) C2.insert(pos, x);
        }
        int P2 = U_.mul(cur.P, x);
        if (P2 < 0) continue;
        bool mark = cur.mark || (!marked_.empty() && marked_[static_cast<std::size_t>(x)]);
        std::size_t before = states_.size();
        int t = intern(Key{std::move(C2), P2, mark}, s, x);
        adj_[s].push_back({t, x});
        if (states_.size() > before) {
          if (states_.size() > kStateBudget) return false;
          queue.push_back(t);
        }
      }
    }
    return true;
  }

  void tarjan() {
    const int n = static_cast<int>(states_.size());
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    scc_.assign(n, -1);
    longest_.assign(n, -1);
    int counter = 0;
    struct Frame {
      int v;
      std::size_t e;
    };
    for (int root = 0; root < n; ++root) {
      if (index[root] >= 0) continue;
      std::vector<Frame> call{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& f = call.back();
        if (f.e < adj_[f.v].size()) {
          int w = adj_[f.v][f.e++].to;
          if (index[w] < 0) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] != index[v]) continue;
        int id = static_cast<int>(cyclic_.size());
        std::vector<int> members;
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc_[w] = id;
          members.push_back(w);
          if (w == v) break;
        }
        bool cyc = members.size() > 1;
        for (const auto& e : adj_[v]) cyc = cyc || e.to == v;
        cyclic_.push_back(cyc);
        order_.push_back(std::move(members));
      }
    }
  }

  void mark_useful() {
    const int n = static_cast<int>(states_.size());
    useful_.assign(n, 0);
    // SCCs complete in reverse topological order: successors first.
    for (const auto& members : order_) {
      for (int v : members) {
        if (accept(v)) {
          useful_[v] = 1;
          longest_[v] = std::max(longest_[v], 0);
        }
        for (const auto& e : adj_[v])
          if (useful_[e.to]) {
            useful_[v] = 1;
            if (scc_[e.to] != scc_[v] && longest_[e.to] >= 0) longest_[v] = std::max(longest_[v], longest_[e.to] + 1);
          }
      }
      // A cyclic SCC is useful as a whole once one member is.
      if (members.size() > 1) {
        bool any = false;
        for (int v : members) any = any || useful_[v];
        if (any)
          for (int v : members) useful_[v] = 1;
      }
    }
  }

  std::vector<int> path_back(int s) const {
    std::vector<int> xs;
    for (int v = s; parent_[v].first >= 0; v = parent_[v].first) xs.push_back(parent_[v].second);
    std::reverse(xs.begin(), xs.end());
    return xs;
  }

  // Shortest edge sequence from s to a state satisfying goal, through
  // states allowed by keep.
  template <class Goal, class Keep>
  std::vector<int> bfs(int s, Goal goal, Keep keep, bool allow_empty) const {
    if (allow_empty && goal(s)) return {};
    std::vector<std::pair<int, int>> prev(states_.size(), {-2, -1});
    std::deque<int> q{s};
    prev[s] = {-1, -1};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : adj_[v]) {
        if (!keep(e.to)) continue;
        if (goal(e.to)) {
          std::vector<int> xs{e.x};
          for (int w = v; prev[w].first >= 0; w = prev[w].first) xs.push_back(prev[w].second);
          std::reverse(xs.begin(), xs.end());
          return xs;
        }
        if (prev[e.to].first != -2) continue;
        prev[e.to] = {v, e.x};
        q.push_back(e.to);
      }
    }
    throw std::logic_error("bound graph: no path");
  }

  Pump pump_through(int s) const {
    auto prefix = path_back(s);
    int comp = scc_[s];
    auto cycle = bfs(s, [&](int v) { return v == s; }, [&](int v) { return scc_[v] == comp; }, false);
    auto suffix = bfs(s, [&](int v) { return accept(v); }, [&](int v) { return useful_[v] != 0; }, true);
    std::vector<Element> base;
    for (int x : prefix) base.push_back(U_.at(x));
    for (int x : suffix) base.push_back(U_.at(x));
    Pump p;
    p.base = make_factorization(U_.ring(), U_.at(U_.target()), std::move(base));
    for (int x : cycle) p.word.push_back(U_.at(x));
    std::sort(p.word.begin(), p.word.end());
    return p;
  }

  Universe& U_;
  const std::vector<int>& cands_;
  bool uniform_;
  std::vector<char> marked_;
  std::map<Key, int> ids_;
  std::vector<Key> states_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<std::pair<int, int>> parent_;
  std::vector<int> dist_;
  std::vector<int> scc_, longest_;
  std::vector<char> cyclic_, useful_;
  std::vector<std::vector<int>> order_;
};

void check_target(const TauRelation& t, const Element& a, int cap) {
  const Ring& R = t.ring();
  R.check_element(a);
  if (R.is_unit(a)) throw PreconditionError("target is a unit");
  if (R.is_zero(a) && !R.finite()) throw PreconditionError("cannot factor 0 in an infinite ring");
  if (cap < 2) throw PreconditionError("cap must be >= 2");
}

// Targets whose divisor set is infinite: only trivial factorizations can
// exist when every tau-related pair is regular (a is not) or multiplies to
// zero (a is not zero).
std::vector<Element> degenerate_trivials(const TauRelation& t, const Element& a) {
  const Ring& R = t.ring();
  bool only_trivial = (t.regular_only() && !R.is_regular(a)) || (t.zero_product() && !R.is_zero(a));
  if (!only_trivial)
    throw UnsupportedError("divisor set of " + format_element(a) + " is infinite and relation " + t.to_string() +
                           " admits non-trivial factorizations there");
  std::vector<Element> xs;
  for (const auto& u : R.units()) xs.push_back(R.mul(R.inverse(u), a));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

// ------------------------------------------------------------ Factorization

nlohmann::json to_json(const Factorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& x : f.factors) factors.push_back(element_to_json(x));
  return {{"unit", element_to_json(f.unit)},
          {"factors", factors},
          {"target", element_to_json(f.target)},
          {"trivial", f.trivial()}};
}

Factorization make_factorization(const Ring& R, const Element& target, std::vector<Element> factors) {
  std::sort(factors.begin(), factors.end());
  auto u = R.unit_cofactor(target, product(R, factors));
  if (!u) throw PreconditionError("product of factors is not a unit multiple of " + format_element(target));
  return Factorization{*u, std::move(factors), target};
}

bool is_tau_factorization(const TauRelation& t, const Factorization& f) {
  const Ring& R = t.ring();
  if (!R.contains(f.unit) || !R.is_unit(f.unit) || !R.contains(f.target) || R.is_unit(f.target)) return false;
  if (f.factors.empty()) return false;
  if (!std::is_sorted(f.factors.begin(), f.factors.end())) return false;
  for (const auto& x : f.factors)
    if (!R.contains(x)) return false;
  if (R.mul(f.unit, product(R, f.factors)) != f.target) return false;
  if (f.factors.size() == 1 && R.is_zero(f.factors[0])) return R.is_zero(f.target);
  for (const auto& x : f.factors)
    if (!R.in_r_sharp(x)) return false;
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    for (std::size_t j = i + 1; j < f.factors.size(); ++j)
      if (!t.holds(f.factors[i], f.factors[j])) return false;
  return true;
}

nlohmann::json to_json(const CanonicalKey& k) {
  auto j = nlohmann::json::array();
  for (const auto& p : k) {
    if (p.identity) j.push_back({{"identity", element_to_json(p.rep)}});
    else j.push_back(element_to_json(p.rep));
  }
  return j;
}

KeyPart class_of(const Ring& R, const Element& x, const Element& target, AssociateKind beta) {
  (void)target;  // every class member divides x, hence the target
  if (beta == AssociateKind::StrongAssociate) return {least_in_orbit(R, x), false};
  bool self = true;
  if (beta == AssociateKind::VeryStrongAssociate) {
    self = R.associated(x, x, AssociateKind::VeryStrongAssociate);
    if (!self) return {x, true};
  }
  // Without a finite divisor set the supported rings have associate
  // classes equal to unit orbits.
  if (!R.has_finite_divisors(x)) return {least_in_orbit(R, x), false};
  for (const auto& y : R.divisors(x)) {
    if (!R.divides(x, y)) continue;
    if (beta == AssociateKind::VeryStrongAssociate && !R.associated(y, y, AssociateKind::VeryStrongAssociate)) continue;
    return {y, false};
  }
  return {x, false};
}

CanonicalKey canonicalize(const Ring& R, const Factorization& f, AssociateKind beta) {
  CanonicalKey k;
  k.reserve(f.factors.size());
  for (const auto& x : f.factors) k.push_back(class_of(R, x, f.target, beta));
  std::sort(k.begin(), k.end());
  return k;
}

std::string to_string(Unbounded u) {
  switch (u) {
    case Unbounded::No: return "no";
    case Unbounded::Yes: return "yes";
    case Unbounded::Unknown: return "unknown";
  }
  return "?";
}

Factorization Pump::pumped(const Ring& R, int times) const {
  auto fs = base.factors;
  for (int i = 0; i < times; ++i) fs.insert(fs.end(), word.begin(), word.end());
  return make_factorization(R, base.target, std::move(fs));
}

nlohmann::json to_json(const Pump& p) {
  auto word = nlohmann::json::array();
  for (const auto& x : p.word) word.push_back(element_to_json(x));
  return {{"base", to_json(p.base)}, {"word", word}};
}

std::size_t FactorizationSet::nontrivial_count() const {
  std::size_t n = 0;
  for (const auto& it : items) n += it.rep.length() >= 2;
  return n;
}

nlohmann::json to_json(const FactorizationSet& s) {
  auto items = nlohmann::json::array();
  for (const auto& it : s.items) items.push_back({{"key", to_json(it.key)}, {"factorization", to_json(it.rep)}});
  nlohmann::json j{{"target", element_to_json(s.target)},
                   {"beta", to_string(s.beta)},
                   {"cap", s.cap},
                   {"complete", s.complete},
                   {"unbounded", to_string(s.unbounded)},
                   {"items", items}};
  if (s.max_length) j["max_length"] = *s.max_length;
  if (s.pump) j["pump"] = to_json(*s.pump);
  return j;
}

int default_cap(const Ring& R, const Element& a) {
  if (!R.has_finite_divisors(a)) return 8;
  std::vector<Element> reps;
  for (const auto& d : R.divisors(a)) {
    if (R.is_unit(d)) continue;
    bool seen = false;
    for (const auto& r : reps)
      if (R.associated(r, d, AssociateKind::Associate)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(d);
  }
  return std::max(8, static_cast<int>(reps.size()) + 1);
}

FactorizationSet enumerate_factorizations(const TauRelation& t, const Element& a, AssociateKind beta, int cap,
                                          const FactorTagger& tagger) {
  check_target(t, a, cap);
  const Ring& R = t.ring();
  FactorizationSet out;
  out.target = a;
  out.beta = beta;
  out.cap = cap;

  if (!R.has_finite_divisors(a)) {
    std::map<CanonicalKey, FactorizationItem> acc;
    for (const auto& x : degenerate_trivials(t, a)) {
      CanonicalKey key{class_of(R, x, a, beta)};
      std::uint32_t tags = tagger ? tagger(x) : 0;
      auto [it, fresh] = acc.try_emplace(key, FactorizationItem{key, make_factorization(R, a, {x}), tags});
      if (!fresh) it->second.tags |= tags;
    }
    for (auto& [k, v] : acc) out.items.push_back(std::move(v));
    out.complete = true;
    out.unbounded = Unbounded::No;
    out.max_length = 1;
    return out;
  }

  Universe U(t, a);
  bool reduce = t.unit_invariant() && beta != AssociateKind::VeryStrongAssociate;
  std::vector<int> cands = reduce ? U.orbit_reps() : U.raw();

  std::vector<std::int64_t> tag_cache(U.size(), -1);
  auto tag_of = [&](int i) -> std::uint32_t {
    if (!tagger) return 0;
    auto& c = tag_cache[static_cast<std::size_t>(i)];
    if (c < 0) c = tagger(U.at(i));
    return static_cast<std::uint32_t>(c);
  };

  struct Acc {
    std::vector<int> rep;
    std::uint32_t tags;
  };
  std::map<std::vector<int>, Acc> acc;
  auto record = [&](const std::vector<int>& cur) {
    std::vector<int> key;
    key.reserve(cur.size());
    std::uint32_t tags = tagger ? ~0u : 0u;
    for (int x : cur) {
      key.push_back(U.class_id(x, beta));
      if (tagger) tags &= tag_of(x);
    }
    std::sort(key.begin(), key.end());
    auto [it, fresh] = acc.try_emplace(std::move(key), Acc{cur, tags});
    if (!fresh) it->second.tags |= tags;
  };

  if (R.is_zero(a)) record({U.find(a)});
  std::vector<int> cur;
  auto visit = [&](const std::vector<int>& c, int) {
    record(c);
    return true;
  };
  dfs(U, cands, cap, cur, 0, U.one(), visit);

  int longest_seen = 0;
  for (auto& [key, v] : acc) {
    FactorizationItem item;
    for (int x : v.rep) item.key.push_back(U.key_part(x, beta));
    std::sort(item.key.begin(), item.key.end());
    std::vector<Element> fs;
    for (int x : v.rep) fs.push_back(U.at(x));
    item.rep = make_factorization(R, a, std::move(fs));
    item.tags = v.tags;
    longest_seen = std::max(longest_seen, static_cast<int>(item.rep.length()));
    out.items.push_back(std::move(item));
  }

  BoundResult bound = BoundGraph(U, cands).run();

  // Direct pump: x tau-related to itself and to every factor of an item,
  // with x * a a unit multiple of a. Exact fixed points are preferred.
  std::optional<Pump> direct;
  for (int pass = 0; pass < 2 && !direct; ++pass)
    for (const auto& item : out.items) {
      if (direct) break;
      if (R.is_zero(item.rep.factors[0]) && item.rep.trivial() && R.is_zero(a)) continue;
      std::vector<int> F;
      for (const auto& y : item.rep.factors) F.push_back(U.find(y));
      for (int x : U.raw()) {
        int xa = U.mul(x, U.target());
        if (xa < 0) continue;
        if (pass == 0 ? xa != U.target() : !U.near_target(xa)) continue;
        if (!U.tau(x, x)) continue;
        bool ok = true;
        for (int y : F)
          if (!U.tau(x, y)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        direct = Pump{item.rep, {U.at(x)}};
        break;
      }
    }

  if (direct && bound.unbounded == Unbounded::No)
    throw std::logic_error("bound graph reports bounded lengths but a pump exists for " + format_element(a));
  if (direct) {
    out.unbounded = Unbounded::Yes;
    out.pump = direct;
  } else {
    out.unbounded = bound.unbounded;
    out.pump = bound.pump;
  }
  if (out.unbounded == Unbounded::No) {
    int m = std::max(bound.longest.value_or(0), R.is_zero(a) ? 1 : 0);
    if (m < longest_seen) throw std::logic_error("bound graph longest path below enumerated length");
    out.max_length = m;
  }
  out.complete = out.unbounded == Unbounded::Yes || (out.unbounded == Unbounded::No && *out.max_length <= cap);
  return out;
}

bool for_each_factorization(const TauRelation& t, const Element& a, int cap,
                            const std::function<bool(const Factorization&)>& visit) {
  check_target(t, a, cap);
  const Ring& R = t.ring();
  if (!R.has_finite_divisors(a)) {
    for (const auto& x : degenerate_trivials(t, a))
      if (!visit(make_factorization(R, a, {x}))) return false;
    return true;
  }
  Universe U(t, a);
  auto emit = [&](const std::vector<int>& cur, int) {
    std::vector<Element> fs;
    fs.reserve(cur.size());
    for (int x : cur) fs.push_back(U.at(x));
    return visit(make_factorization(R, a, std::move(fs)));
  };
  if (R.is_zero(a) && !emit({U.find(a)}, 0)) return false;
  std::vector<int> cur;
  return dfs(U, U.raw(), cap, cur, 0, U.one(), emit);
}

LengthInfo factorization_lengths(const TauRelation& t, const Element& a, const ElementPredicate& allowed,
                                 const ElementPredicate& marked) {
  check_target(t, a, 2);
  const Ring& R = t.ring();
  LengthInfo out;
  if (!R.has_finite_divisors(a)) {
    bool any = false;
    for (const auto& x : degenerate_trivials(t, a)) any = any || (allowed(x) && (!marked || marked(x)));
    out.exists = tri(any);
    out.unbounded = Unbounded::No;
    if (any) out.min_length = out.max_length = 1;
    return out;
  }
  Universe U(t, a);
  std::vector<int> cands;
  for (int x : t.unit_invariant() ? U.orbit_reps() : U.raw())
    if (allowed(U.at(x))) cands.push_back(x);
  std::vector<char> mk;
  if (marked) {
    mk.assign(U.size(), 0);
    for (int x : cands) mk[static_cast<std::size_t>(x)] = marked(U.at(x)) ? 1 : 0;
  }
  BoundResult r = BoundGraph(U, cands, std::move(mk)).run(false);
  out.unbounded = r.unbounded;
  if (r.unbounded == Unbounded::Unknown) return out;
  out.exists = tri(r.exists);
  if (r.exists) {
    out.min_length = r.shortest;
    if (r.unbounded == Unbounded::No) out.max_length = r.longest;
  }
  return out;
}

bool tau_divides(const TauRelation& t, const Element& b, const Element& a, int cap) {
  bool found = false;
  for_each_factorization(t, a, cap, [&](const Factorization& f) {
    found = std::binary_search(f.factors.begin(), f.factors.end(), b);
    return !found;
  });
  return found;
}

std::variant<Factorization, RefineRejection> refine(const TauRelation& t, const Factorization& f, std::size_t position,
                                                    const Factorization& sub) {
  const Ring& R = t.ring();
  if (position >= f.factors.size()) throw PreconditionError("refine: position out of range");
  if (sub.target != f.factors[position])
    throw PreconditionError("refine: sub-factorization target " + format_element(sub.target) + " differs from factor " +
                            format_element(f.factors[position]));
  std::vector<Element> fs;
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    if (i != position) fs.push_back(f.factors[i]);
  fs.insert(fs.end(), sub.factors.begin(), sub.factors.end());
  std::sort(fs.begin(), fs.end());
  auto related = [&](const Element& x, const Element& y) { return R.in_r_sharp(x) && R.in_r_sharp(y) && t.holds(x, y); };
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!related(fs[i], fs[j])) return RefineRejection{fs[i], fs[j]};
  return Factorization{R.mul(f.unit, sub.unit), std::move(fs), f.target};
}

}  // namespace taufact
