#include <algorithm>
#include <map>
#include <set>

#include "taufact/errors.hpp"
#include "taufact/factorization.hpp"
#include "taufact/tau.hpp"
#include "taufact/text.hpp"

namespace taufact {

namespace {

nlohmann::json elems(std::initializer_list<std::pair<const char*, Element>> xs) {
  nlohmann::json j;
  for (const auto& [k, v] : xs) j[k] = element_to_json(v);
  return j;
}

class TauChecker {
 public:
  TauChecker(const TauRelation& t, const std::optional<std::vector<Element>>& scope, int cap)
      : t_(t), R_(t.ring()), cap_(cap) {
    if (scope) {
      scoped_ = true;
      for (const auto& x : *scope)
        if (R_.in_r_sharp(x)) dom_.push_back(x);
      std::sort(dom_.begin(), dom_.end());
      dom_.erase(std::unique(dom_.begin(), dom_.end()), dom_.end());
    } else {
      if (!R_.finite()) throw UnsupportedError("tau property check on an infinite ring needs an element scope");
      for (const auto& x : R_.elements())
        if (R_.in_r_sharp(x)) dom_.push_back(x);
    }
    verdict_.cap = cap;
    verdict_.scoped = scoped_;
  }

  Verdict run(TauPropertyId p) {
    switch (p.kind) {
      case TauProperty::Multiplicative: multiplicative(); break;
      case TauProperty::Divisive: divisive(); break;
      case TauProperty::AssociatePreserving: associate_preserving(p.assoc); break;
      case TauProperty::Refinable: refinable(); break;
      case TauProperty::Combinable: combinable(); break;
    }
    if (!skipped_.empty()) {
      std::string s = verdict_.note.empty() ? "" : verdict_.note + "; ";
      verdict_.note = s + std::to_string(skipped_.size()) + " scope elements with infinite divisor sets skipped";
    }
    return verdict_;
  }

 private:
  void fail(nlohmann::json w) {
    verdict_.outcome = Outcome::Fails;
    verdict_.witness = std::move(w);
  }
  void hold() { verdict_.outcome = Outcome::Holds; }

  bool finite_divs(const Element& x) {
    if (R_.has_finite_divisors(x)) return true;
    skipped_.insert(x);
    return false;
  }

  void multiplicative() {
    verdict_.note = "vacuous when bc is not a nonzero non-unit";
    for (const auto& a : dom_)
      for (const auto& b : dom_) {
        if (!t_.holds(a, b)) continue;
        for (const auto& c : dom_) {
          if (!t_.holds(a, c)) continue;
          Element bc = R_.mul(b, c);
          if (!R_.in_r_sharp(bc)) continue;
          if (!t_.holds(a, bc)) return fail(elems({{"a", a}, {"b", b}, {"c", c}}));
        }
      }
    hold();
  }

  void divisive() {
    for (const auto& a : dom_)
      for (const auto& b : dom_) {
        if (!t_.holds(a, b) || !finite_divs(b)) continue;
        for (const auto& d : R_.divisors(b))
          if (R_.in_r_sharp(d) && !t_.holds(a, d)) return fail(elems({{"a", a}, {"b", b}, {"b'", d}}));
      }
    hold();
  }

  void associate_preserving(AssociateKind k) {
    for (const auto& a : dom_)
      for (const auto& b : dom_) {
        if (!t_.holds(a, b) || !finite_divs(b)) continue;
        for (const auto& d : R_.divisors(b))
          if (R_.associated(b, d, k) && !t_.holds(a, d)) return fail(elems({{"a", a}, {"b", b}, {"b'", d}}));
      }
    hold();
  }

  // Pairs x tau y that occur together in some factorization of a domain
  // element: for a finite ring every related pair, for a scope the pairs
  // whose product is a unit multiple of a scope element.
  std::vector<std::pair<Element, Element>> related_pairs() {
    std::vector<std::pair<Element, Element>> out;
    if (!scoped_) {
      for (std::size_t i = 0; i < dom_.size(); ++i)
        for (std::size_t j = i; j < dom_.size(); ++j)
          if (t_.holds(dom_[i], dom_[j])) out.emplace_back(dom_[i], dom_[j]);
      return out;
    }
    std::set<std::pair<Element, Element>> seen;
    for (const auto& a : dom_) {
      if (!finite_divs(a)) continue;
      std::vector<Element> ds;
      for (const auto& d : R_.divisors(a))
        if (R_.in_r_sharp(d)) ds.push_back(d);
      for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i; j < ds.size(); ++j) {
          if (!t_.holds(ds[i], ds[j])) continue;
          if (!R_.unit_cofactor(a, R_.mul(ds[i], ds[j]))) continue;
          if (seen.insert({ds[i], ds[j]}).second) out.emplace_back(ds[i], ds[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Element> nonunit_divisors(const Element& x) {
    std::vector<Element> out;
    for (const auto& d : R_.divisors(x))
      if (R_.in_r_sharp(d)) out.push_back(d);
    return out;
  }

  // Factors of the tau-factorizations of x up to cap; exact unless longer
  // factorizations exist.
  const std::pair<std::vector<Element>, bool>& factor_set(const Element& x) {
    auto it = dsets_.find(x);
    if (it != dsets_.end()) return it->second;
    std::set<Element> fs;
    for_each_factorization(t_, x, cap_, [&](const Factorization& f) {
      fs.insert(f.factors.begin(), f.factors.end());
      return true;
    });
    auto full = enumerate_factorizations(t_, x, AssociateKind::StrongAssociate, cap_);
    bool exact = full.unbounded == Unbounded::No && full.max_length && *full.max_length <= cap_;
    return dsets_.emplace(x, std::make_pair(std::vector<Element>(fs.begin(), fs.end()), exact)).first->second;
  }

  void refinable() {
    bool exact = true;
    for (const auto& [x, y] : related_pairs()) {
      if (!finite_divs(x) || !finite_divs(y)) continue;
      // Every tau-factor of x divides x: the divisor test is sufficient.
      auto dx = nonunit_divisors(x), dy = nonunit_divisors(y);
      bool all = true;
      for (const auto& b : dx) {
        for (const auto& c : dy)
          if (!t_.holds(b, c)) {
            all = false;
            break;
          }
        if (!all) break;
      }
      if (all) continue;
      const auto& [fx, ex] = factor_set(x);
      const auto& [fy, ey] = factor_set(y);
      for (const auto& b : fx)
        for (const auto& c : fy)
          if (!t_.holds(b, c)) return fail(elems({{"x", x}, {"y", y}, {"b", b}, {"c", c}}));
      exact = exact && ex && ey;
    }
    if (exact) hold();
    else verdict_.note = "factor sets of some elements are not exhausted at this cap";
  }

  void combinable() {
    bool exact = true;
    std::vector<Element> targets = dom_;
    if (!scoped_) targets.insert(targets.begin(), R_.zero());
    for (const auto& a : targets) {
      if (!finite_divs(a)) continue;
      nlohmann::json w;
      for_each_factorization(t_, a, cap_, [&](const Factorization& f) {
        const auto& xs = f.factors;
        for (std::size_t i = 0; i < xs.size(); ++i)
          for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs.size() == 2) continue;
            Element m = R_.mul(xs[i], xs[j]);
            bool ok = R_.in_r_sharp(m);
            for (std::size_t k = 0; ok && k < xs.size(); ++k)
              if (k != i && k != j) ok = t_.holds(m, xs[k]);
            if (!ok) {
              w = {{"factorization", to_json(f)}, {"i", i}, {"j", j}};
              return false;
            }
          }
        return true;
      });
      if (!w.is_null()) return fail(std::move(w));
      auto full = enumerate_factorizations(t_, a, AssociateKind::StrongAssociate, cap_);
      exact = exact && full.unbounded == Unbounded::No && full.max_length && *full.max_length <= cap_;
    }
    if (exact) hold();
    else verdict_.note = "factorizations longer than the cap were not examined";
  }

  const TauRelation& t_;
  const Ring& R_;
  int cap_;
  bool scoped_ = false;
  std::vector<Element> dom_;
  std::set<Element> skipped_;
  std::map<Element, std::pair<std::vector<Element>, bool>> dsets_;
  Verdict verdict_;
};

}  // namespace

Verdict check_tau_property(const TauRelation& t, TauPropertyId prop, const std::optional<std::vector<Element>>& scope,
                           int cap) {
  if (cap < 2) throw PreconditionError("cap must be >= 2");
  return TauChecker(t, scope, cap).run(prop);
}

}  // namespace taufact
