#include "taufact/tau.hpp"

#include <algorithm>
#include <cctype>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"

namespace taufact {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::UnknownAtCap: return "unknown-at-cap";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown-at-cap";
  }
  return "?";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["outcome"] = to_string(v.outcome);
  if (v.bound) j["bound"] = *v.bound;
  j["cap"] = v.cap;
  j["scoped"] = v.scoped;
  if (!v.witness.is_null()) j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

// ----------------------------------------------------------------- TauSpec

TauSpec TauSpec::with_subset(std::vector<Element> s) {
  TauSpec t = of(Kind::Subset);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  t.subset = std::move(s);
  return t;
}

TauSpec TauSpec::reg_cap(TauSpec inner) {
  TauSpec t = of(Kind::RegCap);
  t.inner = std::make_shared<const TauSpec>(std::move(inner));
  return t;
}

std::string TauSpec::to_string() const {
  switch (kind) {
    case Kind::Full: return "full";
    case Kind::Empty: return "empty";
    case Kind::Comaximal: return "comax";
    case Kind::ZeroProduct: return "zero";
    case Kind::Regular: return "regular";
    case Kind::Subset: {
      std::string s = "subset[";
      for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + format_element(subset[i]);
      return s + "]";
    }
    case Kind::RegCap: return "regcap(" + inner->to_string() + ")";
  }
  return "?";
}

bool operator==(const TauSpec& a, const TauSpec& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == TauSpec::Kind::Subset) return a.subset == b.subset;
  if (a.kind == TauSpec::Kind::RegCap) return *a.inner == *b.inner;
  return true;
}

namespace {

struct TauParser {
  const Ring& ring;
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(what + " at position " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
  }
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool word(std::string_view w) {
    ws();
    if (s.substr(pos, w.size()) != w) return false;
    std::size_t end = pos + w.size();
    if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) return false;
    pos = end;
    return true;
  }
  void expect(char c) {
    ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  TauSpec parse() {
    if (word("full")) return TauSpec::full();
    if (word("empty")) return TauSpec::empty();
    if (word("zero")) return TauSpec::zero_product();
    if (word("comax")) return TauSpec::comaximal();
    if (word("regular")) return TauSpec::regular();
    if (word("regcap")) {
      expect('(');
      auto inner = parse();
      expect(')');
      return TauSpec::reg_cap(std::move(inner));
    }
    if (word("subset")) {
      expect('[');
      std::vector<Element> elems;
      ws();
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return TauSpec::with_subset({});
      }
      // Split on top-level commas; elements may themselves contain brackets.
      for (;;) {
        std::size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
          char c = s[pos];
          if (c == '(' || c == '[') ++depth;
          else if (c == ')' || c == ']') {
            if (depth == 0) break;
            --depth;
          } else if (c == ',' && depth == 0) break;
          ++pos;
        }
        if (pos >= s.size()) fail("unterminated subset");
        try {
          elems.push_back(parse_element(ring, s.substr(start, pos - start)));
        } catch (const SpecError& e) {
          pos = start;
          fail(std::string("bad subset element (") + e.what() + ")");
        }
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] != ']') fail("expected ']'");
        ++pos;
        break;
      }
      return TauSpec::with_subset(std::move(elems));
    }
    fail("expected tau (full, empty, zero, comax, regular, subset[..] or regcap(..))");
  }
};

}  // namespace

TauSpec parse_tau_spec(const Ring& ring, std::string_view text) {
  TauParser p{ring, text};
  auto spec = p.parse();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return spec;
}

// ------------------------------------------------------------- TauRelation

namespace {

bool spec_unit_invariant(const TauSpec& s, const Ring& r) {
  switch (s.kind) {
    case TauSpec::Kind::Subset:
      for (const auto& x : s.subset)
        for (const auto& u : r.units())
          if (!std::binary_search(s.subset.begin(), s.subset.end(), r.mul(u, x))) return false;
      return true;
    case TauSpec::Kind::RegCap: return spec_unit_invariant(*s.inner, r);
    default: return true;
  }
}

bool spec_uniform(const TauSpec& s, const Ring& r) {
  switch (s.kind) {
    case TauSpec::Kind::Comaximal:
    case TauSpec::Kind::ZeroProduct: return false;
    // No regular non-units in a finite ring: the restriction is empty.
    case TauSpec::Kind::RegCap: return r.finite() || spec_uniform(*s.inner, r);
    default: return true;
  }
}

bool spec_regular_only(const TauSpec& s, const Ring& r) {
  switch (s.kind) {
    case TauSpec::Kind::Regular:
    case TauSpec::Kind::RegCap:
    case TauSpec::Kind::Empty: return true;
    case TauSpec::Kind::Subset:
      return std::all_of(s.subset.begin(), s.subset.end(), [&](const Element& x) { return r.is_regular(x); });
    default: return false;
  }
}

void validate(const TauSpec& s, const Ring& r) {
  if (s.kind == TauSpec::Kind::Subset) {
    for (const auto& x : s.subset) {
      if (!r.contains(x)) throw SpecError("subset: " + format_element(x) + " is not an element of " + r.spec().to_string());
      if (!r.in_r_sharp(x)) throw SpecError("subset: " + format_element(x) + " is not a nonzero non-unit");
    }
  }
  if (s.kind == TauSpec::Kind::RegCap) {
    if (!s.inner) throw SpecError("regcap: missing inner relation");
    validate(*s.inner, r);
  }
}

}  // namespace

TauRelation TauRelation::build(const TauSpec& spec, const Ring& ring) {
  validate(spec, ring);
  TauRelation t(std::make_shared<const TauSpec>(spec), ring);
  t.unit_invariant_ = spec_unit_invariant(spec, ring);
  t.uniform_ = spec_uniform(spec, ring);
  t.regular_only_ = spec_regular_only(spec, ring);
  return t;
}

bool TauRelation::holds_spec(const TauSpec& s, const Element& a, const Element& b) const {
  switch (s.kind) {
    case TauSpec::Kind::Full: return true;
    case TauSpec::Kind::Empty: return false;
    case TauSpec::Kind::Subset:
      return std::binary_search(s.subset.begin(), s.subset.end(), a) &&
             std::binary_search(s.subset.begin(), s.subset.end(), b);
    case TauSpec::Kind::Comaximal: return ring_.comaximal(a, b);
    case TauSpec::Kind::ZeroProduct: return ring_.is_zero(ring_.mul(a, b));
    case TauSpec::Kind::Regular: return ring_.is_regular(a) && ring_.is_regular(b);
    case TauSpec::Kind::RegCap: return ring_.is_regular(a) && ring_.is_regular(b) && holds_spec(*s.inner, a, b);
  }
  return false;
}

bool TauRelation::holds(const Element& a, const Element& b) const { return holds_spec(*spec_, a, b); }

bool TauRelation::domain_spec(const TauSpec& s, const Element& a) const {
  switch (s.kind) {
    case TauSpec::Kind::Full: return true;
    case TauSpec::Kind::Empty: return false;
    case TauSpec::Kind::Subset: return std::binary_search(s.subset.begin(), s.subset.end(), a);
    case TauSpec::Kind::Regular: return ring_.is_regular(a);
    case TauSpec::Kind::RegCap:
      if (ring_.finite()) return false;
      return ring_.is_regular(a) && domain_spec(*s.inner, a);
    default: throw PreconditionError("relation " + s.to_string() + " is not uniform");
  }
}

bool TauRelation::in_domain(const Element& a) const { return domain_spec(*spec_, a); }

std::string to_string(const TauPropertyId& p) {
  switch (p.kind) {
    case TauProperty::Multiplicative: return "multiplicative";
    case TauProperty::Divisive: return "divisive";
    case TauProperty::AssociatePreserving: return "associate-preserving(" + to_string(p.assoc) + ")";
    case TauProperty::Refinable: return "refinable";
    case TauProperty::Combinable: return "combinable";
  }
  return "?";
}

}  // namespace taufact
