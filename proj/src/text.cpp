#include "taufact/text.hpp"

#include <cctype>
#include <charconv>

#include "taufact/errors.hpp"

namespace taufact {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    std::string_view tok = s_.substr(s_[start] == '+' ? start + 1 : start, pos_ - (s_[start] == '+' ? start + 1 : start));
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

RingSpec parse_ring(Cursor& c) {
  if (c.accept_word("Zn")) {
    c.expect('(');
    auto n = c.integer();
    c.expect(')');
    return RingSpec::mod_int(n);
  }
  if (c.accept_word("GFq")) {
    c.expect('(');
    auto p = c.integer();
    c.expect(',');
    c.expect('[');
    std::vector<std::int64_t> f;
    if (!c.accept(']')) {
      do f.push_back(c.integer());
      while (c.accept(','));
      c.expect(']');
    }
    c.expect(')');
    return RingSpec::poly_quot(p, std::move(f));
  }
  if (c.accept_word("prod")) {
    c.expect('(');
    auto l = parse_ring(c);
    c.expect(',');
    auto r = parse_ring(c);
    c.expect(')');
    return RingSpec::product(std::move(l), std::move(r));
  }
  if (c.accept_word("Z")) return RingSpec::integers();
  c.fail("expected ring (Z, Zn(n), GFq(p,[..]) or prod(A,B))");
}

// Elements are parsed structurally, then checked against the ring.
Element parse_elem(Cursor& c, const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
    case RingSpec::Kind::Integers: return Element(c.integer());
    case RingSpec::Kind::PolyQuot: {
      c.expect('[');
      std::vector<std::int64_t> v;
      if (!c.accept(']')) {
        do v.push_back(c.integer());
        while (c.accept(','));
        c.expect(']');
      }
      return Element::poly(std::move(v));
    }
    case RingSpec::Kind::Product: {
      char close;
      if (c.accept('(')) close = ')';
      else if (c.accept('[')) close = ']';
      else c.fail("expected '(' or '['");
      auto l = parse_elem(c, *s.left);
      c.expect(',');
      auto r = parse_elem(c, *s.right);
      c.expect(close);
      return Element::pair(std::move(l), std::move(r));
    }
  }
  c.fail("bad ring kind");
}

Element from_json(const RingSpec& s, const nlohmann::json& j) {
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
    case RingSpec::Kind::Integers:
      if (!j.is_number_integer()) throw SpecError("expected integer element, got " + j.dump());
      return Element(j.get<std::int64_t>());
    case RingSpec::Kind::PolyQuot: {
      if (!j.is_array()) throw SpecError("expected coefficient array, got " + j.dump());
      std::vector<std::int64_t> v;
      for (const auto& x : j) {
        if (!x.is_number_integer()) throw SpecError("expected integer coefficient, got " + x.dump());
        v.push_back(x.get<std::int64_t>());
      }
      return Element::poly(std::move(v));
    }
    case RingSpec::Kind::Product:
      if (!j.is_array() || j.size() != 2) throw SpecError("expected pair, got " + j.dump());
      return Element::pair(from_json(*s.left, j[0]), from_json(*s.right, j[1]));
  }
  throw SpecError("bad ring kind");
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  Cursor c(text);
  auto spec = parse_ring(c);
  if (!c.at_end()) c.fail("trailing input");
  return spec;
}

Element parse_element(const Ring& ring, std::string_view text) {
  Cursor c(text);
  auto e = parse_elem(c, ring.spec());
  if (!c.at_end()) c.fail("trailing input");
  if (!ring.contains(e))
    throw SpecError("element " + std::string(text) + " is not a canonical element of " + ring.spec().to_string());
  return e;
}

std::string format_element(const Element& e) {
  if (!e.parts.empty()) return "(" + format_element(e.parts[0]) + "," + format_element(e.parts[1]) + ")";
  if (!e.coeffs.empty()) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(e.coeffs[i]);
    return s + "]";
  }
  return std::to_string(e.value);
}

nlohmann::json element_to_json(const Element& e) {
  if (!e.parts.empty()) return nlohmann::json::array({element_to_json(e.parts[0]), element_to_json(e.parts[1])});
  if (!e.coeffs.empty()) return nlohmann::json(e.coeffs);
  return nlohmann::json(e.value);
}

Element element_from_json(const Ring& ring, const nlohmann::json& j) {
  if (j.is_string()) return parse_element(ring, j.get<std::string>());
  auto e = from_json(ring.spec(), j);
  if (!ring.contains(e)) throw SpecError("element " + j.dump() + " is not a canonical element of " + ring.spec().to_string());
  return e;
}

}  // namespace taufact
