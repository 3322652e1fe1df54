#include "taufact/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "taufact/errors.hpp"

namespace taufact {

namespace {

// Rings at most this large are materialized element by element.
constexpr std::uint64_t kEnumerationLimit = 1u << 16;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw OverflowError("ring order overflow");
  return r;
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(e.value);
  for (auto c : e.coeffs) hash_combine(h, std::hash<std::int64_t>{}(c) + 17);
  for (const auto& p : e.parts) hash_combine(h, (*this)(p) + 31);
  return h;
}

std::string to_string(AssociateKind k) {
  switch (k) {
    case AssociateKind::Associate: return "associate";
    case AssociateKind::StrongAssociate: return "strong";
    case AssociateKind::VeryStrongAssociate: return "verystrong";
  }
  return "?";
}

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Zero: return "zero";
    case ElementClass::Unit: return "unit";
    case ElementClass::ZeroDivisor: return "zero-divisor";
    case ElementClass::RegularNonUnit: return "regular-non-unit";
  }
  return "?";
}

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::mod_int(std::int64_t n) {
  RingSpec s;
  s.kind = Kind::ModInt;
  s.n = n;
  return s;
}

RingSpec RingSpec::integers() { return RingSpec{}; }

RingSpec RingSpec::poly_quot(std::int64_t p, std::vector<std::int64_t> f) {
  RingSpec s;
  s.kind = Kind::PolyQuot;
  s.p = p;
  s.f = std::move(f);
  return s;
}

RingSpec RingSpec::product(RingSpec l, RingSpec r) {
  RingSpec s;
  s.kind = Kind::Product;
  s.left = std::make_shared<const RingSpec>(std::move(l));
  s.right = std::make_shared<const RingSpec>(std::move(r));
  return s;
}

bool RingSpec::finite() const {
  switch (kind) {
    case Kind::Integers: return false;
    case Kind::Product: return left->finite() && right->finite();
    default: return true;
  }
}

std::string RingSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ModInt: os << "Zn(" << n << ")"; break;
    case Kind::Integers: os << "Z"; break;
    case Kind::PolyQuot:
      os << "GFq(" << p << ",[";
      for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
      os << "])";
      break;
    case Kind::Product: os << "prod(" << left->to_string() << "," << right->to_string() << ")"; break;
  }
  return os.str();
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingSpec::Kind::ModInt: return a.n == b.n;
    case RingSpec::Kind::Integers: return true;
    case RingSpec::Kind::PolyQuot: return a.p == b.p && a.f == b.f;
    case RingSpec::Kind::Product: return *a.left == *b.left && *a.right == *b.right;
  }
  return false;
}

// ------------------------------------------------------------- CofactorSet

CofactorSet CofactorSet::finite(std::vector<Element> elems, bool has_unit, bool all_units) {
  CofactorSet c;
  c.kind_ = Kind::Finite;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  c.elems_ = std::move(elems);
  c.has_unit_ = has_unit;
  c.all_units_ = all_units;
  return c;
}

CofactorSet CofactorSet::all() {
  CofactorSet c;
  c.kind_ = Kind::All;
  c.has_unit_ = true;
  c.all_units_ = false;
  return c;
}

CofactorSet CofactorSet::product(CofactorSet l, CofactorSet r) {
  CofactorSet c;
  c.kind_ = Kind::Product;
  bool empty = l.empty() || r.empty();
  c.has_unit_ = !empty && l.has_unit_ && r.has_unit_;
  c.all_units_ = empty || (l.all_units_ && r.all_units_);
  c.left_ = std::make_shared<const CofactorSet>(std::move(l));
  c.right_ = std::make_shared<const CofactorSet>(std::move(r));
  return c;
}

bool CofactorSet::empty() const {
  switch (kind_) {
    case Kind::Finite: return elems_.empty();
    case Kind::All: return false;
    case Kind::Product: return left_->empty() || right_->empty();
  }
  return true;
}

bool CofactorSet::contains(const Element& r) const {
  switch (kind_) {
    case Kind::Finite: return std::binary_search(elems_.begin(), elems_.end(), r);
    case Kind::All: return true;
    case Kind::Product:
      return r.parts.size() == 2 && left_->contains(r.parts[0]) && right_->contains(r.parts[1]);
  }
  return false;
}

// -------------------------------------------------------------------- Ring

struct Ring::Impl {
  RingSpec spec;
  bool finite = false;
  std::uint64_t order = 0;
  std::size_t deg = 0;  // PolyQuot degree
  std::optional<Ring> left, right;
  std::vector<Element> elems;  // finite rings up to the enumeration limit
  std::vector<Element> units;
};

namespace {

void validate(const RingSpec& s, const std::string& path) {
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
      if (s.n < 2) throw SpecError(path + "Zn.n: modulus must be >= 2, got " + std::to_string(s.n));
      break;
    case RingSpec::Kind::Integers: break;
    case RingSpec::Kind::PolyQuot: {
      if (!is_prime(s.p)) throw SpecError(path + "GFq.p: " + std::to_string(s.p) + " is not prime");
      if (s.f.size() < 2) throw SpecError(path + "GFq.f: modulus must have degree >= 1");
      if (s.f.back() != 1) throw SpecError(path + "GFq.f: modulus must be monic (leading coefficient 1)");
      for (auto c : s.f)
        if (c < 0 || c >= s.p)
          throw SpecError(path + "GFq.f: coefficient " + std::to_string(c) + " not reduced mod p");
      break;
    }
    case RingSpec::Kind::Product:
      if (!s.left || !s.right) throw SpecError(path + "prod: missing component");
      validate(*s.left, path + "prod.left.");
      validate(*s.right, path + "prod.right.");
      break;
  }
}

}  // namespace

Ring Ring::build(const RingSpec& spec) {
  validate(spec, "");
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  impl->finite = spec.finite();
  switch (spec.kind) {
    case RingSpec::Kind::ModInt: impl->order = static_cast<std::uint64_t>(spec.n); break;
    case RingSpec::Kind::Integers: break;
    case RingSpec::Kind::PolyQuot:
      impl->deg = spec.f.size() - 1;
      impl->order = checked_pow(static_cast<std::uint64_t>(spec.p), impl->deg);
      break;
    case RingSpec::Kind::Product: {
      impl->left = Ring::build(*spec.left);
      impl->right = Ring::build(*spec.right);
      if (impl->finite) {
        if (__builtin_mul_overflow(impl->left->order(), impl->right->order(), &impl->order))
          throw OverflowError("ring order overflow");
      }
      break;
    }
  }
  Ring ring(impl);
  // Materialize small finite rings.
  if (impl->finite && impl->order <= kEnumerationLimit) {
    impl->elems.reserve(impl->order);
    switch (spec.kind) {
      case RingSpec::Kind::ModInt:
        for (std::int64_t i = 0; i < spec.n; ++i) impl->elems.emplace_back(i);
        break;
      case RingSpec::Kind::PolyQuot: {
        std::vector<std::int64_t> c(impl->deg, 0);
        for (std::uint64_t i = 0; i < impl->order; ++i) {
          impl->elems.push_back(Element::poly(c));
          for (std::size_t k = impl->deg; k-- > 0;) {
            if (++c[k] < spec.p) break;
            c[k] = 0;
          }
        }
        break;
      }
      case RingSpec::Kind::Product:
        for (const auto& l : impl->left->elements())
          for (const auto& r : impl->right->elements()) impl->elems.push_back(Element::pair(l, r));
        break;
      case RingSpec::Kind::Integers: break;
    }
  }
  // Units.
  switch (spec.kind) {
    case RingSpec::Kind::Integers: impl->units = {Element(-1), Element(1)}; break;
    case RingSpec::Kind::Product:
      for (const auto& l : impl->left->units())
        for (const auto& r : impl->right->units()) impl->units.push_back(Element::pair(l, r));
      break;
    default: {
      if (impl->elems.empty()) throw UnsupportedError("ring too large to enumerate: " + spec.to_string());
      Element one = ring.one();
      for (const auto& a : impl->elems)
        for (const auto& b : impl->elems)
          if (ring.mul(a, b) == one) {
            impl->units.push_back(a);
            break;
          }
      break;
    }
  }
  std::sort(impl->units.begin(), impl->units.end());
  // Identity first so that unit searches prefer lambda = 1.
  auto one_it = std::find(impl->units.begin(), impl->units.end(), ring.one());
  std::rotate(impl->units.begin(), one_it, one_it + 1);
  return ring;
}

const RingSpec& Ring::spec() const { return impl_->spec; }
bool Ring::finite() const { return impl_->finite; }

std::uint64_t Ring::order() const {
  if (!impl_->finite) throw UnsupportedError("infinite ring");
  return impl_->order;
}

const Ring& Ring::left() const { return *impl_->left; }
const Ring& Ring::right() const { return *impl_->right; }

Element Ring::zero() const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::PolyQuot: return Element::poly(std::vector<std::int64_t>(impl_->deg, 0));
    case RingSpec::Kind::Product: return Element::pair(left().zero(), right().zero());
    default: return Element(0);
  }
}

Element Ring::one() const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::PolyQuot: {
      std::vector<std::int64_t> c(impl_->deg, 0);
      c[0] = 1;
      return Element::poly(std::move(c));
    }
    case RingSpec::Kind::Product: return Element::pair(left().one(), right().one());
    default: return Element(1);
  }
}

Element Ring::add(const Element& a, const Element& b) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: return Element((a.value + b.value) % s.n);
    case RingSpec::Kind::Integers: return Element(checked_add(a.value, b.value));
    case RingSpec::Kind::PolyQuot: {
      std::vector<std::int64_t> c(impl_->deg);
      for (std::size_t i = 0; i < impl_->deg; ++i) c[i] = (a.coeffs[i] + b.coeffs[i]) % s.p;
      return Element::poly(std::move(c));
    }
    case RingSpec::Kind::Product:
      return Element::pair(left().add(a.parts[0], b.parts[0]), right().add(a.parts[1], b.parts[1]));
  }
  return {};
}

Element Ring::neg(const Element& a) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: return Element(a.value == 0 ? 0 : s.n - a.value);
    case RingSpec::Kind::Integers: return Element(checked_mul(a.value, -1));
    case RingSpec::Kind::PolyQuot: {
      std::vector<std::int64_t> c(impl_->deg);
      for (std::size_t i = 0; i < impl_->deg; ++i) c[i] = a.coeffs[i] == 0 ? 0 : s.p - a.coeffs[i];
      return Element::poly(std::move(c));
    }
    case RingSpec::Kind::Product: return Element::pair(left().neg(a.parts[0]), right().neg(a.parts[1]));
  }
  return {};
}

Element Ring::mul(const Element& a, const Element& b) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: return Element(mod_mul(a.value, b.value, s.n));
    case RingSpec::Kind::Integers: return Element(checked_mul(a.value, b.value));
    case RingSpec::Kind::PolyQuot: {
      const std::size_t d = impl_->deg;
      std::vector<std::int64_t> prod(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % s.p;
      // Reduce by the monic modulus from the top degree down.
      for (std::size_t k = prod.size(); k-- > d;) {
        std::int64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i)
          prod[k - d + i] = mod_reduce(prod[k - d + i] - c * s.f[i], s.p);
      }
      prod.resize(d);
      return Element::poly(std::move(prod));
    }
    case RingSpec::Kind::Product:
      return Element::pair(left().mul(a.parts[0], b.parts[0]), right().mul(a.parts[1], b.parts[1]));
  }
  return {};
}

bool Ring::contains(const Element& a) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
      return a.coeffs.empty() && a.parts.empty() && a.value >= 0 && a.value < s.n;
    case RingSpec::Kind::Integers: return a.coeffs.empty() && a.parts.empty();
    case RingSpec::Kind::PolyQuot:
      if (a.value != 0 || !a.parts.empty() || a.coeffs.size() != impl_->deg) return false;
      return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](auto c) { return c >= 0 && c < s.p; });
    case RingSpec::Kind::Product:
      return a.value == 0 && a.coeffs.empty() && a.parts.size() == 2 && left().contains(a.parts[0]) &&
             right().contains(a.parts[1]);
  }
  return false;
}

void Ring::check_element(const Element& a) const {
  if (!contains(a)) throw PreconditionError("element is not a canonical element of " + spec().to_string());
}

const std::vector<Element>& Ring::elements() const {
  if (!impl_->finite) throw UnsupportedError("infinite ring");
  if (impl_->elems.empty()) throw UnsupportedError("ring too large to enumerate: " + spec().to_string());
  return impl_->elems;
}

std::size_t Ring::index_of(const Element& a) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: return static_cast<std::size_t>(a.value);
    case RingSpec::Kind::PolyQuot: {
      std::size_t idx = 0;
      for (auto c : a.coeffs) idx = idx * static_cast<std::size_t>(s.p) + static_cast<std::size_t>(c);
      return idx;
    }
    case RingSpec::Kind::Product:
      return left().index_of(a.parts[0]) * right().order() + right().index_of(a.parts[1]);
    case RingSpec::Kind::Integers: break;
  }
  throw UnsupportedError("infinite ring");
}

const std::vector<Element>& Ring::units() const { return impl_->units; }

bool Ring::is_unit(const Element& a) const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::ModInt: return std::gcd(a.value, impl_->spec.n) == 1;
    case RingSpec::Kind::Integers: return a.value == 1 || a.value == -1;
    case RingSpec::Kind::Product: return left().is_unit(a.parts[0]) && right().is_unit(a.parts[1]);
    case RingSpec::Kind::PolyQuot:
      return std::find(impl_->units.begin(), impl_->units.end(), a) != impl_->units.end();
  }
  return false;
}

bool Ring::is_zero_divisor(const Element& a) const {
  if (is_zero(a)) return false;
  switch (impl_->spec.kind) {
    case RingSpec::Kind::Integers: return false;
    case RingSpec::Kind::Product: {
      auto bad = [](const Ring& r, const Element& x) { return r.is_zero(x) || r.is_zero_divisor(x); };
      return bad(left(), a.parts[0]) || bad(right(), a.parts[1]);
    }
    default:
      // In a finite ring every nonzero non-unit is a zero-divisor.
      return !is_unit(a);
  }
}

bool Ring::is_regular(const Element& a) const { return !is_zero(a) && !is_zero_divisor(a); }

ElementClass Ring::classify(const Element& a) const {
  if (is_zero(a)) return ElementClass::Zero;
  if (is_unit(a)) return ElementClass::Unit;
  if (is_zero_divisor(a)) return ElementClass::ZeroDivisor;
  return ElementClass::RegularNonUnit;
}

Element Ring::inverse(const Element& u) const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::Integers:
      if (!is_unit(u)) throw PreconditionError("inverse of a non-unit");
      return u;
    case RingSpec::Kind::Product: return Element::pair(left().inverse(u.parts[0]), right().inverse(u.parts[1]));
    default: {
      Element one = this->one();
      for (const auto& v : impl_->units)
        if (mul(u, v) == one) return v;
      throw PreconditionError("inverse of a non-unit");
    }
  }
}

std::optional<Element> Ring::unit_cofactor(const Element& a, const Element& b) const {
  for (const auto& u : impl_->units)
    if (mul(u, b) == a) return u;
  return std::nullopt;
}

bool Ring::has_finite_divisors(const Element& a) const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::Integers: return a.value != 0;
    case RingSpec::Kind::Product:
      return left().has_finite_divisors(a.parts[0]) && right().has_finite_divisors(a.parts[1]);
    default: return true;
  }
}

std::vector<Element> Ring::divisors(const Element& a) const {
  const auto& s = impl_->spec;
  std::vector<Element> out;
  switch (s.kind) {
    case RingSpec::Kind::ModInt:
      // b | a in Z_n iff gcd(b, n) | a.
      for (std::int64_t b = 0; b < s.n; ++b) {
        std::int64_t g = std::gcd(b, s.n);
        if (a.value % g == 0) out.emplace_back(b);
      }
      break;
    case RingSpec::Kind::Integers: {
      if (a.value == 0) throw UnsupportedError("divisor set of 0 in an infinite ring is the whole ring");
      std::int64_t m = a.value < 0 ? -a.value : a.value;
      for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        for (std::int64_t x : {d, m / d}) {
          out.emplace_back(x);
          out.emplace_back(-x);
        }
      }
      break;
    }
    case RingSpec::Kind::PolyQuot:
      for (const auto& b : elements())
        for (const auto& r : elements())
          if (mul(r, b) == a) {
            out.push_back(b);
            break;
          }
      break;
    case RingSpec::Kind::Product: {
      if (!has_finite_divisors(a))
        throw UnsupportedError("divisor set is infinite (zero in an infinite component)");
      auto l = left().divisors(a.parts[0]);
      auto r = right().divisors(a.parts[1]);
      out.reserve(l.size() * r.size());
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(Element::pair(x, y));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Ring::divides(const Element& b, const Element& a) const {
  switch (impl_->spec.kind) {
    case RingSpec::Kind::ModInt: return a.value % std::gcd(b.value, impl_->spec.n) == 0;
    case RingSpec::Kind::Integers: return b.value == 0 ? a.value == 0 : a.value % b.value == 0;
    case RingSpec::Kind::Product:
      return left().divides(b.parts[0], a.parts[0]) && right().divides(b.parts[1], a.parts[1]);
    case RingSpec::Kind::PolyQuot: return !cofactors(a, b).empty();
  }
  return false;
}

CofactorSet Ring::cofactors(const Element& a, const Element& b) const {
  if (is_zero(a) && is_zero(b)) return CofactorSet::all();
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::Integers: {
      if (b.value == 0 || a.value % b.value != 0) return CofactorSet::finite({}, false, true);
      Element r(a.value / b.value);
      bool u = is_unit(r);
      return CofactorSet::finite({r}, u, u);
    }
    case RingSpec::Kind::Product: {
      auto cl = left().cofactors(a.parts[0], b.parts[0]);
      auto cr = right().cofactors(a.parts[1], b.parts[1]);
      auto expand = [](const Ring& r, const CofactorSet& c) -> std::vector<Element> {
        return c.kind() == CofactorSet::Kind::Finite ? c.elements() : r.elements();
      };
      bool l_ok = cl.kind() == CofactorSet::Kind::Finite || left().finite();
      bool r_ok = cr.kind() == CofactorSet::Kind::Finite || right().finite();
      if (l_ok && r_ok && cl.kind() != CofactorSet::Kind::Product && cr.kind() != CofactorSet::Kind::Product) {
        std::vector<Element> out;
        bool has_unit = false, all_units = true;
        for (const auto& x : expand(left(), cl))
          for (const auto& y : expand(right(), cr)) {
            Element e = Element::pair(x, y);
            bool u = is_unit(e);
            has_unit = has_unit || u;
            all_units = all_units && u;
            out.push_back(std::move(e));
          }
        return CofactorSet::finite(std::move(out), has_unit, all_units);
      }
      return CofactorSet::product(std::move(cl), std::move(cr));
    }
    default: {
      std::vector<Element> out;
      bool has_unit = false, all_units = true;
      for (const auto& r : elements())
        if (mul(r, b) == a) {
          bool u = is_unit(r);
          has_unit = has_unit || u;
          all_units = all_units && u;
          out.push_back(r);
        }
      return CofactorSet::finite(std::move(out), has_unit, all_units);
    }
  }
}

bool Ring::associated(const Element& a, const Element& b, AssociateKind kind) const {
  switch (kind) {
    case AssociateKind::Associate: return divides(b, a) && divides(a, b);
    case AssociateKind::StrongAssociate: return cofactors(a, b).has_unit();
    case AssociateKind::VeryStrongAssociate: {
      if (!(divides(b, a) && divides(a, b))) return false;
      if (is_zero(a) && is_zero(b)) return true;
      return cofactors(a, b).all_units();
    }
  }
  return false;
}

bool Ring::comaximal(const Element& a, const Element& b) const {
  const auto& s = impl_->spec;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: return std::gcd(std::gcd(a.value, b.value), s.n) == 1;
    case RingSpec::Kind::Integers: return std::gcd(a.value, b.value) == 1;
    case RingSpec::Kind::Product:
      return left().comaximal(a.parts[0], b.parts[0]) && right().comaximal(a.parts[1], b.parts[1]);
    case RingSpec::Kind::PolyQuot: {
      // 1 in (a) + (b): look for x in (a) with 1 - x in (b).
      Element one = this->one();
      for (const auto& r : elements()) {
        Element x = mul(r, a);
        if (divides(b, sub(one, x))) return true;
      }
      return false;
    }
  }
  return false;
}

RingPredicates Ring::predicates() const {
  if (!finite()) {
    // Z is a domain; (1,0) = (1,0)(1,0) in any product.
    if (spec().kind == RingSpec::Kind::Integers) return {true, true};
    auto l = left().predicates(), r = right().predicates();
    return {false, l.strongly_associate && r.strongly_associate};
  }
  const auto& el = elements();
  RingPredicates p{true, true};
  for (const auto& x : el)
    for (const auto& y : el)
      if (!is_zero(x) && !is_unit(y) && mul(x, y) == x) {
        p.presimplifiable = false;
        break;
      }
  for (const auto& a : el)
    for (const auto& b : el)
      if (associated(a, b, AssociateKind::Associate) && !associated(a, b, AssociateKind::StrongAssociate)) {
        p.strongly_associate = false;
        return p;
      }
  return p;
}

}  // namespace taufact
