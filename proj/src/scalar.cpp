#include "gradealg/scalar.hpp"

namespace gradealg {

namespace {
FieldConfig g_field;  // defaults to rationals

Scalar::Int mod_reduce(const Scalar::Int& a, unsigned long p) {
  Scalar::Int r = a % p;
  if (r < 0) r += p;
  return r;
}

// Inverse of a mod p by extended Euclid; p prime, a != 0 mod p.
Scalar::Int mod_inverse(Scalar::Int a, unsigned long p) {
  Scalar::Int t = 0, newt = 1, r = p, newr = mod_reduce(a, p);
  if (newr == 0) throw ScalarError("division by zero in GF(p)");
  while (newr != 0) {
    Scalar::Int q = r / newr;
    Scalar::Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw ScalarError("GF(p) modulus is not prime");
  return mod_reduce(t, p);
}
}  // namespace

void set_field(const FieldConfig& cfg) {
  if (cfg.is_fp && cfg.p < 2) throw ScalarError("prime field needs p >= 2");
  g_field = cfg;
}

const FieldConfig& field() { return g_field; }

FieldConfig parse_field_spec(const std::string& s) {
  if (s == "rational") return FieldConfig{};
  if (s.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3));
    } catch (...) {
      throw ScalarError("bad field spec: " + s);
    }
    if (p < 2) throw ScalarError("bad prime in field spec: " + s);
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ScalarError("field spec modulus is not prime: " + s);
    return FieldConfig{true, p};
  }
  throw ScalarError("bad field spec (want rational or fp:<prime>): " + s);
}

void Scalar::canon_() {
  if (!g_field.is_fp) return;
  Int num = boost::multiprecision::numerator(v_);
  Int den = boost::multiprecision::denominator(v_);
  Int r = mod_reduce(num, g_field.p);
  if (den != 1) r = mod_reduce(r * mod_inverse(den, g_field.p), g_field.p);
  v_ = Rat(r);
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ScalarError("zero denominator");
  v_ = Rat(num, den);
  canon_();
}

Scalar Scalar::from_rat(Rat r) {
  Scalar s;
  s.v_ = std::move(r);
  s.canon_();
  return s;
}

Scalar Scalar::operator-() const { return from_rat(-v_); }
Scalar Scalar::operator+(const Scalar& o) const { return from_rat(v_ + o.v_); }
Scalar Scalar::operator-(const Scalar& o) const { return from_rat(v_ - o.v_); }
Scalar Scalar::operator*(const Scalar& o) const { return from_rat(v_ * o.v_); }

Scalar Scalar::inv() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (g_field.is_fp) return from_rat(Rat(mod_inverse(numerator(), g_field.p)));
  return from_rat(1 / v_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

std::string Scalar::str() const { return v_.str(); }

std::optional<Scalar> Scalar::parse(const std::string& s) {
  try {
    Rat r(s);
    return from_rat(r);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace gradealg
