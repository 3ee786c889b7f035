#include "kcrystal/charged_params.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "kcrystal/error.hpp"

namespace kcrystal {

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::complex<double> unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Params Params::rational(std::int64_t num, std::int64_t den, std::vector<int> charges) {
  if (charges.empty()) throw ValidationError("ell must be at least 1", "charges");
  if (den == 0) throw ValidationError("kappa denominator must be nonzero", "kappa.den");
  Rational k(num, den);
  if (k.numerator() == 0) throw ValidationError("kappa must be nonzero", "kappa");
  if (k.denominator() == 1)
    throw ValidationError("kappa must not be an integer", "kappa");
  return Params(k, std::move(charges), std::nullopt);
}

Params Params::irrational(std::vector<int> charges, std::optional<double> approx) {
  if (charges.empty()) throw ValidationError("ell must be at least 1", "charges");
  return Params(std::nullopt, std::move(charges), approx);
}

long Params::charge_sum() const noexcept {
  return std::accumulate(charges_.begin(), charges_.end(), 0L);
}

std::optional<int> Params::e() const noexcept {
  if (!kappa_) return std::nullopt;
  return static_cast<int>(kappa_->denominator());
}

std::optional<double> Params::kappa_value() const noexcept {
  if (kappa_) return boost::rational_cast<double>(*kappa_);
  return approx_;
}

Params Params::shifted(int sigma) const {
  auto c = charges_;
  for (int& s : c) s += sigma;
  return Params(kappa_, std::move(c), approx_);
}

std::string Params::str() const {
  std::string out = "ell=" + std::to_string(ell()) + ", kappa=";
  if (kappa_)
    out += std::to_string(kappa_->numerator()) + "/" + std::to_string(kappa_->denominator());
  else
    out += "irrational";
  out += ", s=(";
  for (std::size_t i = 0; i < charges_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(charges_[i]);
  }
  return out + ")";
}

std::string ZClass::str() const {
  return (kind == Kind::Residue ? "residue " : "content ") + std::to_string(value);
}

std::optional<Rational> CValue::evaluate(const Params& p) const {
  if (p.kappa()) return *p.kappa() * Rational(kappa_coeff) + Rational(constant);
  if (kappa_coeff == 0) return Rational(constant);
  return std::nullopt;
}

long shifted_content(const Params& p, const BoxRef& x) {
  if (x.component < 0 || static_cast<std::size_t>(x.component) >= p.ell())
    throw ValidationError("box component out of range for ell",
                          "component " + std::to_string(x.component));
  return p.charge(static_cast<std::size_t>(x.component)) + content(x);
}

ZClass class_of_content(const Params& p, long shifted) {
  if (auto e = p.e()) return ZClass::residue(floor_mod(shifted, *e));
  return ZClass::content(shifted);
}

ZClass z_class(const Params& p, const BoxRef& x) {
  return class_of_content(p, shifted_content(p, x));
}

bool is_valid_class(const Params& p, const ZClass& z) {
  if (auto e = p.e()) return z.kind == ZClass::Kind::Residue && z.value >= 0 && z.value < *e;
  return z.kind == ZClass::Kind::Content;
}

void check_class(const Params& p, const ZClass& z) {
  if (!is_valid_class(p, z)) {
    if (p.e())
      throw ValidationError("rational kappa needs a class {\"residue\": r} with 0 <= r < e",
                            "class");
    throw ValidationError("irrational kappa needs a class {\"content\": c}", "class");
  }
}

ZClass shift_class(const Params& p, const ZClass& z, int sigma) {
  check_class(p, z);
  return class_of_content(p, z.value + sigma);
}

CValue d_value(const Params& p, const BoxRef& x) {
  const long cont = shifted_content(p, x);
  return {static_cast<long>(p.ell()) * cont - p.charge_sum(), -static_cast<long>(x.component)};
}

long d_diff(const Params& p, const BoxRef& x, const BoxRef& y) {
  if (z_class(p, x) != z_class(p, y))
    throw ValidationError("d_diff needs two boxes of the same class");
  const CValue diff = d_value(p, x) - d_value(p, y);
  if (p.is_irrational()) {
    if (diff.kappa_coeff != 0)
      throw InvariantViolation("same-class boxes with different kappa coefficients");
    return diff.constant;
  }
  const Rational v = *diff.evaluate(p);
  if (v.denominator() != 1)
    throw InvariantViolation("d-values of same-class boxes differ by a non-integer");
  return static_cast<long>(v.numerator());
}

CValue c_function(const Params& p, const Multipartition& m) {
  if (m.level() != p.ell())
    throw ValidationError("multipartition level does not match ell", "multipartition");
  CValue sum;
  for (std::size_t i = 0; i < m.level(); ++i) {
    const auto& part = m.component(i);
    for (std::size_t a = 1; a <= part.length(); ++a)
      for (int b = 1; b <= part.row(a); ++b)
        sum = sum + d_value(p, {static_cast<int>(i), static_cast<int>(a), b});
  }
  return sum;
}

HeckeParams hecke_params(const Params& p) {
  HeckeParams out;
  if (const auto& k = p.kappa()) {
    // Reduce the phase exactly before going to floating point.
    auto frac = [](Rational r) {
      const auto den = r.denominator();
      const auto num = r.numerator() % den;
      return static_cast<double>(num < 0 ? num + den : num) / static_cast<double>(den);
    };
    out.q = unit(frac(*k));
    for (int s : p.charges()) out.Q.push_back(unit(frac(*k * Rational(s))));
    return out;
  }
  const auto k = p.kappa_approx();
  if (!k)
    throw ValidationError("irrational kappa needs \"kappa_approx\" for numeric conversions",
                          "kappa_approx");
  out.q = unit(*k);
  for (int s : p.charges()) out.Q.push_back(unit(*k * s));
  return out;
}

std::vector<std::complex<double>> cyclotomic_c(const Params& p) {
  const auto k = p.kappa_value();
  if (!k)
    throw ValidationError("irrational kappa needs \"kappa_approx\" for numeric conversions",
                          "kappa_approx");
  const std::size_t ell = p.ell();
  std::vector<std::complex<double>> c{std::complex<double>(-*k, 0.0)};
  for (std::size_t i = 1; i < ell; ++i) {
    std::complex<double> sum = 0.0;
    for (std::size_t j = 1; j < ell; ++j) {
      // exp(-2 pi i ij / ell); the phase is reduced mod ell in integers.
      const double turns = -static_cast<double>((i * j) % ell) / static_cast<double>(ell);
      sum += (unit(turns) - 1.0) * static_cast<double>(p.charge(j) - p.charge(j - 1));
    }
    c.push_back(-0.5 * (1.0 + *k * sum));
  }
  return c;
}

std::optional<Rational> cyclotomic_c0(const Params& p) {
  if (const auto& k = p.kappa()) return -*k;
  return std::nullopt;
}

}  // namespace kcrystal
