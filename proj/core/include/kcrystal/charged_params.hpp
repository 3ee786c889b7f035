#pragma once

// Parameters (level, kappa, integer charges) of the cyclotomic Cherednik
// setting, z-box classes, and the d- and c-functions.
//
// All class and ordering questions are decided in exact arithmetic. kappa is
// either a reduced fraction or a formal transcendental; floating point shows
// up only in hecke_params() and cyclotomic_c().

#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kcrystal/young.hpp"

namespace kcrystal {

using Rational = boost::rational<std::int64_t>;

class Params {
 public:
  // kappa = num/den. Throws ValidationError when kappa is zero or an
  // integer, when den == 0, or when charges.size() != ell.
  static Params rational(std::int64_t num, std::int64_t den, std::vector<int> charges);
  // kappa irrational. `approx`, if given, is the numeric value used only by
  // the floating-point converters.
  static Params irrational(std::vector<int> charges, std::optional<double> approx = std::nullopt);

  std::size_t ell() const noexcept { return charges_.size(); }
  bool is_irrational() const noexcept { return !kappa_.has_value(); }
  // Exact kappa; nullopt in irrational mode.
  const std::optional<Rational>& kappa() const noexcept { return kappa_; }
  const std::optional<double>& kappa_approx() const noexcept { return approx_; }
  const std::vector<int>& charges() const noexcept { return charges_; }
  int charge(std::size_t i) const { return charges_.at(i); }
  long charge_sum() const noexcept;

  // Denominator of kappa; nullopt stands for e = infinity.
  std::optional<int> e() const noexcept;

  // kappa as a double: exact in rational mode, `approx` otherwise.
  std::optional<double> kappa_value() const noexcept;

  // Same kappa, every charge shifted by sigma.
  Params shifted(int sigma) const;

  std::string str() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(std::optional<Rational> kappa, std::vector<int> charges, std::optional<double> approx)
      : kappa_(kappa), charges_(std::move(charges)), approx_(approx) {}

  std::optional<Rational> kappa_;
  std::vector<int> charges_;
  std::optional<double> approx_;
};

// Class of boxes sharing exp(2 pi i kappa cont^s(x)): the shifted content
// modulo e (rational kappa) or the shifted content itself (irrational).
struct ZClass {
  enum class Kind { Residue, Content };
  Kind kind = Kind::Residue;
  long value = 0;

  static ZClass residue(long r) { return {Kind::Residue, r}; }
  static ZClass content(long c) { return {Kind::Content, c}; }

  std::string str() const;

  friend bool operator==(const ZClass&, const ZClass&) = default;
  friend auto operator<=>(const ZClass&, const ZClass&) = default;
};

// kappa_coeff * kappa + constant.
struct CValue {
  long kappa_coeff = 0;
  long constant = 0;

  // Exact value; nullopt in irrational mode unless kappa_coeff == 0.
  std::optional<Rational> evaluate(const Params& p) const;

  friend CValue operator+(CValue a, CValue b) {
    return {a.kappa_coeff + b.kappa_coeff, a.constant + b.constant};
  }
  friend CValue operator-(CValue a, CValue b) {
    return {a.kappa_coeff - b.kappa_coeff, a.constant - b.constant};
  }
  friend bool operator==(const CValue&, const CValue&) = default;
};

// s_component + col - row. Throws ValidationError for a bad component.
long shifted_content(const Params& p, const BoxRef& x);

ZClass z_class(const Params& p, const BoxRef& x);
// Class containing every box of the given shifted content.
ZClass class_of_content(const Params& p, long shifted);

// Whether z is a well-formed class label for p (right kind, residue in [0,e)).
bool is_valid_class(const Params& p, const ZClass& z);
// Throws ValidationError unless is_valid_class.
void check_class(const Params& p, const ZClass& z);

// Label of z after shifting every charge by sigma.
ZClass shift_class(const Params& p, const ZClass& z, int sigma);

// kappa * ell * cont^s(x) - component - kappa * sum(s).
CValue d_value(const Params& p, const BoxRef& x);

// The integer d_value(x) - d_value(y) for boxes in one class. Throws
// ValidationError if the classes differ and InvariantViolation if the
// difference is not an integer.
long d_diff(const Params& p, const BoxRef& x, const BoxRef& y);

// Sum of d_value over all boxes of m.
CValue c_function(const Params& p, const Multipartition& m);

struct HeckeParams {
  std::complex<double> q;
  std::vector<std::complex<double>> Q;
};

// q = exp(2 pi i kappa), Q_i = exp(2 pi i kappa s_i). Needs a numeric kappa;
// throws ValidationError in irrational mode without an approximation.
HeckeParams hecke_params(const Params& p);

// c_0 = -kappa, and for i = 1..ell-1
//   c_i = -1/2 (1 + kappa sum_{j=1}^{ell-1} (exp(-2 pi i ij/ell) - 1)(s_j - s_{j-1})).
std::vector<std::complex<double>> cyclotomic_c(const Params& p);
// c_0 exactly; nullopt in irrational mode.
std::optional<Rational> cyclotomic_c0(const Params& p);

}  // namespace kcrystal

template <>
struct std::hash<kcrystal::ZClass> {
  std::size_t operator()(const kcrystal::ZClass& z) const noexcept {
    return std::hash<long>{}(z.value) * 2 + (z.kind == kcrystal::ZClass::Kind::Content ? 1 : 0);
  }
};
