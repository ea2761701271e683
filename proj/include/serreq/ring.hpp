#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serreq/errors.hpp"

namespace serreq {

using Fp = std::uint32_t;

/// Arithmetic in the prime field F_p. Element representatives live in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }

  Fp add(Fp a, Fp b) const {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp sub(Fp a, Fp b) const { return add(a, neg(b)); }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Fp pow(Fp a, std::uint64_t e) const;
  Fp inv(Fp a) const;  // a != 0
  Fp from_int(long long v) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Monomial in n+1 variables x0..xn, stored as an exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  int degree() const;
  int nvars() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& exponents() const { return e_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial quotient(const Monomial& divisor) const;  // pre: divisor divides *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(int nvars, int i);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

/// Degree reverse lexicographic order: returns +1 if a > b, -1 if a < b, 0 if equal.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Fp coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// Homogeneous polynomial with exact F_p coefficients.  Terms are kept
/// sorted strictly descending in degrevlex; the zero polynomial has no
/// terms and no degree.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  /// Sorts, merges equal monomials, drops zeros; throws InhomogeneousInput
  /// if surviving terms have mixed degrees.
  static GradedPolynomial from_terms(const PrimeField& k, std::vector<Term> terms);

  bool operator==(const GradedPolynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

struct Ring {
  PrimeField field;
  int nvars;  // number of variables, i.e. n+1 for P^n

  bool operator==(const Ring&) const = default;
};

GradedPolynomial poly_add(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g);
GradedPolynomial poly_mul(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g);
GradedPolynomial poly_scale(const Ring& R, Fp c, const GradedPolynomial& f);
GradedPolynomial poly_neg(const Ring& R, const GradedPolynomial& f);
GradedPolynomial poly_sub(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g);
/// c * m * f for a single coefficient/monomial pair.
GradedPolynomial term_mul(const Ring& R, Fp c, const Monomial& m,
                          const GradedPolynomial& f);

GradedPolynomial poly_one(const Ring& R);
GradedPolynomial poly_var(const Ring& R, int i);
GradedPolynomial poly_monomial(const Ring& R, Fp c, const Monomial& m);

/// All monomials of total degree d in R.nvars variables, descending in
/// degrevlex.  Empty for d < 0; count is C(nvars-1+d, nvars-1).
std::vector<Monomial> monomial_basis(const Ring& R, int d);

long long binomial(long long n, long long k);

/// Text grammar: terms joined by '+'/'-'; term = optional integer
/// coefficient and '*'-separated powers "x0^2*x1".
GradedPolynomial parse_poly(const Ring& R, std::string_view text);
std::string format_poly(const GradedPolynomial& f);
std::string format_monomial(const Monomial& m);

}  // namespace serreq
