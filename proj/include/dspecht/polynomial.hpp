#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// A Polynomial is a finite map from Monomial to a nonzero Rational together
// with a fixed ambient variable count. Terms are kept in descending
// graded-lexicographic order (x1 > x2 > ... > xn), so the first stored term is
// the leading term. The zero polynomial has no terms and reports degree -1.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dspecht::alg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  /// The monomial x_{index} (0-based index) in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  void set(std::size_t i, std::uint32_t e);

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Bit i set iff the exponent of x_{i+1} is odd.
  std::uint64_t parity() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic: total degree first, then lexicographic on exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Every monomial of total degree `degree` in `nvars` variables, descending
/// graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& constant);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Homogeneous components keyed by degree.
  std::map<int, Polynomial> homogeneous_components() const;
  Polynomial homogeneous_component(int degree) const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  /// *this += c * m * g
  void add_scaled(const Polynomial& g, const Rational& c, const Monomial& m);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
  friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  Rational eval(std::span<const Rational> point) const;
  /// f(X1^2, ..., Xn^2)
  Polynomial substitute_squares() const;
  /// Same polynomial viewed in a larger ambient ring.
  Polynomial extended_to(std::size_t nvars) const;
  /// Partial derivative with respect to x_{index+1}.
  Polynomial derivative(std::size_t index) const;

 private:
  void check_compatible(const Polynomial& g) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Rational eval(const Polynomial& f, std::span<const Rational> point);
Polynomial substitute_squares(const Polynomial& f);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division of f by the single divisor g under graded-lex order.
Division divide(const Polynomial& f, const Polynomial& g);

/// The quotient f/g when g divides f exactly, nullopt otherwise.
/// Throws std::domain_error if g is zero.
std::optional<Polynomial> divides(const Polynomial& g, const Polynomial& f);

/// Dense coefficient vector (index = power) of a polynomial that involves at
/// most the single variable x_{index+1}.
std::vector<Rational> univariate_coefficients(const Polynomial& f, std::size_t index);

/// gcd(f, f') is constant. `f` may live in any ambient ring but must involve
/// at most one variable. Throws std::domain_error on zero input and
/// std::invalid_argument if more than one variable occurs.
bool univariate_squarefree(const Polynomial& f);

/// Monic Euclidean gcd of dense univariate coefficient vectors.
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace dspecht::alg
