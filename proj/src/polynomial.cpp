#include "dspecht/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dspecht::alg {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

std::uint64_t Monomial::parity() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i) {
    if (exps_[i] & 1u) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("monomial variable-count mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // Descending lex: start with all weight on x1.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Monomial(nvars), constant);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  // Graded order: the leading monomial has maximal total degree.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.try_emplace(static_cast<int>(m.degree()), nvars_);
    it->second.terms_.emplace_hint(it->second.terms_.end(), m, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& g, const Rational& c, const Monomial& m) {
  check_compatible(g);
  if (c == 0) return;
  for (const auto& [gm, gc] : g.terms_) add_term(gm * m, gc * c);
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (g.nvars_ != nvars_) {
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) + " vs " +
                                std::to_string(g.nvars_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial r(f.nvars_);
  for (const auto& [fm, fc] : f.terms_) {
    for (const auto& [gm, gc] : g.terms_) r.add_term(fm * gm, fc * gc);
  }
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(nvars_);
  for (const auto& [tm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), tm * m, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw std::invalid_argument("point has length " + std::to_string(point.size()) + ", expected " +
                                std::to_string(nvars_));
  }
  Rational total = 0;
  Rational term;
  mpq_class power;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute_squares() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    for (auto& x : e) x *= 2;
    // Doubling preserves graded-lex order, so hinted insertion stays linear.
    r.terms_.emplace_hint(r.terms_.end(), Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::extended_to(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink ambient ring");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    e.resize(nvars, 0);
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d.set(index, m[index] - 1);
    r.add_term(d, c * m[index]);
  }
  return r;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Rational eval(const Polynomial& f, std::span<const Rational> point) { return f.eval(point); }
Polynomial substitute_squares(const Polynomial& f) { return f.substitute_squares(); }

// ----------------------------------------------------------------- division

Division divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable-count mismatch");
  Division out{Polynomial(f.nvars()), Polynomial(f.nvars())};
  Polynomial rest = f;
  const Monomial& lm = g.leading_monomial();
  const Rational& lc = g.leading_coefficient();
  while (!rest.is_zero()) {
    Monomial m = rest.leading_monomial();
    Rational c = rest.leading_coefficient();
    if (lm.divides(m)) {
      Monomial q = lm.quotient_of(m);
      Rational qc = c / lc;
      out.quotient.add_term(q, qc);
      rest.add_scaled(g, -qc, q);
    } else {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return out;
}

std::optional<Polynomial> divides(const Polynomial& g, const Polynomial& f) {
  Division d = divide(f, g);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

// --------------------------------------------------------------- univariate

std::vector<Rational> univariate_coefficients(const Polynomial& f, std::size_t index) {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (i != index && m[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    }
    std::size_t e = m[index];
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return coeffs;
}

namespace {

void trim(std::vector<Rational>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b; b nonzero and trimmed.
std::vector<Rational> remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

bool univariate_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  std::size_t var = 0;
  bool found = false;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (found && i != var) throw std::invalid_argument("polynomial is not univariate");
      var = i;
      found = true;
    }
  }
  if (!found) return true;  // nonzero constant
  auto coeffs = univariate_coefficients(f, var);
  std::vector<Rational> deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) deriv.push_back(coeffs[i] * static_cast<long>(i));
  return univariate_gcd(coeffs, deriv).size() == 1;
}

}  // namespace dspecht::alg
