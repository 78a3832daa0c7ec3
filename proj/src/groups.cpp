#include "dspecht/groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dspecht::groups {

GroupKind parse_group_kind(const std::string& text) {
  if (text == "S" || text == "s") return GroupKind::S;
  if (text == "B" || text == "b") return GroupKind::B;
  if (text == "D" || text == "d") return GroupKind::D;
  throw std::invalid_argument("unknown group kind '" + text + "' (expected S, B or D)");
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::S: return "S";
    case GroupKind::B: return "B";
    case GroupKind::D: return "D";
  }
  return "?";
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = i;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  Permutation p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
    p.images_[i] = static_cast<std::size_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
    throw std::invalid_argument("transposition index out of range");
  }
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = static_cast<int>(images_[i]) + 1;
  return out;
}

int Permutation::sign() const {
  // Parity via cycle decomposition: sign = (-1)^(n - #cycles).
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return ((images_.size() - cycles) % 2 == 0) ? 1 : -1;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.images_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

// ------------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(std::size_t n) : perm_(n), signs_(n, 1) {}

SignedPermutation::SignedPermutation(Permutation perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (signs_.size() != perm_.size()) throw std::invalid_argument("sign vector length mismatch");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::sign_flip(std::size_t n, int i) {
  SignedPermutation g(n);
  g.signs_.at(i - 1) = -1;
  return g;
}

bool SignedPermutation::is_even_signed() const {
  int prod = 1;
  for (int s : signs_) prod *= s;
  return prod == 1;
}

SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
  // act(h): X_i -> t_i X_{tau(i)}; then act(g): X_{tau(i)} -> s_{tau(i)} X_{sigma(tau(i))}.
  if (g.size() != h.size()) throw std::invalid_argument("signed permutation size mismatch");
  std::vector<int> signs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) signs[i] = h.signs_[i] * g.signs_[h.perm_.image0(i)];
  return SignedPermutation(g.perm_ * h.perm_, std::move(signs));
}

std::string SignedPermutation::to_string() const {
  std::string out = "(";
  auto line = perm_.one_line();
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(line[i]);
  }
  out += " | ";
  for (int s : signs_) out += s > 0 ? '+' : '-';
  return out + ")";
}

// ------------------------------------------------------------------ actions

alg::Monomial act(const SignedPermutation& g, const alg::Monomial& m, int& sign_out) {
  std::vector<std::uint32_t> e(m.nvars(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    e[g.perm().image0(i)] = m[i];
    if (g.signs()[i] < 0 && (m[i] & 1u)) sign = -sign;
  }
  sign_out = sign;
  return alg::Monomial(std::move(e));
}

Polynomial act(const SignedPermutation& g, const Polynomial& f) {
  if (g.size() != f.nvars()) {
    throw std::invalid_argument("group element acts on " + std::to_string(g.size()) +
                                " variables, polynomial has " + std::to_string(f.nvars()));
  }
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    int s = 1;
    alg::Monomial image = act(g, m, s);
    r.add_term(image, s > 0 ? c : Rational(-c));
  }
  return r;
}

Polynomial act(const Permutation& sigma, const Polynomial& f) {
  return act(SignedPermutation(sigma, std::vector<int>(sigma.size(), 1)), f);
}

std::vector<Rational> act_point(const SignedPermutation& g, std::span<const Rational> p) {
  if (g.size() != p.size()) throw std::invalid_argument("point length mismatch");
  std::vector<Rational> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& v = p[g.perm().image0(i)];
    out[i] = g.signs()[i] > 0 ? v : Rational(-v);
  }
  return out;
}

std::vector<SignedPermutation> enumerate_group(GroupKind kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("group enumeration requires n >= 1");
  std::vector<std::vector<int>> perms;
  std::vector<int> line(n);
  for (std::size_t i = 0; i < n; ++i) line[i] = static_cast<int>(i) + 1;
  do {
    perms.push_back(line);
  } while (std::next_permutation(line.begin(), line.end()));

  std::vector<SignedPermutation> out;
  const std::size_t sign_patterns = kind == GroupKind::S ? 1 : (std::size_t{1} << n);
  for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
    // Bit i of the mask (most significant first) is the sign of position i,
    // so counting upward enumerates sign vectors lexicographically.
    std::vector<int> signs(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << (n - 1 - i))) signs[i] = -1;
    }
    int prod = 1;
    for (int s : signs) prod *= s;
    if (kind == GroupKind::D && prod != 1) continue;
    for (const auto& p : perms) out.emplace_back(Permutation::from_one_line(p), signs);
  }
  return out;
}

void for_each_permutation_of(std::size_t n, const std::vector<int>& support,
                             const std::function<void(const Permutation&)>& visit) {
  std::vector<int> positions = support;
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw std::invalid_argument("repeated index in support");
  }
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > n) throw std::invalid_argument("support index out of range");
  }
  std::vector<int> values = positions;
  std::vector<int> line(n);
  for (std::size_t i = 0; i < n; ++i) line[i] = static_cast<int>(i) + 1;
  do {
    for (std::size_t k = 0; k < positions.size(); ++k) line[positions[k] - 1] = values[k];
    visit(Permutation::from_one_line(line));
  } while (std::next_permutation(values.begin(), values.end()));
}

Polynomial antisymmetrize(const Polynomial& f, const std::vector<int>& support) {
  Polynomial sum(f.nvars());
  for_each_permutation_of(f.nvars(), support, [&](const Permutation& sigma) {
    Polynomial image = act(sigma, f);
    if (sigma.sign() > 0) sum += image; else sum -= image;
  });
  return sum;
}

Polynomial coset_antisymmetrize(const Polynomial& f, const std::vector<int>& big,
                                const std::vector<int>& small) {
  std::set<int> big_set(big.begin(), big.end());
  for (int s : small) {
    if (!big_set.count(s)) throw std::invalid_argument("coset sum requires small ⊆ big");
  }
  std::set<int> small_set(small.begin(), small.end());
  if (small_set.size() != small.size()) throw std::invalid_argument("repeated index in small set");
  std::vector<int> outside;
  for (int b : big_set) {
    if (!small_set.count(b)) outside.push_back(b);
  }
  // sigma and sigma*h (h in S_small) agree on big \ small, and conversely.
  std::set<std::vector<int>> seen;
  Polynomial sum(f.nvars());
  for_each_permutation_of(f.nvars(), big, [&](const Permutation& sigma) {
    std::vector<int> key;
    key.reserve(outside.size());
    for (int i : outside) key.push_back(sigma(i));
    if (!seen.insert(std::move(key)).second) return;
    Polynomial image = act(sigma, f);
    if (sigma.sign() > 0) sum += image; else sum -= image;
  });
  return sum;
}

}  // namespace dspecht::groups
