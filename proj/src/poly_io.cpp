#include "dspecht/poly_io.hpp"

#include <cctype>
#include <limits>
#include <memory>
#include <vector>

namespace dspecht::alg {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

// Parsed before the ambient ring is known, so factors are kept as a small
// expression tree and converted once the variable count is fixed.
struct Node {
  enum class Kind { Sum, Product, Constant, Power, Group } kind;
  Rational value;                      // Constant
  std::size_t var = 0;                 // Power: 0-based variable
  std::uint32_t exponent = 1;          // Power
  std::vector<std::pair<int, std::unique_ptr<Node>>> children;  // Sum: (sign, term)
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Node> parse_all() {
    auto p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t read_uint() {
    std::size_t at = pos_;
    std::string d = read_digits();
    if (d.size() > 9) throw ParseError(at, "integer too large: " + d);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  std::unique_ptr<Node> parse_poly() {
    auto sum = std::make_unique<Node>();
    sum->kind = Node::Kind::Sum;
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      fail("unexpected '+'");
    }
    sum->children.emplace_back(sign, parse_term());
    while (true) {
      if (peek('+')) {
        sign = 1;
      } else if (peek('-')) {
        sign = -1;
      } else {
        break;
      }
      ++pos_;
      sum->children.emplace_back(sign, parse_term());
    }
    return sum;
  }

  std::unique_ptr<Node> parse_term() {
    auto prod = std::make_unique<Node>();
    prod->kind = Node::Kind::Product;
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto c = std::make_unique<Node>();
      c->kind = Node::Kind::Constant;
      std::string num = read_digits();
      if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        std::string den = read_digits();
        if (mpz_class(den) == 0) throw ParseError(at, "zero denominator");
        c->value = Rational(mpz_class(num), mpz_class(den));
        c->value.canonicalize();
      } else {
        c->value = Rational(mpz_class(num));
      }
      prod->children.emplace_back(1, std::move(c));
    } else {
      prod->children.emplace_back(1, parse_factor());
    }
    while (peek('*')) {
      ++pos_;
      prod->children.emplace_back(1, parse_factor());
    }
    return prod;
  }

  std::unique_ptr<Node> parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a factor");
    if (text_[pos_] == '(') {
      ++pos_;
      auto inner = parse_poly();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      auto g = std::make_unique<Node>();
      g->kind = Node::Kind::Group;
      g->children.emplace_back(1, std::move(inner));
      if (peek('^')) {
        ++pos_;
        g->exponent = read_uint();
      }
      return g;
    }
    if (text_[pos_] != 'x') fail("expected a variable 'x<index>' or '('");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected variable index after 'x'");
    }
    std::size_t at = pos_;
    std::uint32_t idx = read_uint();
    if (idx == 0) throw ParseError(at, "variable indices are 1-based");
    auto v = std::make_unique<Node>();
    v->kind = Node::Kind::Power;
    v->var = idx - 1;
    max_var_ = std::max<std::size_t>(max_var_, idx);
    if (peek('^')) {
      ++pos_;
      v->exponent = read_uint();
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

Polynomial build(const Node& node, std::size_t nvars) {
  switch (node.kind) {
    case Node::Kind::Sum: {
      Polynomial r(nvars);
      for (const auto& [sign, child] : node.children) {
        Polynomial t = build(*child, nvars);
        if (sign < 0) r -= t; else r += t;
      }
      return r;
    }
    case Node::Kind::Product: {
      Polynomial r(nvars, 1);
      for (const auto& [sign, child] : node.children) r = r * build(*child, nvars);
      return r;
    }
    case Node::Kind::Constant:
      return Polynomial(nvars, node.value);
    case Node::Kind::Power:
      return Polynomial::monomial(Monomial::variable(nvars, node.var, node.exponent));
    case Node::Kind::Group:
      return build(*node.children.front().second, nvars).pow(node.exponent);
  }
  return Polynomial(nvars);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  Parser parser(text);
  auto tree = parser.parse_all();
  if (nvars == 0) {
    nvars = parser.max_var();
  } else if (parser.max_var() > nvars) {
    throw ParseError(0, "variable x" + std::to_string(parser.max_var()) + " exceeds ambient count " +
                            std::to_string(nvars));
  }
  return build(*tree, nvars);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += mag.get_str() + '*' + to_string(m);
    }
  }
  return out;
}

}  // namespace dspecht::alg
