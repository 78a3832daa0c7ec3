#include "dspecht/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace dspecht::comb {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

int Partition::column_pair_count() const {
  int total = 0;
  const Partition conj = conjugate();
  for (int c : conj.parts()) total += c * (c - 1) / 2;
  return total;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Bipartition::to_string() const { return first.to_string() + "|" + second.to_string(); }

// -------------------------------------------------------------- Dipartition

Dipartition Dipartition::pair(Partition a, Partition b) {
  if (a == b) throw std::invalid_argument("a pair dipartition needs two distinct partitions");
  if (a.size() > b.size() || (a.size() == b.size() && b < a)) std::swap(a, b);
  Dipartition d;
  d.kind_ = Kind::Pair;
  d.a_ = std::move(a);
  d.b_ = std::move(b);
  return d;
}

Dipartition Dipartition::with_sign(Partition lam, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dipartition sign must be +1 or -1");
  Dipartition d;
  d.kind_ = Kind::Signed;
  d.a_ = lam;
  d.b_ = std::move(lam);
  d.sign_ = sign;
  return d;
}

std::string Dipartition::to_string() const {
  if (kind_ == Kind::Signed) return a_.to_string() + (sign_ > 0 ? "|+" : "|-");
  return a_.to_string() + "|" + b_.to_string();
}

// ------------------------------------------------------------------ parsing

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Partition parse_partition_exact(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("partition must look like (3,2) or (): '" + s + "'");
  }
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty() || tok.size() > 6 ||
          !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("bad partition part '" + tok + "' in '" + s + "'");
      }
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw std::invalid_argument("partition parts must be positive: '" + s + "'");
  }
  return Partition(std::move(parts));
}

std::pair<std::string, std::string> split_bar(std::string_view text) {
  std::string s = strip_spaces(text);
  std::size_t bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("expected '<partition>|<partition or sign>'");
  // One optional outer pair of parentheses: "((2,2,2)|(2,1))".
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && s[1] == '(' && s[s.size() - 2] == ')' &&
      s.find('|') == s.rfind('|')) {
    std::string inner = s.substr(1, s.size() - 2);
    // Only strip when the inner text still splits into two balanced halves.
    std::size_t ib = inner.find('|');
    auto balanced = [](const std::string& t) {
      return t.size() >= 2 && t.front() == '(' && t.back() == ')' &&
             std::count(t.begin(), t.end(), '(') == 1 && std::count(t.begin(), t.end(), ')') == 1;
    };
    std::string l = inner.substr(0, ib), r = inner.substr(ib + 1);
    if (balanced(l) && (balanced(r) || r == "+" || r == "-")) return {l, r};
  }
  return {s.substr(0, bar), s.substr(bar + 1)};
}

}  // namespace

Partition parse_partition(std::string_view text) { return parse_partition_exact(strip_spaces(text)); }

Bipartition parse_bipartition(std::string_view text) {
  auto [l, r] = split_bar(text);
  return {parse_partition_exact(l), parse_partition_exact(r)};
}

Dipartition parse_dipartition(std::string_view text) {
  auto [l, r] = split_bar(text);
  Partition a = parse_partition_exact(l);
  if (r == "+") return Dipartition::with_sign(a, 1);
  if (r == "-") return Dipartition::with_sign(a, -1);
  Partition b = parse_partition_exact(r);
  if (a == b) {
    throw std::invalid_argument("equal halves need a sign: write " + a.to_string() + "|+ or " +
                                a.to_string() + "|-");
  }
  return Dipartition::pair(std::move(a), std::move(b));
}

// -------------------------------------------------------------- enumeration

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  if (n < 0) throw std::invalid_argument("bipartitions of a negative integer");
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& a : partitions(k)) {
      for (const auto& b : partitions(n - k)) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<Dipartition> dipartitions(int n) {
  if (n < 1) throw std::invalid_argument("dipartitions require n >= 1");
  std::vector<Dipartition> out;
  for (int k = 0; 2 * k <= n; ++k) {
    auto small = partitions(k);
    auto large = partitions(n - k);
    for (const auto& a : small) {
      for (const auto& b : large) {
        if (2 * k < n) {
          out.push_back(Dipartition::pair(a, b));
        } else if (a < b) {
          out.push_back(Dipartition::pair(a, b));
        } else if (a == b) {
          out.push_back(Dipartition::with_sign(a, 1));
          out.push_back(Dipartition::with_sign(a, -1));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- operations

Partition fusion(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition row_sum(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.len(), b.len()));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = a[i] + b[i];
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size()) throw std::invalid_argument("dominance needs partitions of the same size");
  int sm = 0, sl = 0;
  for (std::size_t j = 0; j < std::max(mu.len(), lam.len()); ++j) {
    sm += mu[j];
    sl += lam[j];
    if (sm > sl) return false;
  }
  return true;
}

bool bidominance_leq(const Bipartition& p, const Bipartition& q) {
  if (p.n() != q.n()) throw std::invalid_argument("bidominance needs bipartitions of the same n");
  const std::size_t rows =
      std::max(std::max(p.first.len(), p.second.len()), std::max(q.first.len(), q.second.len()));
  int before_p = 0, before_q = 0;  // Σ_{i<j}
  for (std::size_t j = 0; j < rows; ++j) {
    if (p.first[j] + before_p > q.first[j] + before_q) return false;
    before_p += p.first[j] + p.second[j];
    before_q += q.first[j] + q.second[j];
    if (before_p > before_q) return false;
  }
  return true;
}

bool multiset_leq(const Bipartition& p, const Bipartition& q) {
  const Bipartition ps = p.swapped(), qs = q.swapped();
  return (bidominance_leq(p, q) || bidominance_leq(p, qs)) &&
         (bidominance_leq(ps, q) || bidominance_leq(ps, qs));
}

bool didominance_leq(const Dipartition& a, const Dipartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("didominance needs dipartitions of the same n");
  if (a.is_signed() && b.is_signed() && a.first() == b.first()) return a.sign() == b.sign();
  return multiset_leq(a.bipartition(), b.bipartition());
}

std::vector<Dipartition> signed_covers(const Partition& lam) {
  std::vector<Dipartition> out;
  for (std::size_t p = 0; p < lam.len(); ++p) {
    if (lam[p] <= lam[p + 1]) continue;
    std::vector<int> theta = lam.parts(), omega = lam.parts();
    theta[p] -= 1;
    if (p + 1 < omega.size()) omega[p + 1] += 1; else omega.push_back(1);
    out.push_back(Dipartition::pair(Partition(theta), Partition(omega)));
  }
  return out;
}

std::vector<Partition> dominance_lower_covers(const Partition& top) {
  auto all = partitions(top.size());
  std::vector<Partition> below;
  for (const auto& p : all) {
    if (p != top && dominance_leq(p, top)) below.push_back(p);
  }
  std::vector<Partition> covers;
  for (const auto& p : below) {
    bool cover = true;
    for (const auto& q : below) {
      if (q != p && dominance_leq(p, q)) {
        cover = false;
        break;
      }
    }
    if (cover) covers.push_back(p);
  }
  return covers;
}

bool fusion_cover_check(const Partition& lam) {
  std::set<Partition> sums;
  for (const auto& c : signed_covers(lam)) sums.insert(row_sum(c.first(), c.second()));
  for (const auto& k : dominance_lower_covers(row_sum(lam, lam))) {
    if (!sums.count(k)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Hasse data

PosetExport poset(const std::string& group, int n) {
  PosetExport out;
  if (group == "S") {
    auto el = partitions(n);
    for (const auto& p : el) out.nodes.push_back(p.to_string());
    out.edges = hasse(el, dominance_leq);
  } else if (group == "B") {
    auto el = bipartitions(n);
    for (const auto& p : el) out.nodes.push_back(p.to_string());
    out.edges = hasse(el, bidominance_leq);
  } else if (group == "D") {
    auto el = dipartitions(n);
    for (const auto& p : el) out.nodes.push_back(p.to_string());
    out.edges = hasse(el, didominance_leq);
  } else {
    throw std::invalid_argument("unknown group '" + group + "'");
  }
  return out;
}

std::string to_dot(const PosetExport& p, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + p.nodes[i] + "\"];\n";
  }
  for (const auto& [a, b] : p.edges) {
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  }
  return out + "}\n";
}

}  // namespace dspecht::comb
