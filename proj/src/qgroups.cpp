#include "qgrowth/qgroups.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qgrowth {
namespace {

bool canonical_uint(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] == '0') return s.size() == 1;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool canonical_int(const std::string& s) {
  if (!s.empty() && s[0] == '-') return s.size() > 1 && s[1] != '0' && canonical_uint(s.substr(1));
  return canonical_uint(s);
}

std::string render_ints(const std::vector<long>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::vector<long> parse_ints(const std::string& s, const char* what) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument(std::string(what) + ": malformed label " + s);
  std::vector<long> out;
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = inner.find(',', start);
    std::string tok = inner.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!canonical_int(tok))
      throw std::invalid_argument(std::string(what) + ": malformed label " + s);
    out.push_back(std::strtol(tok.c_str(), nullptr, 10));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Splits "(left,right)" at the unique top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument(std::string(what) + ": malformed label " + s);
  int depth = 0;
  size_t cut = std::string::npos;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == ',' && depth == 0) {
      if (cut != std::string::npos)
        throw std::invalid_argument(std::string(what) + ": malformed label " + s);
      cut = i;
    }
    if (depth < 0) throw std::invalid_argument(std::string(what) + ": malformed label " + s);
  }
  if (cut == std::string::npos || depth != 0)
    throw std::invalid_argument(std::string(what) + ": malformed label " + s);
  return {s.substr(1, cut - 1), s.substr(cut + 1, s.size() - cut - 2)};
}

class ChainRing final : public FusionRing {
 public:
  ChainRing(char prefix, long d1, long recur, bool trivial_summand, bool middle_term)
      : prefix_(prefix), recur_(recur), trivial_summand_(trivial_summand),
        middle_term_(middle_term) {
    dims_ = {Int(1), Int(d1)};
  }

  Label trivial() const override { return make(0); }

  MultiplicityVector generator() const override {
    MultiplicityVector g;
    if (trivial_summand_) g.emplace(make(0), 1);
    g.emplace(make(1), 1);
    return g;
  }

  Label conjugate(const Label& v) const override {
    index(v);
    return v;
  }

  Int dim(const Label& v) const override {
    long k = index(v);
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(dims_.size()) <= k) {
      size_t m = dims_.size();
      dims_.push_back(recur_ * dims_[m - 1] - dims_[m - 2]);
    }
    return dims_[static_cast<size_t>(k)];
  }

  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    long k = index(v);
    long gi = index(g);
    MultiplicityVector out;
    if (gi == 0 && trivial_summand_) {
      out.emplace(v, 1);
      return out;
    }
    if (gi != 1)
      throw std::invalid_argument("chain ring: not a generator letter: " + g);
    if (k == 0) {
      out.emplace(make(1), 1);
      return out;
    }
    out.emplace(make(k - 1), 1);
    if (middle_term_) out.emplace(make(k), 1);
    out.emplace(make(k + 1), 1);
    return out;
  }

 private:
  Label make(long k) const { return prefix_ + std::to_string(k); }

  long index(const Label& v) const {
    if (v.size() < 2 || v[0] != prefix_ || !canonical_uint(v.substr(1)))
      throw std::invalid_argument(std::string("chain ring: unknown label ") + v);
    return std::strtol(v.c_str() + 1, nullptr, 10);
  }

  char prefix_;
  long recur_;
  bool trivial_summand_;
  bool middle_term_;
  mutable std::vector<Int> dims_;
  mutable std::mutex mu_;
};

class FreeAbelianRing final : public FusionRing {
 public:
  explicit FreeAbelianRing(int r) : r_(r) {}

  Label trivial() const override { return render_ints(std::vector<long>(r_, 0)); }

  MultiplicityVector generator() const override {
    MultiplicityVector g;
    std::vector<long> e(r_, 0);
    for (size_t i = 0; i < r_; ++i) {
      e[i] = 1;
      g.emplace(render_ints(e), 1);
      e[i] = -1;
      g.emplace(render_ints(e), 1);
      e[i] = 0;
    }
    return g;
  }

  Label conjugate(const Label& v) const override {
    std::vector<long> x = parse(v);
    for (long& c : x) c = -c;
    return render_ints(x);
  }

  Int dim(const Label& v) const override {
    parse(v);
    return 1;
  }

  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    std::vector<long> x = parse(v);
    std::vector<long> y = parse(g);
    int nonzero = 0;
    for (long c : y) {
      if (c != 0) ++nonzero;
      if (c < -1 || c > 1) nonzero = 2;
    }
    if (nonzero != 1)
      throw std::invalid_argument("free abelian ring: not a generator letter: " + g);
    for (size_t i = 0; i < r_; ++i) x[i] += y[i];
    MultiplicityVector out;
    out.emplace(render_ints(x), 1);
    return out;
  }

 private:
  std::vector<long> parse(const Label& v) const {
    std::vector<long> x = parse_ints(v, "free abelian ring");
    if (x.size() != r_)
      throw std::invalid_argument("free abelian ring: unknown label " + v);
    return x;
  }

  size_t r_;
};

class FreeGroupRing final : public FusionRing {
 public:
  explicit FreeGroupRing(int m) : m_(m) {}

  Label trivial() const override { return "[]"; }

  MultiplicityVector generator() const override {
    MultiplicityVector g;
    for (long i = 1; i <= m_; ++i) {
      g.emplace(render_ints({i}), 1);
      g.emplace(render_ints({-i}), 1);
    }
    return g;
  }

  Label conjugate(const Label& v) const override {
    std::vector<long> w = parse(v);
    std::vector<long> out(w.rbegin(), w.rend());
    for (long& c : out) c = -c;
    return render_ints(out);
  }

  Int dim(const Label& v) const override {
    parse(v);
    return 1;
  }

  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    std::vector<long> w = parse(v);
    std::vector<long> letter = parse(g);
    if (letter.size() != 1)
      throw std::invalid_argument("free group ring: not a generator letter: " + g);
    if (!w.empty() && w.back() == -letter[0]) {
      w.pop_back();
    } else {
      w.push_back(letter[0]);
    }
    MultiplicityVector out;
    out.emplace(render_ints(w), 1);
    return out;
  }

 private:
  std::vector<long> parse(const Label& v) const {
    std::vector<long> w = parse_ints(v, "free group ring");
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0 || w[i] > m_ || w[i] < -m_)
        throw std::invalid_argument("free group ring: unknown label " + v);
      if (i > 0 && w[i] == -w[i - 1])
        throw std::invalid_argument("free group ring: label not reduced: " + v);
    }
    return w;
  }

  long m_;
};

class TrivialRing final : public FusionRing {
 public:
  Label trivial() const override { return "e"; }
  MultiplicityVector generator() const override { return {{"e", Int(1)}}; }
  Label conjugate(const Label& v) const override {
    check(v);
    return v;
  }
  Int dim(const Label& v) const override {
    check(v);
    return 1;
  }
  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    check(v);
    check(g);
    return {{"e", Int(1)}};
  }

 private:
  static void check(const Label& v) {
    if (v != "e") throw std::invalid_argument("trivial ring: unknown label " + v);
  }
};

class DirectProductRing final : public FusionRing {
 public:
  DirectProductRing(RingPtr a, RingPtr b)
      : a_(std::move(a)), b_(std::move(b)), ta_(a_->trivial()), tb_(b_->trivial()) {}

  Label trivial() const override { return pair(ta_, tb_); }

  MultiplicityVector generator() const override {
    MultiplicityVector g;
    for (const auto& [x, m] : a_->generator()) add_to(g, pair(x, tb_), m);
    for (const auto& [y, m] : b_->generator()) add_to(g, pair(ta_, y), m);
    return g;
  }

  Label conjugate(const Label& v) const override {
    auto [x, y] = split_pair(v, "direct product");
    return pair(a_->conjugate(x), b_->conjugate(y));
  }

  Int dim(const Label& v) const override {
    auto [x, y] = split_pair(v, "direct product");
    return a_->dim(x) * b_->dim(y);
  }

  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    auto [x, y] = split_pair(v, "direct product");
    auto [gx, gy] = split_pair(g, "direct product");
    MultiplicityVector out;
    if (gx == ta_ && gy == tb_) {
      a_->dim(x);
      b_->dim(y);
      out.emplace(v, 1);
    } else if (gy == tb_) {
      b_->dim(y);
      for (const auto& [t, c] : a_->tensor_with_letter(x, gx)) add_to(out, pair(t, y), c);
    } else if (gx == ta_) {
      a_->dim(x);
      for (const auto& [t, c] : b_->tensor_with_letter(y, gy)) add_to(out, pair(x, t), c);
    } else {
      throw std::invalid_argument("direct product: not a generator letter: " + g);
    }
    return out;
  }

 private:
  static Label pair(const Label& x, const Label& y) { return "(" + x + "," + y + ")"; }

  RingPtr a_, b_;
  Label ta_, tb_;
};

// Alternating words v_1...v_p, each letter a nontrivial irreducible of its
// factor, adjacent letters from different factors. Tensoring follows the
// last-letter rule: a letter of the other factor appends; a letter of the same
// factor decomposes against v_p, the trivial part dropping v_p.
class WordRing final : public FusionRing {
 public:
  WordRing(RingPtr a, RingPtr b) : f_{std::move(a), std::move(b)} {
    ft_[0] = f_[0]->trivial();
    ft_[1] = f_[1]->trivial();
  }

  Label trivial() const override { return "e"; }

  MultiplicityVector generator() const override {
    MultiplicityVector g;
    for (int i = 0; i < 2; ++i) {
      for (const auto& [x, m] : f_[i]->generator()) {
        if (x == ft_[i]) {
          add_to(g, "e", m);
        } else {
          add_to(g, render_letter(i, x), m);
        }
      }
    }
    return g;
  }

  Label conjugate(const Label& v) const override {
    std::vector<TaggedLetter> w = parse(v);
    std::vector<TaggedLetter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out.push_back({it->tag, f_[it->tag]->conjugate(it->inner)});
    return render(out);
  }

  Int dim(const Label& v) const override {
    Int d = 1;
    for (const TaggedLetter& l : parse(v)) d *= f_[l.tag]->dim(l.inner);
    return d;
  }

  MultiplicityVector tensor_with_letter(const Label& v, const Label& g) const override {
    MultiplicityVector out;
    if (g == "e") {
      dim(v);
      out.emplace(v, 1);
      return out;
    }
    std::vector<TaggedLetter> letter = parse(g);
    if (letter.size() != 1)
      throw std::invalid_argument("free product: not a generator letter: " + g);
    int i = letter[0].tag;
    std::vector<TaggedLetter> w = parse(v);
    if (w.empty() || w.back().tag != i) {
      w.push_back(letter[0]);
      out.emplace(render(w), 1);
      return out;
    }
    Label last = w.back().inner;
    w.pop_back();
    for (const auto& [t, c] : f_[i]->tensor_with_letter(last, letter[0].inner)) {
      if (t == ft_[i]) {
        add_to(out, render(w), c);
      } else {
        w.push_back({i, t});
        add_to(out, render(w), c);
        w.pop_back();
      }
    }
    return out;
  }

 private:
  struct TaggedLetter {
    int tag;  // 0 or 1
    Label inner;
  };

  static Label render_letter(int tag, const Label& inner) {
    return "{" + std::to_string(tag + 1) + ":" + inner + "}";
  }

  Label render(const std::vector<TaggedLetter>& w) const {
    if (w.empty()) return "e";
    Label out;
    for (const TaggedLetter& l : w) out += render_letter(l.tag, l.inner);
    return out;
  }

  std::vector<TaggedLetter> parse(const Label& v) const {
    std::vector<TaggedLetter> out;
    if (v == "e") return out;
    size_t pos = 0;
    while (pos < v.size()) {
      if (v[pos] != '{' || pos + 3 >= v.size() || (v[pos + 1] != '1' && v[pos + 1] != '2') ||
          v[pos + 2] != ':')
        throw std::invalid_argument("free product: malformed label " + v);
      int tag = v[pos + 1] - '1';
      size_t start = pos + 3;
      int depth = 1;
      size_t end = start;
      while (end < v.size() && depth > 0) {
        if (v[end] == '{') ++depth;
        else if (v[end] == '}') --depth;
        if (depth > 0) ++end;
      }
      if (depth != 0) throw std::invalid_argument("free product: malformed label " + v);
      Label inner = v.substr(start, end - start);
      if (inner == ft_[tag])
        throw std::invalid_argument("free product: trivial letter in label " + v);
      f_[tag]->dim(inner);
      if (!out.empty() && out.back().tag == tag)
        throw std::invalid_argument("free product: letters not alternating in " + v);
      out.push_back({tag, inner});
      pos = end + 1;
    }
    return out;
  }

  RingPtr f_[2];
  Label ft_[2];
};

}  // namespace

RingPtr ao_ring(int n) {
  if (n < 2) throw std::invalid_argument("ao_ring: n must be >= 2");
  return std::make_shared<ChainRing>('u', n, n, false, false);
}

RingPtr as_ring(int n) {
  if (n < 4) throw std::invalid_argument("as_ring: n must be >= 4");
  return std::make_shared<ChainRing>('v', n - 1, n - 2, true, true);
}

RingPtr group_ring(GroupKind kind, int count) {
  if (count < 1) throw std::invalid_argument("group_ring: parameter must be >= 1");
  if (kind == GroupKind::FreeAbelian) return std::make_shared<FreeAbelianRing>(count);
  return std::make_shared<FreeGroupRing>(count);
}

RingPtr trivial_ring() { return std::make_shared<TrivialRing>(); }

RingPtr direct_product(RingPtr a, RingPtr b) {
  return std::make_shared<DirectProductRing>(std::move(a), std::move(b));
}

RingPtr free_product(RingPtr a, RingPtr b) {
  return std::make_shared<WordRing>(std::move(a), std::move(b));
}

VolumeTable free_version_growth(const RingPtr& ring, int K, size_t state_limit) {
  std::vector<Int> m = trivial_multiplicities_by_power(*ring, 9, state_limit);
  for (int j = 1; j <= 9; j += 2) {
    if (m[static_cast<size_t>(j)] != 0)
      throw std::domain_error(
          "free version degenerate: trivial object contained in u^" + std::to_string(j) +
          " (odd), so the free-product identification fails");
  }
  return volumes(*free_product(ring, ring), K, state_limit);
}

namespace {

std::pair<std::string, std::string> split_spec_pair(const std::string& inner,
                                                    const std::string& spec) {
  int depth = 0;
  size_t cut = std::string::npos;
  for (size_t i = 0; i < inner.size(); ++i) {
    char c = inner[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth == 0) {
      if (cut != std::string::npos)
        throw std::invalid_argument("object grammar: expected exactly one top-level comma in " +
                                    spec);
      cut = i;
    }
  }
  if (cut == std::string::npos)
    throw std::invalid_argument("object grammar: expected two arguments in " + spec);
  return {inner.substr(0, cut), inner.substr(cut + 1)};
}

int parse_param(const std::string& tok, const std::string& spec) {
  if (!canonical_uint(tok) || tok == "0")
    throw std::invalid_argument("object grammar: family parameter must be a positive integer in " +
                                spec);
  long v = std::strtol(tok.c_str(), nullptr, 10);
  if (v > 1000000)
    throw std::invalid_argument("object grammar: family parameter too large in " + spec);
  return static_cast<int>(v);
}

}  // namespace

CatalogEntry ring_from_spec(const std::string& spec) {
  auto wrapped = [&spec](const std::string& prefix) {
    return spec.size() > prefix.size() + 1 && spec.compare(0, prefix.size(), prefix) == 0 &&
           spec[prefix.size()] == '(' && spec.back() == ')';
  };
  if (spec == "trivial") return {trivial_ring(), spec, false};
  if (wrapped("prod") || wrapped("free")) {
    bool is_prod = spec[0] == 'p';
    std::string inner = spec.substr(5, spec.size() - 6);
    auto [ls, rs] = split_spec_pair(inner, spec);
    CatalogEntry left = ring_from_spec(ls);
    CatalogEntry right = ring_from_spec(rs);
    RingPtr ring = is_prod ? direct_product(left.ring, right.ring)
                           : free_product(left.ring, right.ring);
    return {ring, (is_prod ? "prod(" : "free(") + left.name + "," + right.name + ")",
            left.growth_only || right.growth_only};
  }
  if (wrapped("freeversion")) {
    std::string inner = spec.substr(12, spec.size() - 13);
    CatalogEntry base = ring_from_spec(inner);
    if (base.growth_only)
      throw std::invalid_argument(
          "object grammar: freeversion over a growth-only object in " + spec);
    std::vector<Int> m = trivial_multiplicities_by_power(*base.ring, 9);
    for (int j = 1; j <= 9; j += 2) {
      if (m[static_cast<size_t>(j)] != 0)
        throw std::invalid_argument("object grammar: freeversion argument is degenerate in " +
                                    spec);
    }
    return {free_product(base.ring, base.ring), "freeversion(" + base.name + ")", true};
  }
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string fam = spec.substr(0, colon);
    int param = parse_param(spec.substr(colon + 1), spec);
    if (fam == "ao") {
      if (param < 2)
        throw std::invalid_argument("object grammar: ao requires n >= 2 in " + spec);
      return {ao_ring(param), spec, false};
    }
    if (fam == "as") {
      if (param < 4)
        throw std::invalid_argument("object grammar: as requires n >= 4 in " + spec);
      return {as_ring(param), spec, false};
    }
    if (fam == "zr") return {group_ring(GroupKind::FreeAbelian, param), spec, false};
    if (fam == "free") return {group_ring(GroupKind::Free, param), spec, false};
    throw std::invalid_argument("object grammar: unknown family '" + fam + "' in " + spec);
  }
  throw std::invalid_argument(
      "object grammar: expected ao:N | as:N | zr:R | free:M | trivial | prod(a,b) | free(a,b) | "
      "freeversion(a), got " + spec);
}

}  // namespace qgrowth
