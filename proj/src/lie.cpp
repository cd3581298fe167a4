#include "qgrowth/lie.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <set>
#include <stdexcept>
#include <thread>

namespace qgrowth {
namespace {

constexpr double kPi = std::numbers::pi;

Rat vdot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long rat_to_long(const Rat& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": value not an integer");
  if (!q.get_num().fits_slong_p()) throw std::logic_error(std::string(what) + ": value too large");
  return q.get_num().get_si();
}

Weight add(const Weight& x, const Weight& y) {
  Weight out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Weight sub(const Weight& x, const Weight& y) {
  Weight out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Weight negate(const Weight& x) {
  Weight out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return out;
}

int expected_root_count(LieType type, int r) {
  switch (type) {
    case LieType::A: return r * (r + 1);
    case LieType::B:
    case LieType::C: return 2 * r * r;
    case LieType::D: return 2 * r * (r - 1);
    case LieType::G2: return 12;
  }
  throw std::logic_error("unreachable");
}

Int weyl_order_of(LieType type, int r) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r));
  switch (type) {
    case LieType::A: return f * (r + 1);
    case LieType::B:
    case LieType::C: {
      Int out;
      mpz_mul_2exp(out.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(r));
      return out;
    }
    case LieType::D: {
      Int out;
      mpz_mul_2exp(out.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(r - 1));
      return out;
    }
    case LieType::G2: return 12;
  }
  throw std::logic_error("unreachable");
}

// Simple roots as columns of an (ambient x rank) exact matrix.
RatMat simple_roots(LieType type, int r) {
  switch (type) {
    case LieType::A: {
      RatMat s = RatMat::Zero(r + 1, r);
      for (int j = 0; j < r; ++j) {
        s(j, j) = 1;
        s(j + 1, j) = -1;
      }
      return s;
    }
    case LieType::B:
    case LieType::C:
    case LieType::D: {
      RatMat s = RatMat::Zero(r, r);
      for (int j = 0; j + 1 < r; ++j) {
        s(j, j) = 1;
        s(j + 1, j) = -1;
      }
      if (type == LieType::B) {
        s(r - 1, r - 1) = 1;
      } else if (type == LieType::C) {
        s(r - 1, r - 1) = 2;
      } else {
        s(r - 2, r - 1) = 1;
        s(r - 1, r - 1) = 1;
      }
      return s;
    }
    case LieType::G2: {
      RatMat s = RatMat::Zero(3, 2);
      s(0, 0) = 1;
      s(1, 0) = -1;
      s(0, 1) = -2;
      s(1, 1) = 1;
      s(2, 1) = 1;
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

void validate_rank(LieType type, int r) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = r >= 1; break;
    case LieType::B: ok = r >= 2; break;
    case LieType::C: ok = r >= 2; break;
    case LieType::D: ok = r >= 3; break;
    case LieType::G2: ok = r == 2; break;
  }
  if (!ok) throw std::invalid_argument("build_root_system: invalid rank for this type");
}

std::string type_name(LieType type, int r) {
  switch (type) {
    case LieType::A: return "A" + std::to_string(r);
    case LieType::B: return "B" + std::to_string(r);
    case LieType::C: return "C" + std::to_string(r);
    case LieType::D: return "D" + std::to_string(r);
    case LieType::G2: return "G2";
  }
  throw std::logic_error("unreachable");
}

[[noreturn]] void invariant_failure(const std::string& what) {
  throw std::logic_error("root system invariant violated: " + what);
}

// Integer-rescaled pairing tables for the Weyl dimension product:
// for each positive root a, ga = L * G * a (integer entries, L a common
// denominator) and ra = sum_i ga_i = L * (rho | a). Then
// dim(lambda) = prod_a sum_i (lambda_i + 1) ga_i / prod_a ra.
struct DimTable {
  std::vector<std::vector<Int>> ga;
  std::vector<Int> ra;
  Int den;

  explicit DimTable(const RootSystem& rs) {
    const int r = rs.rank;
    Int lcm = 1;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Int out;
        mpz_lcm(out.get_mpz_t(), lcm.get_mpz_t(), rs.gram(i, j).get_den().get_mpz_t());
        lcm = out;
      }
    den = 1;
    for (const Weight& a : rs.positive) {
      std::vector<Int> g(static_cast<size_t>(r));
      Int rsum = 0;
      for (int i = 0; i < r; ++i) {
        Rat v = 0;
        for (int j = 0; j < r; ++j) v += rs.gram(i, j) * a[static_cast<size_t>(j)];
        v *= lcm;
        if (v.get_den() != 1) invariant_failure("rescaled Gram pairing not integral");
        g[static_cast<size_t>(i)] = v.get_num();
        rsum += g[static_cast<size_t>(i)];
      }
      if (rsum <= 0) invariant_failure("(rho | a) <= 0 for a positive root");
      ga.push_back(std::move(g));
      ra.push_back(rsum);
      den *= rsum;
    }
  }

  Int dim(const Weight& lambda) const {
    Int num = 1;
    for (const auto& g : ga) {
      Int f = 0;
      for (size_t i = 0; i < g.size(); ++i) f += (lambda[i] + 1) * g[i];
      num *= f;
    }
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
      invariant_failure("Weyl dimension not an integer");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (out <= 0) invariant_failure("Weyl dimension not positive");
    return out;
  }
};

void check_dominant(const RootSystem& rs, const Weight& lambda, const char* who) {
  if (lambda.size() != static_cast<size_t>(rs.rank))
    throw std::invalid_argument(std::string(who) + ": weight has wrong rank");
  for (long c : lambda)
    if (c < 0) throw std::invalid_argument(std::string(who) + ": weight not dominant");
}

// Dense integer box indexed by weight coordinates in [-radius_j, radius_j].
struct Box {
  std::vector<long> radius;
  std::vector<std::ptrdiff_t> stride;
  size_t cells = 1;

  explicit Box(const std::vector<long>& rad) : radius(rad), stride(rad.size()) {
    std::ptrdiff_t s = 1;
    for (size_t j = rad.size(); j-- > 0;) {
      stride[j] = s;
      s *= 2 * rad[j] + 1;
    }
    cells = static_cast<size_t>(s);
  }

  std::ptrdiff_t offset_of(const Weight& x) const {
    std::ptrdiff_t o = 0;
    for (size_t j = 0; j < x.size(); ++j) o += x[j] * stride[j];
    return o;
  }

  size_t index(const Weight& x) const {
    std::ptrdiff_t o = 0;
    for (size_t j = 0; j < x.size(); ++j) o += (x[j] + radius[j]) * stride[j];
    return static_cast<size_t>(o);
  }

  bool contains(const Weight& x) const {
    for (size_t j = 0; j < x.size(); ++j)
      if (x[j] < -radius[j] || x[j] > radius[j]) return false;
    return true;
  }
};

// Iterates x over the sub-box |x_j| <= a_j, calling f(index, x).
template <typename F>
void for_each_cell(const Box& box, const std::vector<long>& a, F&& f) {
  const size_t r = a.size();
  Weight x(r);
  for (size_t j = 0; j < r; ++j) x[j] = -a[j];
  while (true) {
    f(box.index(x), x);
    size_t j = r;
    while (j-- > 0) {
      if (x[j] < a[j]) {
        ++x[j];
        break;
      }
      x[j] = -a[j];
      if (j == 0) return;
    }
  }
}

struct StepSet {
  std::vector<Weight> distinct;
  std::vector<Int> mult;
  std::vector<long> max_coord;  // per coordinate max |s_j|
  size_t total = 0;
};

StepSet collect_steps(const RootSystem& rs, const std::vector<Weight>& steps) {
  if (steps.empty()) throw std::invalid_argument("lattice walk: empty step set");
  StepSet out;
  out.max_coord.assign(static_cast<size_t>(rs.rank), 0);
  std::map<Weight, Int> m;
  for (const Weight& s : steps) {
    if (s.size() != static_cast<size_t>(rs.rank))
      throw std::invalid_argument("lattice walk: step has wrong rank");
    m[s] += 1;
    for (size_t j = 0; j < s.size(); ++j)
      out.max_coord[j] = std::max(out.max_coord[j], std::labs(s[j]));
  }
  for (auto& [s, c] : m) {
    out.distinct.push_back(s);
    out.mult.push_back(c);
  }
  out.total = steps.size();
  return out;
}

// Pairing sum_a delta_hat(a) * f(-a) over the delta support, with f read from
// the box (zero outside).
template <typename Buf, typename Out>
Out pair_with_delta(const std::map<Weight, Int>& dh, const Box& box, const Buf& buf,
                    Out (*conv)(const Int&, const typename Buf::value_type&)) {
  Out acc{};
  for (const auto& [a, c] : dh) {
    Weight na = negate(a);
    if (!box.contains(na)) continue;
    acc += conv(c, buf[box.index(na)]);
  }
  return acc;
}

Rat conv_exact(const Int& c, const Int& v) { return Rat(c * v); }
double conv_float(const Int& c, const double& v) { return c.get_d() * v; }

}  // namespace

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < rank; ++j) row += gram(i, j) * y[static_cast<size_t>(j)];
    s += row * x[static_cast<size_t>(i)];
  }
  return s;
}

RootSystem build_root_system(LieType type, int rank) {
  validate_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.name = type_name(type, rank);
  rs.simple = simple_roots(type, rank);
  rs.ambient = static_cast<int>(rs.simple.rows());

  const int r = rank;
  std::vector<Rat> norm2(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    norm2[static_cast<size_t>(j)] = vdot(rs.simple.col(j), rs.simple.col(j));
    if (norm2[static_cast<size_t>(j)] == 0) invariant_failure("zero simple root");
  }

  rs.cartan = RatMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rs.cartan(i, j) = 2 * vdot(rs.simple.col(i), rs.simple.col(j)) / norm2[static_cast<size_t>(j)];

  // w_i = sum_k (C^{-1})_{ik} b_k realizes (w_i | b_j) = d_ij (b_j | b_j) / 2.
  RatMat cinv = exact_inverse(rs.cartan);
  rs.fundamental = RatMat::Zero(rs.ambient, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      rs.fundamental.col(i) += rs.simple.col(k) * cinv(i, k);

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat p = vdot(rs.fundamental.col(i), rs.simple.col(j));
      if (i != j && p != 0) invariant_failure("(w_i | b_j) != 0 for i != j");
      if (i == j && p <= 0) invariant_failure("(b_i | w_i) <= 0");
    }

  rs.rho = RatVec::Zero(rs.ambient);
  for (int i = 0; i < r; ++i) rs.rho += rs.fundamental.col(i);

  // Reflection closure of the simple roots gives the full root set.
  std::set<std::vector<Rat>> roots;
  std::vector<RatVec> frontier;
  auto key_of = [&](const RatVec& v) {
    return std::vector<Rat>(v.data(), v.data() + v.size());
  };
  for (int j = 0; j < r; ++j) {
    if (roots.insert(key_of(rs.simple.col(j))).second) frontier.push_back(rs.simple.col(j));
  }
  while (!frontier.empty()) {
    RatVec a = frontier.back();
    frontier.pop_back();
    for (int j = 0; j < r; ++j) {
      RatVec b = a - rs.simple.col(j) * (2 * vdot(a, rs.simple.col(j)) / norm2[static_cast<size_t>(j)]);
      if (roots.insert(key_of(b)).second) frontier.push_back(b);
    }
  }
  if (static_cast<int>(roots.size()) != expected_root_count(type, r))
    invariant_failure("unexpected root count");

  rs.gram = RatMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.gram(i, j) = vdot(rs.fundamental.col(i), rs.fundamental.col(j));

  for (const auto& key : roots) {
    RatVec a(rs.ambient);
    for (int i = 0; i < rs.ambient; ++i) a[i] = key[static_cast<size_t>(i)];
    Rat h = vdot(a, rs.rho);
    if (h == 0) invariant_failure("root orthogonal to rho");
    if (h < 0) continue;
    Weight w(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j)
      w[static_cast<size_t>(j)] =
          rat_to_long(2 * vdot(a, rs.simple.col(j)) / norm2[static_cast<size_t>(j)],
                      "root in weight coordinates");
    // Positive roots must be nonnegative integer combinations of simples.
    for (int j = 0; j < r; ++j) {
      Rat c = 2 * vdot(a, rs.fundamental.col(j)) / norm2[static_cast<size_t>(j)];
      if (c.get_den() != 1 || c < 0) invariant_failure("positive root not a N-combination of simples");
    }
    rs.positive.push_back(std::move(w));
  }
  if (static_cast<int>(rs.positive.size()) * 2 != expected_root_count(type, r))
    invariant_failure("positive root count");
  std::sort(rs.positive.begin(), rs.positive.end());

  rs.weyl_order = weyl_order_of(type, r);
  return rs;
}

RootSystem root_system_by_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown root system name: " + name);
  char t = name[0];
  const std::string digits = name.substr(1);
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("unknown root system name: " + name);
  if (digits.size() > 2) throw std::invalid_argument("unknown root system name: " + name);
  int r = std::stoi(digits);
  LieType type;
  switch (t) {
    case 'A': type = LieType::A; break;
    case 'B': type = LieType::B; break;
    case 'C': type = LieType::C; break;
    case 'D': type = LieType::D; break;
    case 'G': type = LieType::G2; break;
    default: throw std::invalid_argument("unknown root system name: " + name);
  }
  try {
    return build_root_system(type, r);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown root system name: " + name);
  }
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda, "weyl_dim");
  return DimTable(rs).dim(lambda);
}

std::vector<Weight> sphere_weights(const RootSystem& rs, int k) {
  if (k < 0) throw std::invalid_argument("sphere_weights: negative length");
  std::vector<Weight> out;
  Weight w(static_cast<size_t>(rs.rank), 0);
  auto rec = [&](auto&& self, int pos, long rem) -> void {
    if (pos + 1 == rs.rank) {
      w[static_cast<size_t>(pos)] = rem;
      out.push_back(w);
      return;
    }
    for (long v = 0; v <= rem; ++v) {
      w[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

VolumeTable lie_volumes(const RootSystem& rs, int K, int threads) {
  if (K < 0) throw std::invalid_argument("lie_volumes: negative radius");
  if (threads < 1) threads = 1;
  DimTable table(rs);
  std::vector<Int> s(static_cast<size_t>(K) + 1);
  auto work = [&](int first) {
    Weight w(static_cast<size_t>(rs.rank), 0);
    for (int k = first; k <= K; k += threads) {
      Int acc = 0;
      auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos + 1 == rs.rank) {
          w[static_cast<size_t>(pos)] = rem;
          Int d = table.dim(w);
          acc += d * d;
          return;
        }
        for (long v = 0; v <= rem; ++v) {
          w[static_cast<size_t>(pos)] = v;
          self(self, pos + 1, rem - v);
        }
      };
      rec(rec, 0, k);
      s[static_cast<size_t>(k)] = std::move(acc);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  VolumeTable out;
  out.spheres = std::move(s);
  out.balls.resize(out.spheres.size());
  Int run = 0;
  for (size_t k = 0; k < out.spheres.size(); ++k) {
    run += out.spheres[k];
    out.balls[k] = run;
  }
  return out;
}

std::vector<Weight> fundamental_weight_system(const RootSystem& rs, int i) {
  const int r = rs.rank;
  if (i < 0 || i >= r) throw std::invalid_argument("fundamental_weight_system: bad index");
  Weight top(static_cast<size_t>(r), 0);
  top[static_cast<size_t>(i)] = 1;
  const Int expected = weyl_dim(rs, top);

  std::vector<Weight> beta(static_cast<size_t>(r), Weight(static_cast<size_t>(r)));
  for (int j = 0; j < r; ++j)
    for (int l = 0; l < r; ++l)
      beta[static_cast<size_t>(j)][static_cast<size_t>(l)] =
          rat_to_long(rs.cartan(j, l), "Cartan entry");

  auto plus_rho = [r](const Weight& w) {
    Weight out(w);
    for (int j = 0; j < r; ++j) out[static_cast<size_t>(j)] += 1;
    return out;
  };
  const Rat c2 = rs.inner(plus_rho(top), plus_rho(top));

  std::map<Weight, Int> mult;
  mult[top] = 1;
  std::vector<Weight> level = {top};
  while (!level.empty()) {
    std::set<Weight> candidates;
    for (const Weight& mu : level)
      for (int j = 0; j < r; ++j) candidates.insert(sub(mu, beta[static_cast<size_t>(j)]));
    std::vector<Weight> next;
    for (const Weight& lam : candidates) {
      Rat num = 0;
      for (const Weight& a : rs.positive) {
        Weight x = add(lam, a);
        for (auto it = mult.find(x); it != mult.end(); it = mult.find(x)) {
          num += rs.inner(x, a) * it->second;
          x = add(x, a);
        }
      }
      num *= 2;
      if (num == 0) continue;
      if (num < 0) invariant_failure("negative Freudenthal numerator");
      Rat den = c2 - rs.inner(plus_rho(lam), plus_rho(lam));
      if (den <= 0) invariant_failure("nonpositive Freudenthal denominator");
      Rat m = num / den;
      if (m.get_den() != 1) invariant_failure("non-integral weight multiplicity");
      mult[lam] = m.get_num();
      next.push_back(lam);
    }
    level = std::move(next);
  }

  std::vector<Weight> out;
  Int total = 0;
  for (const auto& [w, m] : mult) {
    total += m;
    for (Int c = 0; c < m; ++c) out.push_back(w);
  }
  if (total != expected) invariant_failure("weight system size mismatch with Weyl dimension");
  return out;
}

std::vector<Weight> walk_steps(const RootSystem& rs) {
  std::vector<Weight> out;
  for (int i = 0; i < rs.rank; ++i) {
    auto w = fundamental_weight_system(rs, i);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::map<Weight, Int> delta_hat(const RootSystem& rs) {
  const int s = rs.root_count();
  if (s > 16)
    throw std::runtime_error("delta_hat guard: expansion is 2^s terms, needs s <= 16, got s = " +
                             std::to_string(s));
  std::map<Weight, Int> acc;
  acc[Weight(static_cast<size_t>(rs.rank), 0)] = 1;
  auto mul_factor = [&](const Weight& a) {
    std::map<Weight, Int> next;
    for (const auto& [v, c] : acc) {
      next[v] -= c;
      next[add(v, a)] += c;
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  };
  for (const Weight& a : rs.positive) {
    mul_factor(a);
    mul_factor(negate(a));
  }
  Int total = 0;
  for (const auto& [v, c] : acc) {
    total += c;
    auto it = acc.find(negate(v));
    if (it == acc.end() || it->second != c) invariant_failure("delta_hat not symmetric");
  }
  if (total != 0) invariant_failure("delta_hat total mass nonzero");
  if (acc.at(Weight(static_cast<size_t>(rs.rank), 0)) != rs.weyl_order)
    invariant_failure("delta_hat(0) differs from the Weyl group order");
  return acc;
}

LatticeDistribution lattice_walk(const RootSystem& rs, const std::vector<Weight>& steps, int m) {
  if (m < 0) throw std::invalid_argument("lattice_walk: negative step count");
  StepSet ss = collect_steps(rs, steps);
  Rat inv_n = make_rat(1, static_cast<long>(ss.total));
  LatticeDistribution dist;
  dist.support[Weight(static_cast<size_t>(rs.rank), 0)] = 1;
  for (int t = 0; t < m; ++t) {
    std::map<Weight, Rat> next;
    for (const auto& [v, p] : dist.support)
      for (size_t j = 0; j < ss.distinct.size(); ++j)
        next[add(v, ss.distinct[j])] += p * inv_n * ss.mult[j];
    dist.support = std::move(next);
  }
  Rat total = 0;
  for (const auto& [v, p] : dist.support) total += p;
  if (total != 1) invariant_failure("walk mass not conserved");
  return dist;
}

std::vector<Rat> lie_return_probability_sequence(const RootSystem& rs, int k_max) {
  if (k_max < 1) throw std::invalid_argument("return probability: k_max must be >= 1");
  if (k_max > 1000)
    throw std::runtime_error("exact walk guard: k <= 1000, got k = " + std::to_string(k_max));
  StepSet ss = collect_steps(rs, walk_steps(rs));
  const auto dh = delta_hat(rs);

  std::vector<long> radius(ss.max_coord);
  for (long& v : radius) v *= 2 * k_max + 1;
  Box box(radius);
  if (box.cells > size_t(8) * 1000 * 1000)
    throw std::runtime_error("exact walk guard: state box exceeds 8e6 cells for rank " +
                             std::to_string(rs.rank) + " at k = " + std::to_string(k_max));

  std::vector<std::ptrdiff_t> offs;
  for (const Weight& s : ss.distinct) offs.push_back(box.offset_of(s));

  std::vector<Int> cur(box.cells), nxt(box.cells);
  cur[box.index(Weight(static_cast<size_t>(rs.rank), 0))] = 1;

  std::vector<Rat> out;
  Int n_pow = 1;
  const Int n(static_cast<unsigned long>(ss.total));
  std::vector<long> active(static_cast<size_t>(rs.rank), 0);
  for (int m = 1; m <= 2 * k_max; ++m) {
    for (size_t j = 0; j < active.size(); ++j)
      active[j] = std::min(radius[j], static_cast<long>(m) * ss.max_coord[j]);
    for (auto& v : nxt) v = 0;
    for_each_cell(box, active, [&](size_t idx, const Weight&) {
      Int& t = nxt[idx];
      for (size_t j = 0; j < offs.size(); ++j) {
        const Int& src = cur[static_cast<size_t>(static_cast<std::ptrdiff_t>(idx) - offs[j])];
        if (src != 0) mpz_addmul(t.get_mpz_t(), ss.mult[j].get_mpz_t(), src.get_mpz_t());
      }
    });
    cur.swap(nxt);
    n_pow *= n;
    if (m % 2 == 0) {
      Rat num = pair_with_delta<std::vector<Int>, Rat>(dh, box, cur, conv_exact);
      Rat p = num / (rs.weyl_order * n_pow);
      p.canonicalize();
      if (p <= 0 || p > 1) invariant_failure("return probability outside (0, 1]");
      out.push_back(p);
    }
  }
  return out;
}

Rat lie_return_probability(const RootSystem& rs, int k) {
  return lie_return_probability_sequence(rs, k).back();
}

std::vector<double> lie_return_probability_log_sequence(const RootSystem& rs, int k_max) {
  if (k_max < 1) throw std::invalid_argument("return probability: k_max must be >= 1");
  if (rs.rank > 2)
    throw std::invalid_argument("float walk: implemented for rank <= 2");
  StepSet ss = collect_steps(rs, walk_steps(rs));
  const auto dh = delta_hat(rs);
  const double inv_n = 1.0 / static_cast<double>(ss.total);
  const double w_order = rs.weyl_order.get_d();

  std::vector<long> radius(ss.max_coord);
  for (long& v : radius) v *= 2 * k_max + 1;
  Box box(radius);
  std::vector<std::ptrdiff_t> offs;
  std::vector<double> wgt;
  for (size_t j = 0; j < ss.distinct.size(); ++j) {
    offs.push_back(box.offset_of(ss.distinct[j]));
    wgt.push_back(ss.mult[j].get_d() * inv_n);
  }

  std::vector<double> cur(box.cells, 0.0), nxt(box.cells, 0.0);
  cur[box.index(Weight(static_cast<size_t>(rs.rank), 0))] = 1.0;
  double log_scale = 0.0;

  const long a1max = ss.max_coord[0];
  const long a2max = rs.rank == 2 ? ss.max_coord[1] : 0;
  std::vector<double> out;
  for (int m = 1; m <= 2 * k_max; ++m) {
    if (rs.rank == 1) {
      const long a = std::min(radius[0], m * a1max);
      const size_t base = static_cast<size_t>(radius[0]);
      std::fill(nxt.begin() + (base - a), nxt.begin() + (base + a + 1), 0.0);
      for (size_t j = 0; j < offs.size(); ++j) {
        const double wj = wgt[j];
        const double* src = cur.data() + (static_cast<std::ptrdiff_t>(base) - offs[j] - a);
        double* dst = nxt.data() + (base - a);
        for (long x = 0; x <= 2 * a; ++x) dst[x] += wj * src[x];
      }
    } else {
      const long a1 = std::min(radius[0], m * a1max);
      const long a2 = std::min(radius[1], m * a2max);
      const std::ptrdiff_t row = box.stride[0];
      for (long x1 = -a1; x1 <= a1; ++x1) {
        double* dst = nxt.data() + (x1 + radius[0]) * row + (radius[1] - a2);
        std::fill(dst, dst + 2 * a2 + 1, 0.0);
        for (size_t j = 0; j < offs.size(); ++j) {
          const double wj = wgt[j];
          const double* src =
              cur.data() + (x1 + radius[0]) * row + (radius[1] - a2) - offs[j];
          for (long x = 0; x <= 2 * a2; ++x) dst[x] += wj * src[x];
        }
      }
    }
    cur.swap(nxt);
    if (m % 64 == 0) {
      double peak = 0.0;
      for (double v : cur) peak = std::max(peak, v);
      if (peak > 0.0 && peak < 1e-120) {
        for (double& v : cur) v /= peak;
        log_scale += std::log(peak);
      }
    }
    if (m % 2 == 0) {
      double num = pair_with_delta<std::vector<double>, double>(dh, box, cur, conv_float);
      if (!(num > 0.0))
        throw std::runtime_error("float walk lost precision at k = " + std::to_string(m / 2));
      out.push_back(std::log(num / w_order) + log_scale);
    }
  }
  return out;
}

RatMat covariance_of_steps(const std::vector<Weight>& steps) {
  if (steps.empty()) throw std::invalid_argument("covariance: empty step set");
  const auto r = static_cast<Eigen::Index>(steps.front().size());
  RatMat m = RatMat::Zero(r, r);
  for (const Weight& s : steps)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j)
        m(i, j) += Rat(s[static_cast<size_t>(i)]) * s[static_cast<size_t>(j)];
  Rat inv_n = make_rat(1, static_cast<long>(steps.size()));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) m(i, j) *= inv_n;
  return m;
}

RatMat covariance_form(const RootSystem& rs) { return covariance_of_steps(walk_steps(rs)); }

Int alignment_index(const RootSystem& rs) {
  std::vector<Weight> steps = walk_steps(rs);
  const size_t r = static_cast<size_t>(rs.rank);
  std::vector<std::vector<Int>> pool;
  for (size_t i = 1; i < steps.size(); ++i) {
    std::vector<Int> d(r);
    bool zero = true;
    for (size_t j = 0; j < r; ++j) {
      d[j] = steps[i][j] - steps[0][j];
      if (d[j] != 0) zero = false;
    }
    if (!zero) pool.push_back(std::move(d));
  }
  Int index = 1;
  for (size_t row = 0; row < r; ++row) {
    while (true) {
      size_t best = pool.size();
      int nonzero = 0;
      for (size_t i = 0; i < pool.size(); ++i) {
        if (pool[i][row] == 0) continue;
        ++nonzero;
        if (best == pool.size() || cmp(abs(pool[i][row]), abs(pool[best][row])) < 0) best = i;
      }
      if (nonzero == 0) invariant_failure("step differences do not span the weight lattice");
      if (nonzero == 1) {
        index *= abs(pool[best][row]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
      std::vector<Int> piv = pool[best];
      for (auto& v : pool) {
        if (&v == &pool[best] || v[row] == 0) continue;
        Int q = v[row] / piv[row];
        for (size_t j = 0; j < r; ++j) v[j] -= q * piv[j];
      }
      pool.erase(std::remove_if(pool.begin(), pool.end(),
                                [](const std::vector<Int>& v) {
                                  return std::all_of(v.begin(), v.end(),
                                                     [](const Int& x) { return x == 0; });
                                }),
                 pool.end());
    }
  }
  return index;
}

namespace {

// Gauss-Hermite nodes/weights for weight exp(-u^2), by the symmetric
// tridiagonal eigenproblem.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = std::sqrt(i / 2.0);
    jac(i - 1, i) = b;
    jac(i, i - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  nodes.resize(static_cast<size_t>(n));
  weights.resize(static_cast<size_t>(n));
  const double sqrt_pi = std::sqrt(kPi);
  for (int i = 0; i < n; ++i) {
    nodes[static_cast<size_t>(i)] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    weights[static_cast<size_t>(i)] = sqrt_pi * v * v;
  }
}

double gaussian_integral(const RootSystem& rs, int nodes) {
  const int r = rs.rank;
  RatMat m = covariance_form(rs);
  Eigen::MatrixXd a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = 4.0 * kPi * kPi * m(i, j).get_d();
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("quadrature: covariance form not positive definite");
  Eigen::MatrixXd lt = llt.matrixL().transpose();
  const double det_a = a.determinant();

  std::vector<double> u, w;
  gauss_hermite(nodes, u, w);

  const double two_pi = 2.0 * kPi;
  double total = 0.0;
  Eigen::VectorXd y(r), x(r);
  std::vector<int> idx(static_cast<size_t>(r), 0);
  while (true) {
    double wprod = 1.0;
    for (int j = 0; j < r; ++j) {
      y(j) = std::sqrt(2.0) * u[static_cast<size_t>(idx[static_cast<size_t>(j)])];
      wprod *= w[static_cast<size_t>(idx[static_cast<size_t>(j)])];
    }
    x = lt.triangularView<Eigen::Upper>().solve(y);
    double q2 = 1.0;
    for (const Weight& aroot : rs.positive) {
      double pair = 0.0;
      for (int j = 0; j < r; ++j) pair += static_cast<double>(aroot[static_cast<size_t>(j)]) * x(j);
      q2 *= two_pi * pair;
    }
    total += wprod * q2 * q2;
    int j = r - 1;
    while (j >= 0) {
      if (++idx[static_cast<size_t>(j)] < nodes) break;
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return std::pow(2.0, r / 2.0) * total / std::sqrt(det_a);
}

}  // namespace

double gaussian_limit_constant(const RootSystem& rs, int nodes) {
  if (rs.rank > 2) throw std::invalid_argument("gaussian_limit_constant: rank <= 2 only");
  if (nodes < 4) throw std::invalid_argument("gaussian_limit_constant: too few nodes");
  double coarse = gaussian_integral(rs, nodes);
  double fine = gaussian_integral(rs, nodes + 8);
  if (std::abs(fine - coarse) > 1e-8 * std::abs(fine))
    throw std::runtime_error("quadrature did not converge");
  return alignment_index(rs).get_d() * fine / rs.weyl_order.get_d();
}

double torus_quadrature_pk(const RootSystem& rs, int k, int grid) {
  if (rs.rank > 2) throw std::invalid_argument("torus_quadrature_pk: rank <= 2 only");
  if (k < 0 || k > 8) throw std::invalid_argument("torus_quadrature_pk: needs 0 <= k <= 8");
  StepSet ss = collect_steps(rs, walk_steps(rs));
  const int r = rs.rank;

  // Midpoint rule is exact once the grid exceeds the per-coordinate bandwidth
  // of chi^{2k} * delta.
  std::vector<int> m_needed(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    long band = 2L * k * ss.max_coord[static_cast<size_t>(j)];
    for (const Weight& a : rs.positive) band += std::labs(a[static_cast<size_t>(j)]);
    m_needed[static_cast<size_t>(j)] = static_cast<int>(band) + 1;
  }
  std::vector<int> m(m_needed);
  if (grid > 0) {
    for (int j = 0; j < r; ++j) {
      if (grid < m_needed[static_cast<size_t>(j)])
        throw std::runtime_error("torus quadrature: grid too coarse, need at least " +
                                 std::to_string(m_needed[static_cast<size_t>(j)]) + " points");
      m[static_cast<size_t>(j)] = grid;
    }
  }

  const double two_pi = 2.0 * kPi;
  const double inv_n = 1.0 / static_cast<double>(ss.total);
  double acc = 0.0;
  std::vector<int> idx(static_cast<size_t>(r), 0);
  std::vector<double> t(static_cast<size_t>(r));
  while (true) {
    for (int j = 0; j < r; ++j)
      t[static_cast<size_t>(j)] =
          (idx[static_cast<size_t>(j)] + 0.5) / m[static_cast<size_t>(j)];
    double chi = 0.0;
    for (size_t sj = 0; sj < ss.distinct.size(); ++sj) {
      double phase = 0.0;
      for (int j = 0; j < r; ++j)
        phase += static_cast<double>(ss.distinct[sj][static_cast<size_t>(j)]) *
                 t[static_cast<size_t>(j)];
      chi += ss.mult[sj].get_d() * std::cos(two_pi * phase);
    }
    double weight = 1.0;
    for (const Weight& a : rs.positive) {
      double phase = 0.0;
      for (int j = 0; j < r; ++j)
        phase += static_cast<double>(a[static_cast<size_t>(j)]) * t[static_cast<size_t>(j)];
      double s2 = std::sin(kPi * phase);
      weight *= 4.0 * s2 * s2;
    }
    acc += std::pow(chi * inv_n, 2 * k) * weight;
    int j = r - 1;
    while (j >= 0) {
      if (++idx[static_cast<size_t>(j)] < m[static_cast<size_t>(j)]) break;
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  double cells = 1.0;
  for (int j = 0; j < r; ++j) cells *= m[static_cast<size_t>(j)];
  return acc / (cells * rs.weyl_order.get_d());
}

}  // namespace qgrowth
