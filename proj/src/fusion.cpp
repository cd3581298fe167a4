#include "qgrowth/fusion.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace qgrowth {

void add_to(MultiplicityVector& mv, const Label& l, const Int& c) {
  if (c == 0) return;
  auto it = mv.find(l);
  if (it == mv.end()) {
    mv.emplace(l, c);
  } else {
    it->second += c;
    if (it->second == 0) mv.erase(it);
  }
}

MultiplicityVector FusionRing::tensor_with_generator(const Label& v) const {
  MultiplicityVector out;
  for (const auto& [g, m] : generator()) {
    for (const auto& [t, c] : tensor_with_letter(v, g)) add_to(out, t, m * c);
  }
  return out;
}

Int FusionRing::generator_dim() const {
  Int n = 0;
  for (const auto& [g, m] : generator()) n += m * dim(g);
  return n;
}

Int total_dimension(const FusionRing& ring, const MultiplicityVector& mv) {
  Int total = 0;
  for (const auto& [l, m] : mv) total += m * ring.dim(l);
  return total;
}

namespace {

// Interns labels to dense ids and memoizes the tensor-with-generator
// transition of each irreducible. Deques keep references stable while new
// states are discovered mid-iteration.
class Engine {
 public:
  Engine(const FusionRing& ring, size_t state_limit) : ring_(ring), limit_(state_limit) {
    trivial_id_ = intern(ring.trivial());
  }

  int intern(const Label& l) {
    auto it = ids_.find(l);
    if (it != ids_.end()) return it->second;
    if (limit_ != 0 && labels_.size() >= limit_)
      throw std::runtime_error("ball guard exceeded: more than " + std::to_string(limit_) +
                               " irreducibles");
    int id = static_cast<int>(labels_.size());
    ids_.emplace(l, id);
    labels_.push_back(l);
    dims_.push_back(ring_.dim(l));
    trans_.emplace_back();
    dtrans_.emplace_back();
    has_trans_.push_back(false);
    return id;
  }

  void ensure_transitions(int id) {
    if (has_trans_[static_cast<size_t>(id)]) return;
    MultiplicityVector mv = ring_.tensor_with_generator(labels_[static_cast<size_t>(id)]);
    std::vector<std::pair<int, Int>> t;
    std::vector<std::pair<int, double>> d;
    t.reserve(mv.size());
    d.reserve(mv.size());
    for (const auto& [l, c] : mv) {
      int j = intern(l);
      t.emplace_back(j, c);
      d.emplace_back(j, c.get_d());
    }
    trans_[static_cast<size_t>(id)] = std::move(t);
    dtrans_[static_cast<size_t>(id)] = std::move(d);
    has_trans_[static_cast<size_t>(id)] = true;
  }

  const std::vector<std::pair<int, Int>>& transitions(int id) {
    ensure_transitions(id);
    return trans_[static_cast<size_t>(id)];
  }
  const std::vector<std::pair<int, double>>& dtransitions(int id) {
    ensure_transitions(id);
    return dtrans_[static_cast<size_t>(id)];
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int trivial_id() const { return trivial_id_; }
  const Label& label(int id) const { return labels_[static_cast<size_t>(id)]; }
  const Int& dim(int id) const { return dims_[static_cast<size_t>(id)]; }

 private:
  const FusionRing& ring_;
  size_t limit_;
  int trivial_id_;
  std::unordered_map<Label, int> ids_;
  std::deque<Label> labels_;
  std::deque<Int> dims_;
  std::deque<std::vector<std::pair<int, Int>>> trans_;
  std::deque<std::vector<std::pair<int, double>>> dtrans_;
  std::deque<bool> has_trans_;
};

// Lengths of every id reachable within k steps; lengths[id] = l(v).
std::vector<int> bfs_lengths(Engine& eng, int start_id, int k) {
  std::vector<int> length;
  auto mark = [&length](int id, int l) {
    if (static_cast<size_t>(id) >= length.size()) length.resize(static_cast<size_t>(id) + 1, -1);
    if (length[static_cast<size_t>(id)] < 0) {
      length[static_cast<size_t>(id)] = l;
      return true;
    }
    return false;
  };
  mark(start_id, 0);
  std::vector<int> support{start_id};
  for (int step = 1; step <= k && !support.empty(); ++step) {
    std::vector<int> next;
    std::vector<char> seen(static_cast<size_t>(eng.size()) + 1, 0);
    auto push = [&](int id) {
      if (static_cast<size_t>(id) >= seen.size()) seen.resize(static_cast<size_t>(id) + 1, 0);
      if (!seen[static_cast<size_t>(id)]) {
        seen[static_cast<size_t>(id)] = 1;
        next.push_back(id);
      }
    };
    for (int id : support) {
      const auto& tr = eng.transitions(id);
      for (const auto& jc : tr) push(jc.first);
    }
    for (int id : next) mark(id, step);
    support = std::move(next);
  }
  return length;
}

void check_radius(int k) {
  if (k < 0) throw std::invalid_argument("negative radius");
}

}  // namespace

std::map<Label, int> ball(const FusionRing& ring, int k, size_t state_limit) {
  check_radius(k);
  Engine eng(ring, state_limit);
  std::vector<int> length = bfs_lengths(eng, eng.trivial_id(), k);
  std::map<Label, int> out;
  for (size_t id = 0; id < length.size(); ++id) {
    if (length[id] >= 0) out.emplace(eng.label(static_cast<int>(id)), length[id]);
  }
  return out;
}

VolumeTable volumes(const FusionRing& ring, int K, size_t state_limit) {
  check_radius(K);
  Engine eng(ring, state_limit);
  std::vector<int> length = bfs_lengths(eng, eng.trivial_id(), K);
  VolumeTable table;
  table.spheres.assign(static_cast<size_t>(K) + 1, Int(0));
  for (size_t id = 0; id < length.size(); ++id) {
    if (length[id] < 0) continue;
    const Int& d = eng.dim(static_cast<int>(id));
    table.spheres[static_cast<size_t>(length[id])] += d * d;
  }
  table.balls = table.spheres;
  for (size_t i = 1; i < table.balls.size(); ++i) table.balls[i] += table.balls[i - 1];
  return table;
}

PowerSeries series_from_ring(const FusionRing& ring, int K, size_t state_limit) {
  VolumeTable table = volumes(ring, K, state_limit);
  std::vector<Rat> coeffs(table.spheres.begin(), table.spheres.end());
  return PowerSeries(std::move(coeffs), K);
}

namespace {

// One exact DP step: weights w (indexed by id) advance by tensoring with u.
std::vector<Int> dp_step(Engine& eng, const std::vector<Int>& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) eng.ensure_transitions(static_cast<int>(i));
  }
  std::vector<Int> next(static_cast<size_t>(eng.size()), Int(0));
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    for (const auto& [j, c] : eng.transitions(static_cast<int>(i)))
      next[static_cast<size_t>(j)] += w[i] * c;
  }
  return next;
}

}  // namespace

MultiplicityVector multiplicities(const FusionRing& ring, int k, size_t state_limit) {
  check_radius(k);
  Engine eng(ring, state_limit);
  std::vector<Int> w(1, Int(1));
  for (int step = 0; step < k; ++step) w = dp_step(eng, w);
  MultiplicityVector out;
  for (size_t id = 0; id < w.size(); ++id) {
    if (w[id] != 0) out.emplace(eng.label(static_cast<int>(id)), w[id]);
  }
  return out;
}

Int trivial_multiplicity(const FusionRing& ring, int power, size_t state_limit) {
  check_radius(power);
  Engine eng(ring, state_limit);
  std::vector<Int> w(1, Int(1));
  for (int step = 0; step < power; ++step) w = dp_step(eng, w);
  size_t t = static_cast<size_t>(eng.trivial_id());
  return t < w.size() ? w[t] : Int(0);
}

std::vector<Int> trivial_multiplicities_by_power(const FusionRing& ring, int max_power,
                                                 size_t state_limit) {
  check_radius(max_power);
  Engine eng(ring, state_limit);
  std::vector<Int> w(1, Int(1));
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(max_power) + 1);
  size_t t = static_cast<size_t>(eng.trivial_id());
  out.push_back(w[t]);
  for (int step = 1; step <= max_power; ++step) {
    w = dp_step(eng, w);
    out.push_back(t < w.size() ? w[t] : Int(0));
  }
  return out;
}

Rat return_probability(const FusionRing& ring, int k, size_t state_limit) {
  if (k < 1) throw std::invalid_argument("return_probability: k must be >= 1");
  Int m = trivial_multiplicity(ring, 2 * k, state_limit);
  return make_rat(m, pow_int(ring.generator_dim(), 2 * static_cast<unsigned long>(k)));
}

std::vector<double> kesten_sequence(const FusionRing& ring, int K, size_t state_limit) {
  if (K < 1) throw std::invalid_argument("kesten_sequence: K must be >= 1");
  std::vector<Int> m = trivial_multiplicities_by_power(ring, 2 * K, state_limit);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(K));
  for (int k = 1; k <= K; ++k)
    out.push_back(std::exp(log_int(m[static_cast<size_t>(2 * k)]) / (2.0 * k)));
  return out;
}

std::pair<Int, Int> cauchy_schwarz_gap(const FusionRing& ring, int k, size_t state_limit) {
  if (k < 1) throw std::invalid_argument("cauchy_schwarz_gap: k must be >= 1");
  Int m = trivial_multiplicity(ring, 2 * k, state_limit);
  Int b = volumes(ring, k, state_limit).balls.back();
  Int rhs = pow_int(ring.generator_dim(), 2 * static_cast<unsigned long>(k));
  return {m * b, rhs};
}

std::optional<int> distance(const FusionRing& ring, const Label& v, const Label& w, int cutoff,
                            size_t state_limit) {
  if (cutoff < 0) throw std::invalid_argument("distance: negative cutoff");
  ring.dim(v);
  ring.dim(w);
  Engine eng(ring, state_limit);
  int target = eng.intern(w);
  std::vector<int> length = bfs_lengths(eng, eng.intern(v), cutoff);
  if (static_cast<size_t>(target) < length.size() && length[static_cast<size_t>(target)] >= 0)
    return length[static_cast<size_t>(target)];
  return std::nullopt;
}

std::vector<double> log_return_probability_sequence(const FusionRing& ring, int k_max,
                                                    size_t state_limit) {
  if (k_max < 1) throw std::invalid_argument("log_return_probability: k must be >= 1");
  Engine eng(ring, state_limit);
  double log_n = log_int(ring.generator_dim());
  std::vector<double> w(1, 1.0);
  double log_scale = 0.0;
  size_t t = static_cast<size_t>(eng.trivial_id());
  std::vector<double> out;
  out.reserve(static_cast<size_t>(k_max));
  for (int step = 1; step <= 2 * k_max; ++step) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0.0) eng.ensure_transitions(static_cast<int>(i));
    }
    std::vector<double> next(static_cast<size_t>(eng.size()), 0.0);
    double max = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0.0) continue;
      for (const auto& [j, c] : eng.dtransitions(static_cast<int>(i))) {
        double v2 = (next[static_cast<size_t>(j)] += w[i] * c);
        if (v2 > max) max = v2;
      }
    }
    if (max <= 0.0) throw std::runtime_error("log_return_probability: weights vanished");
    for (double& x : next) x /= max;
    log_scale += std::log(max);
    w = std::move(next);
    if (step % 2 == 0) out.push_back(std::log(w[t]) + log_scale - step * log_n);
  }
  return out;
}

double log_return_probability(const FusionRing& ring, int k, size_t state_limit) {
  return log_return_probability_sequence(ring, k, state_limit).back();
}

}  // namespace qgrowth
