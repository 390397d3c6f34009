#include "gamedim/metric.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "gamedim/errors.hpp"
#include "parallel.hpp"

namespace gamedim {

LandmarkSet::LandmarkSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("landmark set contains duplicate vertices");
  }
}

void LandmarkSet::validate(std::size_t order) const {
  for (Vertex v : vertices_) {
    if (v >= order) {
      throw ArgumentError("landmark " + std::to_string(v) + " out of range for order " +
                          std::to_string(order));
    }
  }
}

DistanceVector distance_vector(const SignedDistanceMatrix& m, const LandmarkSet& s, Vertex v) {
  s.validate(m.order());
  if (v >= m.order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  DistanceVector result;
  result.reserve(s.size());
  for (Vertex landmark : s) result.push_back(m.at(landmark, v));
  return result;
}

namespace {

struct RawVectorHash {
  std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : key) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// For every landmark candidate, the set of vertex pairs {u < v} it separates.
class PairCover {
 public:
  explicit PairCover(const SignedDistanceMatrix& m) : n_(m.order()) {
    pair_count_ = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    words_ = (pair_count_ + 63) / 64;
    bits_.assign(n_ * words_, 0);
    last_separator_.assign(pair_count_, 0);
    for (std::size_t s = 0; s < n_; ++s) {
      const auto row = m.row(static_cast<Vertex>(s));
      std::uint64_t* mine = &bits_[s * words_];
      std::size_t p = 0;
      for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v, ++p) {
          if (row[u] != row[v]) {
            mine[p / 64] |= std::uint64_t{1} << (p % 64);
            last_separator_[p] = static_cast<Vertex>(s);
          }
        }
      }
    }
    full_.assign(words_, ~std::uint64_t{0});
    if (pair_count_ % 64 != 0) full_.back() = (std::uint64_t{1} << (pair_count_ % 64)) - 1;
  }

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  std::size_t pair_count() const { return pair_count_; }
  const std::uint64_t* separated_by(std::size_t s) const { return &bits_[s * words_]; }
  const std::vector<std::uint64_t>& full() const { return full_; }

  /// Index of the first pair not covered by `acc`, or pair_count().
  std::size_t first_uncovered(const std::uint64_t* acc) const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t missing = full_[w] & ~acc[w];
      if (missing != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
    }
    return pair_count_;
  }

  /// Largest vertex id that separates pair p.
  Vertex last_separator(std::size_t p) const { return last_separator_[p]; }

 private:
  std::size_t n_;
  std::size_t pair_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Vertex> last_separator_;
  std::vector<std::uint64_t> full_;
};

/// Lexicographic k-subset search below a fixed leading vertex.
class SubsetSearch {
 public:
  SubsetSearch(const PairCover& cover, std::size_t k, bool collect_all)
      : cover_(cover), k_(k), collect_all_(collect_all),
        acc_((k + 1) * std::max<std::size_t>(cover.words(), 1), 0) {}

  /// Returns witnesses whose first element is `lead` (at most one unless
  /// collecting all).
  std::vector<std::vector<Vertex>> run(Vertex lead) {
    found_.clear();
    chosen_.assign(1, lead);
    std::copy_n(cover_.separated_by(lead), cover_.words(), level(1));
    recurse(1, lead + 1);
    return std::move(found_);
  }

 private:
  std::uint64_t* level(std::size_t depth) { return &acc_[depth * cover_.words()]; }

  // Returns true when the search should stop.
  bool recurse(std::size_t depth, std::size_t next) {
    const std::uint64_t* acc = level(depth);
    const std::size_t missing = cover_.first_uncovered(acc);
    if (missing == cover_.pair_count()) {
      if (depth == k_) {
        found_.push_back(chosen_);
        return !collect_all_;
      }
    }
    if (depth == k_) return false;
    // Some later landmark must separate the first uncovered pair.
    if (missing != cover_.pair_count() && cover_.last_separator(missing) < next) return false;

    const std::size_t remaining = k_ - depth;
    const std::size_t n = cover_.order();
    std::uint64_t* out = level(depth + 1);
    for (std::size_t c = next; c + remaining <= n; ++c) {
      const std::uint64_t* sep = cover_.separated_by(c);
      for (std::size_t w = 0; w < cover_.words(); ++w) out[w] = acc[w] | sep[w];
      chosen_.push_back(static_cast<Vertex>(c));
      const bool stop = recurse(depth + 1, c + 1);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const PairCover& cover_;
  std::size_t k_;
  bool collect_all_;
  std::vector<std::uint64_t> acc_;
  std::vector<Vertex> chosen_;
  std::vector<std::vector<Vertex>> found_;
};

/// Searches all k-subsets; results are in lexicographic order regardless of
/// the worker count.
std::vector<std::vector<Vertex>> search_size(const PairCover& cover, std::size_t k,
                                             bool collect_all, unsigned jobs) {
  const std::size_t n = cover.order();
  if (k == 0 || k > n) return {};
  const std::size_t leads = n - k + 1;
  std::vector<std::vector<std::vector<Vertex>>> per_lead(leads);
  std::atomic<std::size_t> best_lead{leads};

  detail::parallel_for(leads, jobs, [&](std::size_t lead) {
    if (!collect_all && lead > best_lead.load()) return;
    SubsetSearch search(cover, k, collect_all);
    per_lead[lead] = search.run(static_cast<Vertex>(lead));
    if (!collect_all && !per_lead[lead].empty()) {
      std::size_t current = best_lead.load();
      while (lead < current && !best_lead.compare_exchange_weak(current, lead)) {
      }
    }
  });

  std::vector<std::vector<Vertex>> result;
  for (auto& found : per_lead) {
    for (auto& witness : found) {
      result.push_back(std::move(witness));
      if (!collect_all) return result;
    }
  }
  return result;
}

void require_finite_symmetric(const SignedDistanceMatrix& m) {
  for (Vertex u = 0; u < m.order(); ++u) {
    for (Vertex v = u + 1; v < m.order(); ++v) {
      const ExtendedDistance d = m.at(u, v);
      if (d.is_infinite() || d.value() < 0 || d != m.at(v, u)) {
        throw DomainError("doubly resolving sets need a connected undirected graph");
      }
    }
  }
}

bool doubly_resolves(const SignedDistanceMatrix& m, std::span<const Vertex> s) {
  std::unordered_set<std::vector<std::int32_t>, RawVectorHash> seen;
  std::vector<std::int32_t> key(s.size() - 1);
  for (Vertex v = 0; v < m.order(); ++v) {
    const std::int32_t base = m.at(s[0], v).value();
    for (std::size_t i = 1; i < s.size(); ++i) key[i - 1] = m.at(s[i], v).value() - base;
    if (!seen.insert(key).second) return false;
  }
  return true;
}

}  // namespace

ResolveCheck is_resolving(const SignedDistanceMatrix& m, const LandmarkSet& s) {
  s.validate(m.order());
  std::unordered_map<std::vector<std::int32_t>, Vertex, RawVectorHash> owner;
  owner.reserve(m.order());
  std::vector<std::int32_t> key(s.size());
  for (Vertex v = 0; v < m.order(); ++v) {
    for (std::size_t i = 0; i < s.size(); ++i) key[i] = m.at(s[i], v).raw();
    auto [it, inserted] = owner.emplace(key, v);
    if (!inserted) return {false, std::make_pair(it->second, v)};
  }
  return {true, std::nullopt};
}

MetricResult metric_dimension_exact(const SignedDistanceMatrix& m, const MetricOptions& options) {
  const std::size_t n = m.order();
  if (n == 0) throw ArgumentError("metric dimension of the empty graph is undefined");
  MetricResult result;
  if (n == 1) {
    if (options.enumerate_all) result.all_bases = std::vector<LandmarkSet>{LandmarkSet{}};
    return result;
  }

  const PairCover cover(m);
  const std::size_t max_k = std::min(options.max_k.value_or(n), n);
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto found = search_size(cover, k, options.enumerate_all, options.jobs);
    if (found.empty()) continue;
    result.beta = k;
    result.basis = LandmarkSet(found.front());
    if (options.enumerate_all) {
      std::vector<LandmarkSet> all;
      all.reserve(found.size());
      for (auto& witness : found) all.emplace_back(std::move(witness));
      result.all_bases = std::move(all);
    }
    return result;
  }
  throw BoundExceeded(max_k, metric_dimension_greedy(m).size());
}

LandmarkSet metric_dimension_greedy(const SignedDistanceMatrix& m) {
  const std::size_t n = m.order();
  if (n <= 1) return {};
  const PairCover cover(m);
  std::vector<std::uint64_t> covered(cover.words(), 0);
  std::vector<Vertex> chosen;
  while (cover.first_uncovered(covered.data()) != cover.pair_count()) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint64_t* sep = cover.separated_by(s);
      std::size_t gain = 0;
      for (std::size_t w = 0; w < cover.words(); ++w) {
        gain += static_cast<std::size_t>(std::popcount(sep[w] & ~covered[w]));
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    const std::uint64_t* sep = cover.separated_by(best);
    for (std::size_t w = 0; w < cover.words(); ++w) covered[w] |= sep[w];
    chosen.push_back(static_cast<Vertex>(best));
  }
  return LandmarkSet(std::move(chosen));
}

bool is_doubly_resolving(const SignedDistanceMatrix& m, const LandmarkSet& s) {
  s.validate(m.order());
  if (s.size() < 2) throw DomainError("doubly resolving needs at least two landmarks");
  require_finite_symmetric(m);
  return doubly_resolves(m, s.vertices());
}

DoubleResolveResult min_doubly_resolving(const SignedDistanceMatrix& m) {
  const std::size_t n = m.order();
  if (n < 2) throw DomainError("doubly resolving sets need at least two vertices");
  require_finite_symmetric(m);

  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Vertex> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<Vertex>(i);
    while (true) {
      if (doubly_resolves(m, subset)) return {k, LandmarkSet(subset)};
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  // The whole vertex set always doubly resolves; unreachable for valid input.
  throw DomainError("no doubly resolving set found");
}

}  // namespace gamedim
