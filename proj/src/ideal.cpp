#include "richfan/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>

#include "richfan/error.hpp"

namespace richfan {

namespace {

// Exponent trie answering "is some stored vector <= v componentwise". Each
// node keeps the componentwise minimum of the coordinates below it, which
// prunes most of the search.
class DivisorTrie {
 public:
  explicit DivisorTrie(std::size_t n) : n_(n) { root_.floor.assign(n, kNone); }

  void insert(const Vec& v) {
    Node* node = &root_;
    for (std::size_t d = 0; d < n_; ++d) {
      for (std::size_t k = d; k < n_; ++k) node->floor[k] = std::min(node->floor[k], v[k]);
      auto it = std::lower_bound(node->children.begin(), node->children.end(), v[d],
                                 [](const auto& child, Int key) { return child.first < key; });
      if (it == node->children.end() || it->first != v[d]) {
        it = node->children.emplace(it, v[d], std::make_unique<Node>());
        it->second->floor.assign(n_, kNone);
      }
      node = it->second.get();
    }
  }

  bool has_divisor_of(const Vec& v) const { return search(root_, v, 0); }

 private:
  static constexpr Int kNone = std::numeric_limits<Int>::max();

  struct Node {
    Vec floor;
    std::vector<std::pair<Int, std::unique_ptr<Node>>> children;  // sorted by key
  };

  bool search(const Node& node, const Vec& v, std::size_t d) const {
    if (d == n_) return true;
    for (std::size_t k = d; k < n_; ++k)
      if (node.floor[k] > v[k]) return false;
    for (const auto& [key, child] : node.children) {
      if (key > v[d]) break;
      if (search(*child, v, d + 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  Node root_;
};

}  // namespace

namespace {

constexpr std::size_t kMaxStaircaseWords = std::size_t{1} << 24;

std::vector<Vec> minimal_by_trie(std::vector<Vec> points, std::size_t n) {
  // A proper divisor has strictly smaller total degree, so visiting by degree
  // means every potential divisor is already indexed.
  std::vector<std::pair<Int, Vec>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) {
    const Int degree = std::accumulate(p.begin(), p.end(), Int{0});
    keyed.emplace_back(degree, std::move(p));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  DivisorTrie trie(n);
  std::vector<Vec> out;
  for (auto& [degree, p] : keyed) {
    if (trie.has_divisor_of(p)) continue;
    trie.insert(p);
    out.push_back(std::move(p));
  }
  return out;
}

// Staircase of the ideal inside the bounding box of the points, one bit per
// lattice point. Coordinate 0 runs along the bits of a row; every other
// coordinate indexes rows.
class Staircase {
 public:
  Staircase(const Vec& lo, const Vec& hi) : lo_(lo), n_(lo.size()) {
    words_per_row_ = static_cast<std::size_t>(hi[0] - lo[0]) / 64 + 1;
    stride_.assign(n_, 0);
    std::size_t rows = 1;
    for (std::size_t d = 1; d < n_; ++d) {
      stride_[d] = rows;
      extent_.push_back(static_cast<std::size_t>(hi[d] - lo[d]) + 1);
      rows *= extent_.back();
    }
    rows_ = rows;
    bits_.assign(rows_ * words_per_row_, 0);
  }

  static bool fits(const Vec& lo, const Vec& hi) {
    double words = static_cast<double>(hi[0] - lo[0]) / 64 + 1;
    for (std::size_t d = 1; d < lo.size(); ++d) words *= static_cast<double>(hi[d] - lo[d] + 1);
    return words <= static_cast<double>(kMaxStaircaseWords);
  }

  void mark(const Vec& p) {
    const std::size_t bit = static_cast<std::size_t>(p[0] - lo_[0]);
    bits_[row_of(p) * words_per_row_ + bit / 64] |= std::uint64_t{1} << (bit % 64);
  }

  // Close the marked set upwards along every axis.
  void close() {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t* w = &bits_[r * words_per_row_];
      bool seen = false;
      for (std::size_t k = 0; k < words_per_row_; ++k) {
        if (seen) {
          w[k] = ~std::uint64_t{0};
          continue;
        }
        std::uint64_t x = w[k];
        for (unsigned s = 1; s < 64; s <<= 1) x |= x << s;
        w[k] = x;
        seen = x != 0;
      }
    }
    for (std::size_t d = 1; d < n_; ++d) {
      const std::size_t step = stride_[d];
      const std::size_t extent = extent_[d - 1];
      for (std::size_t r = 0; r < rows_; ++r) {
        if ((r / step) % extent == 0) continue;
        const std::uint64_t* src = &bits_[(r - step) * words_per_row_];
        std::uint64_t* dst = &bits_[r * words_per_row_];
        for (std::size_t k = 0; k < words_per_row_; ++k) dst[k] |= src[k];
      }
    }
  }

  bool test(const Vec& p) const {
    const std::size_t bit = static_cast<std::size_t>(p[0] - lo_[0]);
    return (bits_[row_of(p) * words_per_row_ + bit / 64] >> (bit % 64)) & 1;
  }

 private:
  std::size_t row_of(const Vec& p) const {
    std::size_t r = 0;
    for (std::size_t d = 1; d < n_; ++d) r += static_cast<std::size_t>(p[d] - lo_[d]) * stride_[d];
    return r;
  }

  Vec lo_;
  std::size_t n_;
  std::size_t words_per_row_ = 1;
  std::size_t rows_ = 1;
  std::vector<std::size_t> stride_;
  std::vector<std::size_t> extent_;
  std::vector<std::uint64_t> bits_;
};

std::vector<Vec> minimal_by_staircase(std::vector<Vec> points, const Vec& lo, const Vec& hi) {
  Staircase s(lo, hi);
  for (const auto& p : points) s.mark(p);
  s.close();
  std::vector<Vec> out;
  for (auto& p : points) {
    bool minimal = true;
    for (std::size_t d = 0; d < p.size() && minimal; ++d) {
      if (p[d] == lo[d]) continue;
      --p[d];
      minimal = !s.test(p);
      ++p[d];
    }
    if (minimal) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Vec> minimal_elements(std::vector<Vec> points, std::size_t n) {
  if (n == 0) return points.empty() ? points : std::vector<Vec>{Vec{}};
  if (points.empty()) return points;
  Vec lo = points.front(), hi = points.front();
  for (const auto& p : points)
    for (std::size_t d = 0; d < n; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  std::vector<Vec> out = Staircase::fits(lo, hi) ? minimal_by_staircase(std::move(points), lo, hi)
                                                 : minimal_by_trie(std::move(points), n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t rank, std::vector<Vec> generators) : rank_(rank) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "monomial ideal needs a generator");
  for (const auto& g : generators) {
    if (g.size() != rank)
      throw Error(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " in rank " + std::to_string(rank));
    if (std::any_of(g.begin(), g.end(), [](Int x) { return x < 0; }))
      throw Error(ErrorCode::InvalidArgument, "negative exponent in " + to_string(g));
  }
  generators_ = minimal_elements(std::move(generators), rank);
}

MonomialIdeal MonomialIdeal::unit(std::size_t rank) { return MonomialIdeal(rank, {Vec(rank, 0)}); }

bool MonomialIdeal::is_unit() const { return generators_.size() == 1 && is_zero(generators_.front()); }

bool MonomialIdeal::contains(std::span<const Int> monomial) const {
  if (monomial.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "monomial has the wrong rank");
  return std::any_of(generators_.begin(), generators_.end(), [&](const Vec& g) {
    for (std::size_t i = 0; i < rank_; ++i)
      if (g[i] > monomial[i]) return false;
    return true;
  });
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "ideals of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  std::vector<Vec> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) sums.push_back(add(x, y));
  return MonomialIdeal(a.rank(), std::move(sums));
}

MonomialIdeal pullback_to_contraction(const MonomialIdeal& i, const std::vector<std::size_t>& coords) {
  std::vector<bool> dropped(i.rank(), false);
  for (std::size_t c : coords) {
    if (c >= i.rank())
      throw Error(ErrorCode::UnknownCoordinate,
                  "coordinate " + std::to_string(c) + " in rank " + std::to_string(i.rank()));
    dropped[c] = true;
  }
  const std::size_t kept = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), false));
  std::vector<Vec> gens;
  for (const auto& g : i.generators()) {
    Vec h;
    h.reserve(kept);
    for (std::size_t k = 0; k < i.rank(); ++k)
      if (!dropped[k]) h.push_back(g[k]);
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(kept, std::move(gens));
}

}  // namespace richfan
