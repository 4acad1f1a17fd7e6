#include "richfan/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "richfan/error.hpp"

namespace richfan {

namespace {

[[noreturn]] void overflow() {
  throw Error(ErrorCode::ArithmeticOverflow, "64-bit integer overflow in exact arithmetic");
}

Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<Int>(v);
}

void require_same_size(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) overflow();
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  return narrow(acc);
}

Vec add(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Vec sub(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

Vec scale(Int k, std::span<const Int> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(k, a[i]);
  return out;
}

Vec combine(Int k1, std::span<const Int> a, Int k2, std::span<const Int> b) {
  require_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = narrow(static_cast<__int128>(k1) * a[i] + static_cast<__int128>(k2) * b[i]);
  return out;
}

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

Vec primitive(std::span<const Int> v) {
  Vec out(v.begin(), v.end());
  Int g = content(v);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

bool same_ray(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) return false;
  if (is_zero(a) || is_zero(b)) return false;
  // a and b are positively proportional iff their primitive forms agree.
  return primitive(a) == primitive(b);
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<Int> divisors(Int r) {
  if (r <= 0) throw Error(ErrorCode::InvalidArgument, "divisors of non-positive integer");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= r; ++d) {
    if (r % d != 0) continue;
    small.push_back(d);
    if (d != r / d) large.push_back(r / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Level Level::finite(Int r) {
  if (r < 1 || r > kMaxFinite)
    throw Error(ErrorCode::InvalidArgument,
                "r must lie in [1, " + std::to_string(kMaxFinite) + "], got " + std::to_string(r));
  Level l;
  l.value_ = r;
  return l;
}

Level Level::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinite();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse r from '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorCode::InvalidArgument, "cannot parse r from '" + text + "'");
  return finite(v);
}

Int Level::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "r is infinite where a finite value is required");
  return *value_;
}

bool Level::divisible_by(Int k) const {
  if (k < 1) return false;
  return !value_ || *value_ % k == 0;
}

std::string Level::str() const { return value_ ? std::to_string(*value_) : "inf"; }

// --- lattice utilities -----------------------------------------------------

std::vector<Vec> integer_kernel(const std::vector<Vec>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  // Column operations on the m x n matrix, mirrored on U (n x n, unimodular).
  std::vector<Vec> cols(n, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorCode::DimensionMismatch, "kernel row has wrong length");
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rows[i][j];
  }
  std::vector<Vec> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = unit_vector(n, j);

  std::size_t k = 0;
  for (std::size_t i = 0; i < m && k < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j)
        if (cols[j][i] != 0 && (best == n || std::llabs(cols[j][i]) < std::llabs(cols[best][i])))
          best = j;
      if (best == n) break;
      std::swap(cols[k], cols[best]);
      std::swap(u[k], u[best]);
      bool done = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (cols[j][i] == 0) continue;
        const Int q = cols[j][i] / cols[k][i];
        cols[j] = combine(1, cols[j], -q, cols[k]);
        u[j] = combine(1, u[j], -q, u[k]);
        if (cols[j][i] != 0) done = false;
      }
      if (done) {
        ++k;
        break;
      }
    }
  }
  std::vector<Vec> kernel(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
  return hermite_normal_form(std::move(kernel), n);
}

std::vector<Vec> hermite_normal_form(std::vector<Vec> rows, std::size_t n) {
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < n && pivot < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot], rows[best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Int q = rows[r][col] / rows[pivot][col];
        rows[r] = combine(1, rows[r], -q, rows[pivot]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (pivot < rows.size() && rows[pivot][col] != 0) {
      if (rows[pivot][col] < 0) rows[pivot] = scale(-1, rows[pivot]);
      const Int p = rows[pivot][col];
      for (std::size_t r = 0; r < pivot; ++r) {
        Int q = rows[r][col] / p;
        if (rows[r][col] - q * p < 0) --q;
        if (q != 0) rows[r] = combine(1, rows[r], -q, rows[pivot]);
      }
      ++pivot;
    }
  }
  rows.resize(pivot);
  return rows;
}

std::vector<Vec> saturated_span(const std::vector<Vec>& rows, std::size_t n) {
  return integer_kernel(integer_kernel(rows, n), n);
}

std::size_t rank(const std::vector<Vec>& rows, std::size_t n) {
  return n - integer_kernel(rows, n).size();
}

Int determinant(std::vector<Vec> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  // Bareiss fraction-free elimination; every intermediate is a minor.
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = narrow(num / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

Int maximal_minor_gcd(const std::vector<Vec>& rows, std::size_t n) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k > n) return 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  Int g = 0;
  while (true) {
    std::vector<Vec> minor(k, Vec(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor[r][c] = rows[r][pick[c]];
    g = std::gcd(g, determinant(std::move(minor)));
    if (g == 1) return 1;
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

Vec project_out(std::span<const Int> v, const std::vector<Vec>& basis) {
  std::vector<Vec> ortho;
  for (const auto& b : basis) {
    Vec w = b;
    for (const auto& o : ortho) w = primitive(combine(dot(o, o), w, -dot(w, o), o));
    if (!is_zero(w)) ortho.push_back(primitive(w));
  }
  Vec x(v.begin(), v.end());
  for (const auto& o : ortho) x = primitive(combine(dot(o, o), x, -dot(x, o), o));
  return primitive(x);
}

}  // namespace richfan
