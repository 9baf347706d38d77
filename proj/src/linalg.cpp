#include "lgb/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lgb::linalg {

namespace {

RatMatrix to_rational(std::span<const ExponentVec> rows, std::size_t n) {
  RatMatrix m(rows.size(), std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = rows[r][c];
  return m;
}

}  // namespace

std::size_t row_reduce(RatMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const mpq_class inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(std::span<const ExponentVec> rows, std::size_t n) {
  RatMatrix m = to_rational(rows, n);
  return row_reduce(m);
}

std::optional<std::vector<mpq_class>> solve(const RatMatrix& a, const std::vector<mpq_class>& b) {
  const std::size_t n = a.size();
  RatMatrix aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("solve: matrix is not square");
    std::copy(a[r].begin(), a[r].end(), aug[r].begin());
    aug[r][n] = b[r];
  }
  RatMatrix copy = aug;
  std::size_t rk = 0;
  // Rank of the coefficient part only.
  {
    RatMatrix coeff = a;
    rk = row_reduce(coeff);
  }
  if (rk < n) return std::nullopt;
  row_reduce(copy);
  std::vector<mpq_class> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = copy[r][n];
  return x;
}

std::vector<ExponentVec> nullspace(std::span<const ExponentVec> rows, std::size_t n) {
  RatMatrix m = to_rational(rows, n);
  const std::size_t rk = row_reduce(m);
  std::vector<std::size_t> pivot_col;
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (m[r][c] == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<ExponentVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<mpq_class> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < rk; ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::optional<ExponentVec> kernel_vector(std::span<const ExponentVec> rows, std::size_t n) {
  auto basis = nullspace(rows, n);
  if (basis.size() != 1) return std::nullopt;
  return basis.front();
}

ExponentVec primitive(const std::vector<mpq_class>& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    ints[k] = v[k].get_num() * (lcm / v[k].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  ExponentVec out(v.size());
  if (g == 0) return out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    mpz_class q = ints[k] / g;
    if (!q.fits_slong_p()) throw std::overflow_error("primitive vector entry exceeds 64 bits");
    out[k] = q.get_si();
  }
  return out;
}

ExponentVec primitive(const ExponentVec& v) {
  std::int64_t g = 0;
  for (auto x : v.coords()) g = std::gcd(g, x);
  if (g == 0) return v;
  ExponentVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] / g;
  return out;
}

std::vector<mpz_class> smith_diagonal(std::span<const ExponentVec> rows, std::size_t n) {
  std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = rows[r][c];
  const std::size_t R = m.size(), C = n;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Bring the smallest nonzero entry of the remaining block to (t, t),
    // then clear its row and column; repeat until it divides everything.
    for (;;) {
      std::size_t br = R, bc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c)
          if (m[r][c] != 0 && (br == R || abs(m[r][c]) < abs(m[br][bc]))) br = r, bc = c;
      if (br == R) return diag;
      std::swap(m[t], m[br]);
      for (auto& row : m) std::swap(row[t], row[bc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        mpz_class q = m[r][t] / m[t][t];
        if (q != 0)
          for (std::size_t c = t; c < C; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        mpz_class q = m[t][c] / m[t][t];
        if (q != 0)
          for (std::size_t r = t; r < R; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition: fold an offending row into row t.
      std::size_t bad = R;
      for (std::size_t r = t + 1; r < R && bad == R; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (m[r][c] % m[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == R) break;
      for (std::size_t c = t; c < C; ++c) m[t][c] += m[bad][c];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

mpz_class determinant(std::span<const ExponentVec> rows) {
  const std::size_t n = rows.size();
  RatMatrix m = to_rational(rows, n);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det.get_num();
}

bool in_span(std::span<const ExponentVec> rows, const ExponentVec& v) {
  const std::size_t n = v.size();
  std::vector<ExponentVec> extended(rows.begin(), rows.end());
  const std::size_t before = rank(extended, n);
  extended.push_back(v);
  return rank(extended, n) == before;
}

}  // namespace lgb::linalg
