#pragma once
// Matrix-based reference models shared by the unit tests. Nothing here calls
// into the library beyond building elements and vectors from plain data.

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "hypermat/hmatroid.hpp"

namespace oracle {

using hypermat::HElement;
using hypermat::HVector;
using hypermat::Hyperfield;
using hypermat::Mask;

// Polynomials in t with integer coefficients; t is read as a large
// positive number, so the sign and degree of the top term are the
// sign and grade.
struct Poly {
  std::map<int, long> c;  // exponent -> nonzero coefficient

  Poly() = default;
  Poly(long k) {
    if (k != 0) c[0] = k;
  }
  static Poly mono(long k, int e) {
    Poly p;
    if (k != 0) p.c[e] = k;
    return p;
  }
  bool zero() const { return c.empty(); }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (auto [e, k] : o.c) {
      if ((r.c[e] += k) == 0) r.c.erase(e);
    }
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, k] : r.c) k = -k;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (auto [e1, k1] : c) {
      for (auto [e2, k2] : o.c) r = r + mono(k1 * k2, e1 + e2);
    }
    return r;
  }
};

// Element of Stringent(Sign,1), Tropical(1) or Sign for the top term.
inline HElement lead(const Hyperfield& h, const Poly& p) {
  if (p.zero()) return h.zero();
  const auto [deg, coef] = *p.c.rbegin();
  const std::int64_t s = coef > 0 ? 1 : -1;
  if (h.rank() == 0) return h.make(s);
  return h.make(h.residue_kind() == hypermat::ResidueKind::krasner ? 1 : s,
                hypermat::Grade{deg});
}

template <class T>
using Matrix = std::vector<std::vector<T>>;  // rows

template <class T>
T det2(const Matrix<T>& a, std::size_t i, std::size_t j) {
  return a[0][i] * a[1][j] - a[0][j] * a[1][i];
}

inline std::vector<Mask> minimal_supports(const std::vector<Mask>& supports) {
  std::vector<Mask> out;
  for (Mask s : supports) {
    if (s == 0) continue;
    bool minimal = true;
    for (Mask t : supports) {
      if (t != 0 && t != s && (t & s) == t) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Keeps the vectors of minimal nonempty support.
inline std::vector<HVector> keep_minimal(const std::vector<HVector>& vs) {
  std::vector<Mask> sup;
  for (const auto& v : vs) sup.push_back(v.support());
  const auto mins = minimal_supports(sup);
  std::vector<HVector> out;
  for (const auto& v : vs) {
    if (std::find(mins.begin(), mins.end(), v.support()) != mins.end()) out.push_back(v);
  }
  return out;
}

// Circuits of the column matroid of a rank-2 matrix by Cramer's rule on
// every triple (pairs and singles appear when minors vanish).
template <class T, class Map>
std::vector<HVector> rank2_circuits(const Matrix<T>& a, Map&& to_h) {
  const std::size_t n = a[0].size();
  std::vector<HVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        HVector v = hypermat::zero_vector(n);
        v[i] = to_h(det2(a, j, k));
        v[j] = to_h(-det2(a, i, k));
        v[k] = to_h(det2(a, i, j));
        if (!v.is_zero()) out.push_back(v);
      }
    }
  }
  return keep_minimal(out);
}

// Cocircuits: for each h the row-space vector y_i = det(a_h, a_i).
template <class T, class Map>
std::vector<HVector> rank2_cocircuits(const Matrix<T>& a, Map&& to_h) {
  const std::size_t n = a[0].size();
  std::vector<HVector> out;
  for (std::size_t h = 0; h < n; ++h) {
    HVector v = hypermat::zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = to_h(det2(a, h, i));
    if (!v.is_zero()) out.push_back(v);
  }
  return keep_minimal(out);
}

// Brute-force subspaces over GF(p).
struct ModP {
  std::uint32_t p;
  Matrix<long> a;  // r x n

  std::size_t n() const { return a[0].size(); }

  std::vector<std::vector<long>> all_vectors(std::size_t len) const {
    std::vector<std::vector<long>> out;
    std::vector<long> v(len, 0);
    for (;;) {
      out.push_back(v);
      std::size_t i = 0;
      while (i < len && ++v[i] == static_cast<long>(p)) v[i++] = 0;
      if (i == len) break;
    }
    return out;
  }
  std::vector<std::vector<long>> kernel() const {
    std::vector<std::vector<long>> out;
    for (const auto& x : all_vectors(n())) {
      bool in = true;
      for (const auto& row : a) {
        long s = 0;
        for (std::size_t i = 0; i < n(); ++i) s += row[i] * x[i];
        in = in && s % static_cast<long>(p) == 0;
      }
      if (in) out.push_back(x);
    }
    return out;
  }
  std::vector<std::vector<long>> row_space() const {
    std::set<std::vector<long>> out;
    for (const auto& y : all_vectors(a.size())) {
      std::vector<long> v(n(), 0);
      for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t i = 0; i < n(); ++i) v[i] = (v[i] + y[r] * a[r][i]) % p;
      }
      out.insert(v);
    }
    return {out.begin(), out.end()};
  }
  HVector to_h(const Hyperfield& h, const std::vector<long>& v) const {
    HVector out = hypermat::zero_vector(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] % static_cast<long>(p) != 0) out[i] = h.make(v[i]);
    }
    return out;
  }
  std::vector<HVector> to_h(const Hyperfield& h, const std::vector<std::vector<long>>& vs) const {
    std::vector<HVector> out;
    for (const auto& v : vs) out.push_back(to_h(h, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// Sign vectors of the real span of u and w (integer vectors).
inline std::vector<HVector> sign_span(const std::vector<long>& u, const std::vector<long>& w) {
  const auto s = Hyperfield::sign();
  const std::size_t n = u.size();
  std::vector<std::pair<long, long>> dirs{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<std::pair<long, long>> crit;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0 && w[i] == 0) continue;
    crit.push_back({w[i], -u[i]});
    crit.push_back({-w[i], u[i]});
  }
  auto angle = [](std::pair<long, long> d) {
    return std::atan2(static_cast<double>(d.second), static_cast<double>(d.first));
  };
  std::sort(crit.begin(), crit.end(), [&](auto x, auto y) { return angle(x) < angle(y); });
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const auto x = crit[i];
    const auto y = crit[(i + 1) % crit.size()];
    dirs.push_back(x);
    // Scale to a common length proxy so the sum lies strictly between.
    const long lx = std::abs(x.first) + std::abs(x.second);
    const long ly = std::abs(y.first) + std::abs(y.second);
    dirs.push_back({x.first * ly + y.first * lx, x.second * ly + y.second * lx});
  }
  std::set<HVector> out{hypermat::zero_vector(n)};
  for (auto [a, b] : dirs) {
    HVector v = hypermat::zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long x = a * u[i] + b * w[i];
      if (x != 0) v[i] = s.make(x > 0 ? 1 : -1);
    }
    out.insert(v);
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
