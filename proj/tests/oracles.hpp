// Independent reference implementations used as test oracles. Nothing here
// calls into the library's algorithms; only plain containers and GMP.
#ifndef SRDEGEN_TESTS_ORACLES_HPP
#define SRDEGEN_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
/// Negative, zero or positive like a three-way comparison.
using Cmp = std::function<int(const Exps&, const Exps&)>;

inline int total(const Exps& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// Exponents are read through `perm`: perm[0] is the largest variable.
inline Exps permuted(const Exps& a, const std::vector<std::size_t>& perm) {
  Exps out;
  for (std::size_t v : perm) out.push_back(a[v]);
  return out;
}

inline int lex_cmp(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

/// Total degree first; ties go to the monomial with the smaller exponent in
/// the last variable where they differ.
inline int degrevlex_cmp(const Exps& a, const Exps& b) {
  if (total(a) != total(b)) return total(a) > total(b) ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline Cmp lex_order(std::vector<std::size_t> perm) {
  return [perm](const Exps& a, const Exps& b) { return lex_cmp(permuted(a, perm), permuted(b, perm)); };
}

inline Cmp degrevlex_order(std::vector<std::size_t> perm) {
  return [perm](const Exps& a, const Exps& b) { return degrevlex_cmp(permuted(a, perm), permuted(b, perm)); };
}

inline std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// ---------------------------------------------------------------- polynomials

struct Poly {
  std::map<Exps, mpq_class> terms;

  bool zero() const { return terms.empty(); }
  void add(const Exps& m, const mpq_class& c) {
    auto& slot = terms[m];
    slot += c;
    if (slot == 0) terms.erase(m);
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

inline Exps lead(const Poly& f, const Cmp& cmp) {
  const Exps* best = nullptr;
  for (const auto& [m, c] : f.terms) {
    if (!best || cmp(m, *best) > 0) best = &m;
  }
  return *best;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exps minus(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Exps plus(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Exps lcm(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline Poly shifted(const Poly& f, const Exps& m, const mpq_class& c) {
  Poly out;
  for (const auto& [e, a] : f.terms) out.terms[plus(e, m)] = a * c;
  return out;
}

inline Poly sub(Poly f, const Poly& g) {
  for (const auto& [m, c] : g.terms) f.add(m, -c);
  return f;
}

inline Poly monic(const Poly& f, const Cmp& cmp) {
  const mpq_class lc = f.terms.at(lead(f, cmp));
  Poly out;
  for (const auto& [m, c] : f.terms) out.terms[m] = c / lc;
  return out;
}

/// Full reduction: each term, largest first, is cancelled by any divisor.
inline Poly reduce(Poly f, const std::vector<Poly>& basis, const Cmp& cmp) {
  Poly rem;
  while (!f.zero()) {
    const Exps m = lead(f, cmp);
    const mpq_class c = f.terms.at(m);
    bool hit = false;
    for (const auto& g : basis) {
      const Exps lg = lead(g, cmp);
      if (!divides(lg, m)) continue;
      f = sub(f, shifted(g, minus(m, lg), c / g.terms.at(lg)));
      hit = true;
      break;
    }
    if (!hit) {
      rem.add(m, c);
      f.terms.erase(m);
    }
  }
  return rem;
}

/// Plain Buchberger without criteria, then minimalization and interreduction.
inline std::vector<Poly> reduced_groebner(std::vector<Poly> gens, const Cmp& cmp) {
  std::vector<Poly> g;
  for (auto& f : gens) {
    if (!f.zero()) g.push_back(monic(f, cmp));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exps li = lead(g[i], cmp), lj = lead(g[j], cmp), l = lcm(li, lj);
    Poly s = sub(shifted(g[i], minus(l, li), 1), shifted(g[j], minus(l, lj), 1));
    Poly r = reduce(s, g, cmp);
    if (r.zero()) continue;
    g.push_back(monic(r, cmp));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Exps lk = lead(g[k], cmp), li = lead(g[i], cmp);
      redundant = divides(lk, li) && (lk != li || k < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const Exps li = lead(minimal[i], cmp);
    Poly tail = minimal[i];
    tail.terms.erase(li);
    Poly r = reduce(tail, others, cmp);
    r.add(li, 1);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return cmp(lead(a, cmp), lead(b, cmp)) > 0; });
  return out;
}

// ----------------------------------------------------------- linear algebra

/// Rank over QQ by plain Gaussian elimination with rational pivots.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Rank over GF(p).
inline std::size_t rank_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = pow_mod(m[r][c], p - 2, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// --------------------------------------------------------- Hilbert function

inline void monomials_of_degree(std::size_t n, int d, Exps& cur, std::size_t i, std::vector<Exps>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[i] = e;
    monomials_of_degree(n, d - e, cur, i + 1, out);
  }
}

inline std::vector<Exps> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  monomials_of_degree(n, d, cur, 0, out);
  return out;
}

/// dim_K I_d for homogeneous generators (standard grading), by the rank of
/// all monomial multiples landing in degree d.
inline std::size_t ideal_dimension_in_degree(const std::vector<Poly>& gens, std::size_t n, int d) {
  const auto cols = monomials_of_degree(n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const int dg = total(g.terms.begin()->first);
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(n, d - dg)) {
      std::vector<mpq_class> row(cols.size());
      for (const auto& [e, c] : g.terms) row[index.at(plus(e, m))] = c;
      rows.push_back(std::move(row));
    }
  }
  return rank_q(std::move(rows));
}

/// Number of degree-d monomials divisible by some monomial generator.
inline std::size_t monomial_ideal_dimension_in_degree(const std::vector<Exps>& gens, std::size_t n, int d) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(n, d)) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); })) ++count;
  }
  return count;
}

// -------------------------------------------------------- simplicial complexes

using Mask = std::uint64_t;

/// Every subset of [n] contained in some facet.
inline std::set<Mask> all_faces(std::size_t n, const std::vector<Mask>& facets) {
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::any_of(facets.begin(), facets.end(), [&](Mask f) { return (s & f) == s; })) out.insert(s);
  }
  return out;
}

/// Subsets of [n] containing no generator support.
inline std::set<Mask> faces_avoiding(std::size_t n, const std::vector<Mask>& nonfaces) {
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::none_of(nonfaces.begin(), nonfaces.end(), [&](Mask g) { return (s & g) == g; })) out.insert(s);
  }
  return out;
}

inline std::vector<Mask> minimal_nonfaces(std::size_t n, const std::set<Mask>& faces) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (faces.count(s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v) {
      if ((s >> v & 1) && !faces.count(s & ~(Mask{1} << v))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Reduced simplicial homology dims H~_i, i = -1 .. top, via boundary maps
/// over QQ (p == 0) or GF(p). Chains are indexed independently of the library.
inline std::vector<std::int64_t> reduced_homology(const std::set<Mask>& faces, std::int64_t p) {
  int top = -1;
  for (Mask f : faces) top = std::max(top, popcount(f) - 1);
  std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));
  for (Mask f : faces) by_dim[static_cast<std::size_t>(popcount(f))].push_back(f);
  // boundary rank from dimension k (index k+1) to k-1 (index k)
  auto boundary_rank = [&](std::size_t hi) -> std::size_t {
    if (hi == 0 || hi >= by_dim.size()) return 0;
    const auto& rows = by_dim[hi];
    const auto& cols = by_dim[hi - 1];
    std::map<Mask, std::size_t> col_index;
    for (std::size_t k = 0; k < cols.size(); ++k) col_index[cols[k]] = k;
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int position = 0;
      for (std::size_t v = 0; v < 64; ++v) {
        if (!(rows[r] >> v & 1)) continue;
        m[r][col_index.at(rows[r] & ~(Mask{1} << v))] = position % 2 == 0 ? 1 : -1;
        ++position;
      }
    }
    if (p != 0) return rank_p(std::move(m), p);
    std::vector<std::vector<mpq_class>> q(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (auto x : m[r]) q[r].emplace_back(static_cast<long>(x));
    }
    return rank_q(std::move(q));
  };
  std::vector<std::int64_t> out;
  for (std::size_t idx = 0; idx < by_dim.size(); ++idx) {
    const auto chains = static_cast<std::int64_t>(by_dim[idx].size());
    out.push_back(chains - static_cast<std::int64_t>(boundary_rank(idx)) -
                  static_cast<std::int64_t>(boundary_rank(idx + 1)));
  }
  return out;
}

inline std::set<Mask> link_faces(const std::set<Mask>& faces, Mask f) {
  std::set<Mask> out;
  for (Mask g : faces) {
    if ((g & f) == 0 && faces.count(g | f)) out.insert(g);
  }
  return out;
}

/// Reisner: H~_i(link F) = 0 for i < dim link, for every face F.
inline bool cohen_macaulay(const std::set<Mask>& faces, std::int64_t p) {
  for (Mask f : faces) {
    const auto lk = link_faces(faces, f);
    const auto h = reduced_homology(lk, p);
    for (std::size_t idx = 0; idx + 1 < h.size(); ++idx) {
      if (h[idx] != 0) return false;
    }
  }
  return true;
}

/// Connected components of the 1-skeleton by union-find.
inline std::size_t components(std::size_t n, const std::set<Mask>& faces) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t vertices = 0;
  for (Mask f : faces) {
    if (popcount(f) == 1) ++vertices;
    if (popcount(f) != 2) continue;
    const auto a = static_cast<std::size_t>(__builtin_ctzll(f));
    const auto b = static_cast<std::size_t>(63 - __builtin_clzll(f));
    parent[find(a)] = find(b);
  }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v) {
    if (faces.count(Mask{1} << v)) roots.insert(find(v));
  }
  return roots.size();
}

inline std::vector<Mask> random_facets(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_int_distribution<Mask> subset(1, (Mask{1} << n) - 1);
  std::vector<Mask> out(count(rng));
  for (auto& f : out) f = subset(rng);
  return out;
}

// ------------------------------------------------------------- point counts

/// Cubic given by (coefficient, exponents) pairs with integer coefficients.
struct IntTerm {
  std::int64_t c;
  int a, b, d;
};

inline std::int64_t eval_mod(const std::vector<IntTerm>& f, std::int64_t x, std::int64_t y, std::int64_t z,
                             std::int64_t p) {
  std::int64_t s = 0;
  for (const auto& t : f) {
    std::int64_t v = ((t.c % p) + p) % p;
    v = v * pow_mod(x, t.a, p) % p * pow_mod(y, t.b, p) % p * pow_mod(z, t.d, p) % p;
    s = (s + v) % p;
  }
  return s;
}

/// #{[x:y:z] in P^2(F_p) : f = 0}, counted on the affine cone.
inline std::int64_t projective_points(const std::vector<IntTerm>& f, std::int64_t p) {
  std::int64_t affine = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        if ((x | y | z) != 0 && eval_mod(f, x, y, z, p) == 0) ++affine;
      }
    }
  }
  return affine / (p - 1);
}

}  // namespace oracle

#endif
