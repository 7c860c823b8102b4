#include "srdegen/ring.hpp"

#include "srdegen/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace srdegen {

namespace {

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

void check_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v]) throw std::invalid_argument("order: not a permutation of the variables");
    seen[v] = true;
  }
}

void check_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("order: empty weight matrix");
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw std::invalid_argument("order: ragged weight matrix");
  }
}

__int128 dot(const std::vector<std::int64_t>& row, std::span<const std::uint32_t> e) {
  __int128 s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += static_cast<__int128>(row[i]) * e[i];
  return s;
}

}  // namespace

RingPtr RingContext::create(std::vector<std::string> names, Field field,
                            std::vector<std::uint32_t> grading) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> unique;
  for (const auto& name : names) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
    if (!unique.insert(name).second) throw std::invalid_argument("duplicate variable '" + name + "'");
  }
  if (grading.empty()) grading.assign(names.size(), 1);
  if (grading.size() != names.size()) throw std::invalid_argument("grading length differs from variable count");
  for (auto g : grading) {
    if (g == 0) throw std::invalid_argument("grading entries must be positive");
  }
  return RingPtr(new RingContext(std::move(names), field, std::move(grading)));
}

RingPtr RingContext::standard(std::size_t n, Field field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return create(std::move(names), field);
}

bool RingContext::has_standard_grading() const {
  return std::all_of(grading_.begin(), grading_.end(), [](auto g) { return g == 1; });
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr RingContext::with_field(Field field) const {
  return RingPtr(new RingContext(names_, field, grading_));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------

Monomial Monomial::variable(std::size_t n, std::size_t index, std::uint32_t power) {
  Monomial m(n);
  m.exponents_.at(index) = power;
  return m;
}

Monomial Monomial::from_mask(std::size_t n, std::uint64_t mask) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) m.exponents_[i] = 1;
  }
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::uint64_t Monomial::degree(std::span<const std::uint32_t> grading) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) d += std::uint64_t{exponents_[i]} * grading[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size() && i < 64; ++i) {
    if (exponents_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw std::invalid_argument("monomials from different rings");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const std::uint64_t e = std::uint64_t{exponents_[i]} + other.exponents_[i];
    if (e > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent overflow");
    out.exponents_[i] = static_cast<std::uint32_t>(e);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (divisor.exponents_[i] > exponents_[i]) throw std::invalid_argument("monomial quotient: not divisible");
    out.exponents_[i] = exponents_[i] - divisor.exponents_[i];
  }
  return out;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::lex(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return lex(std::move(perm));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return degrevlex(std::move(perm));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> descending) {
  check_permutation(descending);
  const std::size_t n = descending.size();
  return MonomialOrder(std::make_shared<const Data>(Data{Kind::lex, n, std::move(descending), {}}));
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> descending) {
  check_permutation(descending);
  const std::size_t n = descending.size();
  return MonomialOrder(std::make_shared<const Data>(Data{Kind::degrevlex, n, std::move(descending), {}}));
}

MonomialOrder MonomialOrder::weighted(std::vector<std::vector<std::int64_t>> rows) {
  check_rows(rows);
  for (auto w : rows.front()) {
    if (w <= 0) throw std::invalid_argument("weighted order: first weight row must be positive");
  }
  const std::size_t n = rows.front().size();
  return MonomialOrder(std::make_shared<const Data>(Data{Kind::weighted, n, {}, std::move(rows)}));
}

MonomialOrder MonomialOrder::matrix(std::vector<std::vector<std::int64_t>> rows) {
  check_rows(rows);
  const std::size_t n = rows.front().size();
  for (std::size_t col = 0; col < n; ++col) {
    std::int64_t first = 0;
    for (const auto& row : rows) {
      if (row[col] != 0) {
        first = row[col];
        break;
      }
    }
    if (first <= 0) {
      throw std::invalid_argument("matrix order is not global: variable " + std::to_string(col + 1) +
                                  " does not exceed 1");
    }
  }
  linalg::Matrix<mpz_class> m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  if (linalg::rank(std::move(m)) != n) {
    throw std::invalid_argument("matrix order: weight matrix must have full column rank");
  }
  return MonomialOrder(std::make_shared<const Data>(Data{Kind::matrix, n, {}, std::move(rows)}));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const Data& d = *data_;
  if (a.size() != d.num_vars || b.size() != d.num_vars) {
    throw std::invalid_argument("monomial length does not match the order");
  }
  switch (d.kind) {
    case Kind::lex:
      for (std::size_t v : d.permutation) {
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      return std::strong_ordering::equal;
    case Kind::degrevlex: {
      const auto da = a.total_degree();
      const auto db = b.total_degree();
      if (da != db) return da <=> db;
      for (auto it = d.permutation.rbegin(); it != d.permutation.rend(); ++it) {
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
      }
      return std::strong_ordering::equal;
    }
    case Kind::weighted: {
      for (const auto& row : d.rows) {
        const auto wa = dot(row, a.exponents());
        const auto wb = dot(row, b.exponents());
        if (wa != wb) return wa <=> wb;
      }
      for (std::size_t v = d.num_vars; v-- > 0;) {
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
      return std::strong_ordering::equal;
    }
    case Kind::matrix:
      for (const auto& row : d.rows) {
        const auto wa = dot(row, a.exponents());
        const auto wb = dot(row, b.exponents());
        if (wa != wb) return wa <=> wb;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> MonomialOrder::variables_descending() const {
  if (!data_->permutation.empty()) return data_->permutation;
  const std::size_t n = data_->num_vars;
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  std::sort(vars.begin(), vars.end(), [&](std::size_t i, std::size_t j) {
    return greater(Monomial::variable(n, i), Monomial::variable(n, j));
  });
  return vars;
}

std::string MonomialOrder::describe(std::span<const std::string> names) const {
  const Data& d = *data_;
  std::string out;
  switch (d.kind) {
    case Kind::lex:
    case Kind::degrevlex:
      out = d.kind == Kind::lex ? "lex " : "degrevlex ";
      for (std::size_t i = 0; i < d.permutation.size(); ++i) {
        if (i) out += '>';
        out += names[d.permutation[i]];
      }
      return out;
    case Kind::weighted:
    case Kind::matrix:
      out = d.kind == Kind::weighted ? "weighted " : "matrix ";
      for (std::size_t r = 0; r < d.rows.size(); ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < d.rows[r].size(); ++c) {
          if (c) out += ',';
          out += std::to_string(d.rows[r][c]);
        }
      }
      return out;
  }
  return out;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->num_vars == b.data_->num_vars &&
         a.data_->permutation == b.data_->permutation && a.data_->rows == b.data_->rows;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compare_monomials: context mismatch");
  return order.compare(a, b);
}

}  // namespace srdegen
