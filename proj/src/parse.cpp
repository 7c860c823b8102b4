#include "srdegen/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace srdegen {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t'; }

// A piece of source text together with the column of its first character.
struct Slice {
  std::string_view text;
  std::size_t column;
};

Slice trim(Slice s) {
  std::size_t b = 0;
  while (b < s.text.size() && is_space(s.text[b])) ++b;
  std::size_t e = s.text.size();
  while (e > b && is_space(s.text[e - 1])) --e;
  return {s.text.substr(b, e - b), s.column + b};
}

std::vector<Slice> split(Slice s, char sep) {
  std::vector<Slice> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i == s.text.size() || s.text[i] == sep) {
      out.push_back(trim({s.text.substr(start, i - start), s.column + start}));
      start = i + 1;
    }
  }
  return out;
}

template <class T>
T parse_integer(Slice s, const char* what) {
  T value{};
  const char* begin = s.text.data();
  const char* end = begin + s.text.size();
  if (!s.text.empty() && s.text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (s.text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(1, s.column, std::string("expected ") + what + ", got '" + std::string(s.text) + "'");
  }
  return value;
}

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring, const MonomialOrder& order)
      : text_(text), ring_(ring), order_(order), field_(ring->field()) {}

  Polynomial parse() {
    skip();
    if (at_end()) fail(pos_, "empty polynomial");
    Polynomial p = expression();
    skip();
    if (!at_end()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const { throw ParseError(1, at + 1, message); }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(const mpz_class& value) const {
    return Polynomial::constant(ring_, order_, Scalar::from_mpz(field_, value));
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        const Polynomial divisor = unary();
        if (!divisor.is_constant()) fail(at, "division is only allowed by constants");
        if (divisor.is_zero()) fail(at, "division by zero");
        acc = acc.scaled(divisor.leading_coefficient().inverse());
      } else {
        skip();
        if (!at_end() && (is_ident_start(text_[pos_]) || std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                          text_[pos_] == '(')) {
          fail(pos_, "expected an operator (multiplication must be written as '*')");
        }
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(start, "expected a nonnegative integer exponent");
    std::uint32_t e = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, e);
    if (ec != std::errc() || e > 10000) fail(start, "exponent out of range");
    (void)ptr;
    if (accept('^')) fail(pos_ - 1, "chained exponents need parentheses");
    Polynomial result = constant(1);
    for (std::uint32_t k = 0; k < e; ++k) result = result * base;
    return result;
  }

  Polynomial atom() {
    skip();
    if (at_end()) fail(pos_, "unexpected end of polynomial");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_->index_of(name);
      if (!index) fail(start, "unknown variable '" + std::string(name) + "'");
      return Polynomial::monomial(ring_, order_, Monomial::variable(ring_->num_vars(), *index), Scalar::one(field_));
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  const MonomialOrder& order_;
  Field field_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<std::int64_t>> parse_rows(Slice s) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const Slice& row : split(s, ';')) {
    std::vector<std::int64_t> entries;
    for (const Slice& entry : split(row, ',')) entries.push_back(parse_integer<std::int64_t>(entry, "an integer"));
    rows.push_back(std::move(entries));
  }
  return rows;
}

// Rethrows a ParseError from a sub-parser at its position within the job file.
[[noreturn]] void relocate(const ParseError& e, std::size_t line, std::size_t column) {
  throw ParseError(line, column + e.column() - 1, e.message());
}

struct Line {
  std::size_t number;
  std::size_t column;
  std::string keyword;
  Slice value;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const MonomialOrder& order) {
  return PolynomialParser(text, ring, order).parse();
}

MonomialOrder parse_order(std::string_view text, const RingContext& ring) {
  const Slice all = trim({text, 1});
  std::size_t k = 0;
  while (k < all.text.size() && is_ident_char(all.text[k])) ++k;
  const std::string kind(all.text.substr(0, k));
  const Slice rest = trim({all.text.substr(k), all.column + k});
  const std::size_t n = ring.num_vars();
  if (kind == "lex" || kind == "degrevlex") {
    std::vector<std::size_t> perm;
    if (rest.text.empty()) {
      for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
    } else {
      std::vector<bool> used(n, false);
      for (const Slice& name : split(rest, '>')) {
        const auto index = ring.index_of(name.text);
        if (!index) throw ParseError(1, name.column, "unknown variable '" + std::string(name.text) + "' in order");
        if (used[*index]) throw ParseError(1, name.column, "variable '" + std::string(name.text) + "' listed twice");
        used[*index] = true;
        perm.push_back(*index);
      }
      if (perm.size() != n) {
        throw ParseError(1, rest.column, "order lists " + std::to_string(perm.size()) + " of " + std::to_string(n) +
                                             " variables");
      }
    }
    return kind == "lex" ? MonomialOrder::lex(std::move(perm)) : MonomialOrder::degrevlex(std::move(perm));
  }
  if (kind == "weighted" || kind == "matrix") {
    auto rows = parse_rows(rest);
    for (const auto& row : rows) {
      if (row.size() != n) throw ParseError(1, rest.column, "order rows need " + std::to_string(n) + " entries");
    }
    try {
      return kind == "weighted" ? MonomialOrder::weighted(std::move(rows)) : MonomialOrder::matrix(std::move(rows));
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, rest.column, e.what());
    }
  }
  throw ParseError(1, all.column, "unknown order '" + kind + "' (expected lex, degrevlex, weighted or matrix)");
}

SimplicialComplex parse_facets(std::string_view text, std::optional<std::size_t> vertices) {
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::size_t> columns;
  std::size_t largest = 0;
  for (const Slice& facet : split({text, 1}, ';')) {
    if (facet.text.empty()) throw ParseError(1, facet.column, "empty facet");
    std::vector<std::size_t> ids;
    std::size_t i = 0;
    while (i < facet.text.size()) {
      while (i < facet.text.size() && is_space(facet.text[i])) ++i;
      const std::size_t start = i;
      while (i < facet.text.size() && !is_space(facet.text[i])) ++i;
      const Slice token{facet.text.substr(start, i - start), facet.column + start};
      const auto id = parse_integer<std::size_t>(token, "a vertex id");
      if (id == 0) throw ParseError(1, token.column, "vertex ids start at 1");
      if (vertices && id > *vertices) {
        throw ParseError(1, token.column, "vertex " + std::to_string(id) + " exceeds the vertex count " +
                                              std::to_string(*vertices));
      }
      largest = std::max(largest, id);
      ids.push_back(id - 1);
    }
    facets.push_back(std::move(ids));
    columns.push_back(facet.column);
  }
  try {
    return SimplicialComplex::from_facets(vertices.value_or(largest), facets);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
}

MonomialOrder JobSpec::effective_order() const {
  if (order) return *order;
  if (!ring) throw std::invalid_argument("job has no ring");
  return MonomialOrder::degrevlex(ring->num_vars());
}

std::string to_string(OrderFamily family) {
  switch (family) {
    case OrderFamily::lex: return "lex";
    case OrderFamily::degrevlex: return "degrevlex";
    case OrderFamily::both: return "both";
  }
  return "both";
}

OrderFamily parse_family(std::string_view text) {
  if (text == "lex") return OrderFamily::lex;
  if (text == "degrevlex") return OrderFamily::degrevlex;
  if (text == "both") return OrderFamily::both;
  throw std::invalid_argument("unknown order family '" + std::string(text) + "' (expected lex, degrevlex or both)");
}

JobSpec parse_job(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const Slice line = trim({raw, 1});
    start = end + 1;
    if (line.text.empty()) continue;
    std::size_t k = 0;
    while (k < line.text.size() && is_ident_char(line.text[k])) ++k;
    if (k == 0) throw ParseError(number, line.column, "expected a keyword");
    std::string keyword(line.text.substr(0, k));
    Slice value = trim({line.text.substr(k), line.column + k});
    if (!value.text.empty() && value.text.front() == ':') value = trim({value.text.substr(1), value.column + 1});
    lines.push_back(Line{number, line.column, std::move(keyword), value});
  }

  static const std::vector<std::string> repeatable{"ideal"};
  static const std::vector<std::string> known{"ring", "grading", "order",  "ideal",  "facets", "vertices", "pool",
                                              "budget", "seed",  "family", "prime", "workers", "format"};
  std::vector<const Line*> by_key[13];
  for (const auto& l : lines) {
    const auto it = std::find(known.begin(), known.end(), l.keyword);
    if (it == known.end()) throw ParseError(l.number, l.column, "unknown keyword '" + l.keyword + "'");
    auto& slot = by_key[it - known.begin()];
    if (!slot.empty() && std::find(repeatable.begin(), repeatable.end(), l.keyword) == repeatable.end()) {
      throw ParseError(l.number, l.column, "duplicate '" + l.keyword + "' line");
    }
    slot.push_back(&l);
  }
  auto single = [&](const char* key) -> const Line* {
    const auto idx = std::find(known.begin(), known.end(), key) - known.begin();
    return by_key[idx].empty() ? nullptr : by_key[idx].front();
  };
  auto all = [&](const char* key) -> const std::vector<const Line*>& {
    return by_key[std::find(known.begin(), known.end(), key) - known.begin()];
  };
  auto guard = [](const Line& l, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      relocate(e, l.number, l.value.column);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, l.value.column, e.what());
    }
  };

  JobSpec job;

  std::optional<std::size_t> vertices;
  if (const Line* l = single("vertices")) {
    vertices = guard(*l, [&] { return parse_integer<std::size_t>({l->value.text, 1}, "a vertex count"); });
  }
  if (const Line* l = single("facets")) {
    job.complex = guard(*l, [&] { return parse_facets(l->value.text, vertices); });
  } else if (vertices) {
    throw ParseError(single("vertices")->number, 1, "'vertices' needs a 'facets' line");
  }

  std::vector<std::uint32_t> grading;
  if (const Line* l = single("grading")) {
    for (const Slice& w : split(l->value, ',')) {
      grading.push_back(guard(*l, [&] { return parse_integer<std::uint32_t>({w.text, w.column - l->value.column + 1}, "a weight"); }));
    }
  }
  if (const Line* l = single("ring")) {
    const Slice v = l->value;
    std::size_t k = 0;
    while (k < v.text.size() && !is_space(v.text[k])) ++k;
    const std::string_view field_text = v.text.substr(0, k);
    const Field field = guard(*l, [&] { return Field::parse(field_text); });
    const Slice names_slice = trim({v.text.substr(k), v.column + k});
    if (names_slice.text.empty()) throw ParseError(l->number, names_slice.column, "ring needs variable names");
    std::vector<std::string> names;
    for (const Slice& name : split(names_slice, ',')) {
      if (name.text.empty() || !is_ident_start(name.text.front()) ||
          !std::all_of(name.text.begin(), name.text.end(), is_ident_char)) {
        throw ParseError(l->number, name.column, "invalid variable name '" + std::string(name.text) + "'");
      }
      names.emplace_back(name.text);
    }
    if (!grading.empty() && grading.size() != names.size()) {
      throw ParseError(single("grading")->number, 1, "grading has " + std::to_string(grading.size()) +
                                                         " weights for " + std::to_string(names.size()) + " variables");
    }
    job.ring = guard(*l, [&] { return RingContext::create(std::move(names), field, grading); });
  } else if (job.complex) {
    job.ring = RingContext::standard(job.complex->num_vertices(), Field::rationals());
    if (!grading.empty()) {
      if (grading.size() != job.complex->num_vertices()) {
        throw ParseError(single("grading")->number, 1, "grading length differs from the vertex count");
      }
      job.ring = RingContext::create(job.ring->names(), Field::rationals(), grading);
    }
  } else if (const Line* g = single("grading")) {
    throw ParseError(g->number, 1, "'grading' needs a 'ring' line");
  }

  if (job.complex && job.ring && job.complex->num_vertices() != job.ring->num_vars()) {
    throw ParseError(single("facets")->number, 1, "complex has " + std::to_string(job.complex->num_vertices()) +
                                                      " vertices but the ring has " +
                                                      std::to_string(job.ring->num_vars()) + " variables");
  }

  if (const Line* l = single("order")) {
    if (!job.ring) throw ParseError(l->number, 1, "'order' needs a 'ring' line");
    job.order = guard(*l, [&] { return parse_order(l->value.text, *job.ring); });
  }
  for (const Line* l : all("ideal")) {
    if (!job.ring) throw ParseError(l->number, 1, "'ideal' needs a 'ring' line");
    const MonomialOrder order = job.effective_order();
    // Split on top-level commas only.
    std::size_t depth = 0;
    std::size_t piece = 0;
    const std::string_view v = l->value.text;
    for (std::size_t i = 0; i <= v.size(); ++i) {
      if (i < v.size() && v[i] == '(') ++depth;
      if (i < v.size() && v[i] == ')' && depth > 0) --depth;
      if (i == v.size() || (v[i] == ',' && depth == 0)) {
        const std::size_t column = l->value.column + piece;
        try {
          Polynomial f = parse_polynomial(v.substr(piece, i - piece), job.ring, order);
          if (!f.is_zero()) job.ideal.push_back(std::move(f));
        } catch (const ParseError& e) {
          relocate(e, l->number, column);
        }
        piece = i + 1;
      }
    }
  }

  if (const Line* l = single("pool")) {
    for (const Slice& c : split(l->value, ',')) {
      mpq_class q;
      std::string s(c.text);
      if (!s.empty() && s.front() == '+') s.erase(0, 1);
      if (s.empty() || q.set_str(s, 10) != 0 ||
          !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'; })) {
        throw ParseError(l->number, c.column, "expected a rational coefficient, got '" + std::string(c.text) + "'");
      }
      if (q.get_den() == 0) throw ParseError(l->number, c.column, "zero denominator");
      q.canonicalize();
      job.pool.push_back(q);
    }
  }
  if (const Line* l = single("budget")) {
    job.budget = guard(*l, [&] { return parse_integer<std::uint64_t>({l->value.text, 1}, "a budget"); });
  }
  if (const Line* l = single("seed")) {
    job.seed = guard(*l, [&] { return parse_integer<std::uint64_t>({l->value.text, 1}, "a seed"); });
  }
  if (const Line* l = single("workers")) {
    job.workers = guard(*l, [&] { return parse_integer<std::size_t>({l->value.text, 1}, "a worker count"); });
  }
  if (const Line* l = single("family")) {
    job.family = guard(*l, [&] { return parse_family(l->value.text); });
  }
  if (const Line* l = single("prime")) {
    for (const Slice& p : split(l->value, ',')) {
      job.primes.push_back(
          guard(*l, [&] { return parse_integer<std::uint32_t>({p.text, p.column - l->value.column + 1}, "a prime"); }));
    }
  }
  if (const Line* l = single("format")) {
    if (l->value.text != "json" && l->value.text != "text") {
      throw ParseError(l->number, l->value.column, "format must be json or text");
    }
    job.format = std::string(l->value.text);
  }
  return job;
}

std::string render_job(const JobSpec& job) {
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  if (job.ring) {
    std::string names;
    for (const auto& n : job.ring->names()) names += (names.empty() ? "" : ",") + n;
    line("ring " + job.ring->field().to_string() + " " + names);
  }
  if (job.ring && !job.ring->has_standard_grading()) {
    std::string g;
    for (auto w : job.ring->grading()) g += (g.empty() ? "" : ",") + std::to_string(w);
    line("grading " + g);
  }
  if (job.order) line("order " + job.order->describe(job.ring->names()));
  for (const auto& f : job.ideal) line("ideal: " + f.to_string());
  if (job.complex) {
    line("vertices " + std::to_string(job.complex->num_vertices()));
    line("facets: " + job.complex->to_string());
  }
  if (!job.pool.empty()) {
    std::string p;
    for (const auto& q : job.pool) p += (p.empty() ? "" : ",") + q.get_str();
    line("pool " + p);
  }
  if (job.budget) line("budget " + std::to_string(*job.budget));
  if (job.seed) line("seed " + std::to_string(*job.seed));
  if (job.family) line("family " + to_string(*job.family));
  if (!job.primes.empty()) {
    std::string p;
    for (auto q : job.primes) p += (p.empty() ? "" : ",") + std::to_string(q);
    line("prime " + p);
  }
  if (job.workers) line("workers " + std::to_string(*job.workers));
  if (job.format) line("format " + *job.format);
  return out;
}

}  // namespace srdegen
