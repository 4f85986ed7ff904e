#include "qhomfly/qholo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhomfly {

RecOperator::RecOperator(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

void RecOperator::trim() {
  for (auto& p : c_)
    for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

RecOperator RecOperator::from_terms(const OreTerms& t) {
  std::vector<Poly> c;
  for (const auto& [jk, v] : t) {
    const auto [j, k] = jk;
    if (j < 0) throw std::invalid_argument("negative power of L");
    if (static_cast<int>(c.size()) <= j) c.resize(j + 1);
    c[j][k] += v;
  }
  return RecOperator(std::move(c));
}

RecOperator RecOperator::shift() { return RecOperator({Poly{}, Poly{{0, XPoly(1)}}}); }
RecOperator RecOperator::multiplier() { return RecOperator({Poly{{1, XPoly(1)}}}); }
RecOperator RecOperator::scalar(const XPoly& c) { return RecOperator({Poly{{0, c}}}); }

XPoly RecOperator::coefficient_at(int j, int m) const {
  XPoly out;
  if (j < 0 || j > order()) return out;
  for (const auto& [k, v] : c_[j]) out += v * RatQ(LaurentQ::q_power(m * k));
  return out;
}

OreTerms RecOperator::terms() const {
  OreTerms t;
  for (int j = 0; j <= order(); ++j)
    for (const auto& [k, v] : c_[j]) t.emplace(std::pair{j, k}, v);
  return t;
}

RecOperator operator*(const RecOperator& a, const RecOperator& b) {
  return RecOperator::from_terms(ore_multiply(a.terms(), b.terms()));
}

RecOperator operator+(const RecOperator& a, const RecOperator& b) {
  std::vector<RecOperator::Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < a.c_.size(); ++j)
    for (const auto& [k, v] : a.c_[j]) c[j][k] += v;
  for (std::size_t j = 0; j < b.c_.size(); ++j)
    for (const auto& [k, v] : b.c_[j]) c[j][k] += v;
  return RecOperator(std::move(c));
}

RecOperator operator-(const RecOperator& a, const RecOperator& b) {
  return a + RecOperator::scalar(XPoly(-1)) * b;
}

const XPoly& Sequence::at(int m) const {
  if (m < start || m >= end()) throw std::out_of_range("sequence index " + std::to_string(m) + " outside window");
  return values[m - start];
}

XPoly apply(const RecOperator& p, const Sequence& f, int m) {
  XPoly out;
  for (int j = 0; j <= p.order(); ++j) {
    if (p.coeffs()[j].empty()) continue;
    out += p.coefficient_at(j, m) * f.at(m + j);
  }
  return out;
}

bool verify(const RecOperator& p, const Sequence& f, int m_lo, int m_hi) {
  for (int m = m_lo; m <= m_hi; ++m)
    if (!apply(p, f, m).is_zero()) return false;
  return true;
}

int last_verifiable(const RecOperator& p, const Sequence& f) { return f.end() - 1 - std::max(p.order(), 0); }

namespace {

XPoly exact(const XPoly& a, const XPoly& b) {
  auto r = divide_exact(a, b);
  if (!r) throw std::logic_error("fraction-free elimination produced an inexact quotient");
  return *std::move(r);
}

LaurentQ lcm(const LaurentQ& a, const LaurentQ& b) {
  const LaurentQ g = poly_gcd(a, b);
  auto r = divide_exact(a * b, g);
  if (!r) throw std::logic_error("lcm: inexact");
  return *std::move(r);
}

// Scale a nullspace vector to coprime integral form with a fixed normalization.
void reduce_content(std::vector<XPoly>& v) {
  XPoly g;
  for (const auto& e : v)
    if (!e.is_zero()) g = g.is_zero() ? e : poly_gcd(g, e);
  if (g.is_zero()) return;
  for (auto& e : v)
    if (!e.is_zero()) e = exact(e, g);

  LaurentQ den(1);
  for (const auto& e : v)
    for (const auto& [k, c] : e.terms()) den = lcm(den, c.den());
  for (auto& e : v) e *= RatQ(den);

  LaurentQ numg;
  int xlow = 0, qlow = 0;
  bool first = true;
  for (const auto& e : v)
    for (const auto& [k, c] : e.terms()) {
      const LaurentQ& n = c.num();
      numg = numg.is_zero() ? n : poly_gcd(numg, n);
      if (first || k < xlow) xlow = k;
      if (first || n.low() < qlow) qlow = n.low();
      first = false;
    }
  if (first) return;
  // numg is primitive with low exponent 0; integer content is removed afterwards
  const LaurentQ unit_part = numg.shifted(qlow);
  for (auto& e : v) {
    XPoly::Terms t;
    for (const auto& [k, c] : e.terms()) {
      auto q = divide_exact(c.num(), unit_part);
      if (!q) throw std::logic_error("content reduction: inexact");
      t.emplace(k - xlow, RatQ(*q));
    }
    e = XPoly(std::move(t));
  }
  Integer rest = 0;
  for (const auto& e : v)
    for (const auto& [k, c] : e.terms()) mpz_gcd(rest.get_mpz_t(), rest.get_mpz_t(), c.num().content().get_mpz_t());
  if (rest > 1)
    for (auto& e : v) e *= RatQ(LaurentQ(1), LaurentQ(rest));
  // sign: the last nonzero entry has positive leading coefficient in its top x term
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->is_zero()) continue;
    if (it->terms().rbegin()->second.num().leading() < 0)
      for (auto& e : v) e = -e;
    break;
  }
}

struct Unknown {
  int j, k;
};

std::optional<RecOperator> solve(const Sequence& f, const std::vector<Unknown>& cols, int d) {
  const int C = static_cast<int>(cols.size());
  const int rows = f.end() - f.start - d;
  std::vector<std::vector<XPoly>> A(rows, std::vector<XPoly>(C));
  for (int r = 0; r < rows; ++r) {
    const int m = f.start + r;
    for (int c = 0; c < C; ++c)
      A[r][c] = f.at(m + cols[c].j) * RatQ(LaurentQ::q_power(m * cols[c].k));
    // scaling a row keeps the nullspace and lets elimination stay in Z[q, 1/q][x, 1/x]
    LaurentQ den(1);
    for (const auto& e : A[r])
      for (const auto& [k, v] : e.terms()) den = lcm(den, v.den());
    if (!den.is_one())
      for (auto& e : A[r]) e *= RatQ(den);
  }

  XPoly prev(1);
  int r = 0;
  std::vector<int> pivots;
  std::vector<bool> is_pivot(C, false);
  for (int c = 0; c < C && r < rows; ++c) {
    int p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[r], A[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const XPoly aic = A[i][c];
      for (int j = 0; j < C; ++j) {
        if (j == c) continue;
        XPoly num = A[r][c] * A[i][j];
        if (!aic.is_zero() && !A[r][j].is_zero()) num -= aic * A[r][j];
        A[i][j] = num.is_zero() ? XPoly() : exact(num, prev);
      }
      A[i][c] = XPoly();
    }
    prev = A[r][c];
    pivots.push_back(c);
    is_pivot[c] = true;
    ++r;
  }

  for (int fr = 0; fr < C; ++fr) {
    if (is_pivot[fr]) continue;
    std::vector<XPoly> x(C);
    x[fr] = prev;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -A[i][fr];
    bool top = false;
    for (int c = 0; c < C; ++c)
      if (cols[c].j == d && !x[c].is_zero()) top = true;
    if (!top) continue;
    reduce_content(x);
    std::vector<RecOperator::Poly> coeffs(d + 1);
    for (int c = 0; c < C; ++c)
      if (!x[c].is_zero()) coeffs[cols[c].j][cols[c].k] = x[c];
    RecOperator op(std::move(coeffs));
    if (verify(op, f, f.start, f.end() - 1 - d)) return op;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RecOperator> guess(const Sequence& f, int max_order, int max_M_degree) {
  bool attempted = false;
  for (int d = 1; d <= max_order; ++d) {
    for (int g = 0; g <= max_M_degree; ++g) {
      const int n = (d + 1) * (g + 1);
      const int rows = f.end() - f.start - d;
      if (rows < n + 1) break;
      attempted = true;
      std::vector<Unknown> cols;
      for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= g; ++k) cols.push_back({j, k});
      if (auto op = solve(f, cols, d)) return op;
    }
  }
  if (!attempted)
    throw WindowTooSmall("window of " + std::to_string(f.values.size()) +
                         " values is too short for an order-1 recurrence");
  return std::nullopt;
}

std::string to_string(const RecOperator& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= p.order(); ++j)
    for (const auto& [k, v] : p.coeffs()[j]) {
      if (!first) os << " + ";
      first = false;
      os << '(' << to_string(v) << ")*M^" << k << "*L^" << j;
    }
  return os.str();
}

RecOperator parse_operator(std::string_view text) { return RecOperator::from_terms(parse_ore(text)); }

}  // namespace qhomfly
