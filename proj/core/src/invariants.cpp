#include "qhomfly/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qhomfly/ladder.hpp"
#include "qhomfly/qcomb.hpp"

namespace qhomfly {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::column(int a) {
  if (a < 0) throw std::invalid_argument("negative column color");
  return Partition(std::vector<int>(static_cast<std::size_t>(a), 1));
}

Partition Partition::row(int a) {
  if (a < 0) throw std::invalid_argument("negative row color");
  return Partition(a == 0 ? std::vector<int>{} : std::vector<int>{a});
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t(static_cast<std::size_t>(width()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::string to_string(const Partition& p) {
  if (p.length() == 0) return "e0";
  if (p.is_column()) return "e" + std::to_string(p.length());
  if (p.is_row()) return "h" + std::to_string(p.width());
  std::string s = "p<";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + ">";
}

namespace {

int parse_int(std::string_view t, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw std::invalid_argument("bad color '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Partition parse_color(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad color '" + std::string(text) + "'");
  const char kind = text.front();
  std::string_view rest = text.substr(1);
  if (kind == 'e') {
    const int a = parse_int(rest, text);
    if (a < 0) throw std::invalid_argument("negative color '" + std::string(text) + "'");
    return Partition::column(a);
  }
  if (kind == 'h') {
    const int a = parse_int(rest, text);
    if (a < 0) throw std::invalid_argument("negative color '" + std::string(text) + "'");
    return Partition::row(a);
  }
  if (kind == 'p') {
    if (!rest.empty() && rest.front() == '<') {
      if (rest.back() != '>') throw std::invalid_argument("bad color '" + std::string(text) + "'");
      rest = rest.substr(1, rest.size() - 2);
    }
    std::vector<int> parts;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      parts.push_back(parse_int(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Partition(std::move(parts));
  }
  throw std::invalid_argument("bad color '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- sums

namespace {

template <class Eval>
void run_terms(Eval& ev, const Braid& b, const std::vector<ColoringTerm>& terms, int jobs, int me) {
  std::size_t counter = 0;
  for (const auto& ct : terms) {
    if (std::any_of(ct.colors.begin(), ct.colors.end(), [](int a) { return a < 0; })) continue;
    TermEnumerator e(ColoredBraid{b, ct.colors}, 0);
    Term t;
    while (e.next(t)) {
      if (static_cast<int>(counter++ % static_cast<std::size_t>(jobs)) != me) continue;
      t.sign *= ct.sign;
      ev.accumulate(t);
    }
  }
}

template <class Eval, class Make>
Eval parallel_sum(const Braid& b, const std::vector<ColoringTerm>& terms, int jobs, Make make) {
  jobs = std::max(1, jobs);
  std::vector<Eval> evals;
  for (int k = 0; k < jobs; ++k) evals.push_back(make());
  if (jobs == 1) {
    run_terms(evals[0], b, terms, 1, 0);
    return std::move(evals[0]);
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> pool;
  for (int k = 0; k < jobs; ++k)
    pool.emplace_back([&, k] {
      try {
        run_terms(evals[k], b, terms, jobs, k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (int k = 1; k < jobs; ++k) evals[0].absorb(evals[k]);
  return std::move(evals[0]);
}

void check_colors(const ColoredBraid& cb) {
  const ClosureInfo info = closure_info(cb.braid);
  if (static_cast<int>(cb.colors.size()) != info.component_count)
    throw std::invalid_argument("color count does not match component count");
}

}  // namespace

XPoly sum_columns(const Braid& b, const std::vector<ColoringTerm>& terms, const InvariantOptions& opt) {
  Evaluator ev = parallel_sum<Evaluator>(b, terms, opt.jobs, [&] { return Evaluator(b.strands, opt.eval); });
  return ev.total();
}

XPoly w_columns(const ColoredBraid& cb, const InvariantOptions& opt) {
  check_colors(cb);
  if (std::any_of(cb.colors.begin(), cb.colors.end(), [](int a) { return a < 0; })) return XPoly();
  if (std::all_of(cb.colors.begin(), cb.colors.end(), [](int a) { return a == 0; })) return XPoly(1);
  return sum_columns(cb.braid, {ColoringTerm{cb.colors, 1}}, opt);
}

RatQ w_columns_specialized(const ColoredBraid& cb, int n, const InvariantOptions& opt) {
  check_colors(cb);
  if (std::any_of(cb.colors.begin(), cb.colors.end(), [](int a) { return a < 0; })) return RatQ();
  SpecializedEvaluator ev = parallel_sum<SpecializedEvaluator>(
      cb.braid, {ColoringTerm{cb.colors, 1}}, opt.jobs,
      [&] { return SpecializedEvaluator(cb.braid.strands, n, opt.eval); });
  return ev.total();
}

XPoly w_rows(const ColoredBraid& cb, const InvariantOptions& opt) { return subst_q_bar(w_columns(cb, opt)); }

// ---------------------------------------------------------------- Jacobi-Trudi

namespace {

struct SignedIndices {
  std::vector<int> e;
  int sign;
};

// all (e_{mu_i + s(i) - i})_i with sgn(s), s in Sym_l, dropping negative subscripts
std::vector<SignedIndices> jt_rows(const Partition& mu, int l) {
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedIndices> out;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    SignedIndices si{{}, inversions % 2 == 0 ? 1 : -1};
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      const int idx = mu.part(i) + perm[i] - i;
      if (idx < 0) ok = false;
      si.e.push_back(idx);
    }
    if (ok) out.push_back(std::move(si));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

XPoly w_colored(const Braid& b, const std::vector<Partition>& colors, JtRoute route,
                const InvariantOptions& opt, const std::vector<int>& widths) {
  const ClosureInfo info = closure_info(b);
  const auto r = static_cast<std::size_t>(info.component_count);
  if (colors.size() != r) throw std::invalid_argument("color count does not match component count");
  if (route == JtRoute::Auto) {
    int direct = 0;
    int transpose = 0;
    for (const auto& c : colors) {
      direct += std::max(1, c.width());
      transpose += std::max(1, c.length());
    }
    route = direct <= transpose ? JtRoute::Direct : JtRoute::Transpose;
  }
  std::vector<int> w(r);
  std::vector<std::vector<SignedIndices>> rows(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Partition mu = route == JtRoute::Transpose ? colors[c] : colors[c].transpose();
    w[c] = c < widths.size() && widths[c] > 0 ? widths[c] : std::max(1, mu.length());
    if (w[c] < mu.length())
      throw std::invalid_argument("cable width " + std::to_string(w[c]) + " is smaller than " +
                                  std::to_string(mu.length()) + " rows");
    rows[c] = jt_rows(mu, w[c]);
  }
  const Cable cab = cable(b, w);
  const std::size_t new_r = std::accumulate(w.begin(), w.end(), std::size_t{0});
  std::vector<ColoringTerm> terms;
  std::vector<std::size_t> pick(r, 0);
  bool empty = std::any_of(rows.begin(), rows.end(), [](const auto& v) { return v.empty(); });
  while (!empty) {
    ColoringTerm ct{std::vector<int>(new_r, 0), 1};
    for (std::size_t c = 0; c < r; ++c) {
      const auto& si = rows[c][pick[c]];
      ct.sign *= si.sign;
      for (int k = 0; k < w[c]; ++k) ct.colors[cab.copies[c][k]] = si.e[k];
    }
    terms.push_back(std::move(ct));
    std::size_t c = 0;
    while (c < r && ++pick[c] == rows[c].size()) pick[c++] = 0;
    if (c == r) break;
  }
  XPoly v = sum_columns(cab.braid, terms, opt);
  return route == JtRoute::Transpose ? subst_q_bar(v) : v;
}

XPoly w_partition(const ColoredBraid& cb, const Partition& lambda, int l, const InvariantOptions& opt) {
  if (l < lambda.length())
    throw std::invalid_argument("w_partition: l = " + std::to_string(l) + " < length " +
                                std::to_string(lambda.length()));
  check_colors(cb);
  std::vector<Partition> colors{lambda};
  std::vector<int> widths{l};
  for (std::size_t c = 1; c < cb.colors.size(); ++c) {
    colors.push_back(Partition::column(cb.colors[c]));
    widths.push_back(std::max(1, cb.colors[c]));
  }
  return w_colored(cb.braid, colors, JtRoute::Transpose, opt, widths);
}

// ---------------------------------------------------------------- framing

XPoly framing_factor(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, XPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  const XPoly twisted = w_colored(Braid{2, {1}}, {lambda});
  const XPoly unknot = w_colored(Braid{1, {}}, {lambda});
  auto phi = divide_exact(twisted, unknot);
  if (!phi) throw std::logic_error("framing factor is not a polynomial");
  std::lock_guard lock(mu);
  return cache.emplace(lambda, *phi).first->second;
}

XPoly framing_factor(int a, ColorKind kind) {
  const XPoly phi = framing_factor(Partition::column(a));
  return kind == ColorKind::Column ? phi : subst_q_bar(phi);
}

namespace {

XPoly power(const XPoly& phi, int delta) {
  XPoly base = delta < 0 ? phi.monomial_inverse() : phi;
  XPoly out(1);
  for (int k = 0; k < std::abs(delta); ++k) out *= base;
  return out;
}

}  // namespace

XPoly adjust_framing(const XPoly& v, int a, int delta, ColorKind kind) {
  if (delta == 0) return v;
  return v * power(framing_factor(a, kind), delta);
}

XPoly adjust_framing(const XPoly& v, const Partition& lambda, int delta) {
  if (delta == 0) return v;
  return v * power(framing_factor(lambda), delta);
}

XPoly to_zero_framing(const XPoly& v, const Braid& b, const std::vector<Partition>& colors) {
  const ClosureInfo info = closure_info(b);
  XPoly out = v;
  for (int c = 0; c < info.component_count; ++c)
    out = adjust_framing(out, colors.at(static_cast<std::size_t>(c)), -info.linking[c][c]);
  return out;
}

// ---------------------------------------------------------------- oracles

XPoly oracle_trefoil_sum(int a) {
  if (a < 0) throw std::invalid_argument("oracle_trefoil_sum: a < 0");
  // inner[tau] collects everything except the n-dependent binomial in tau
  std::map<int, LaurentQ> inner;
  for (int s1 = 0; s1 <= a; ++s1)
    for (int s2 = 0; s2 <= a; ++s2)
      for (int s3 = 0; s3 <= a; ++s3)
        for (int s4 = 0; s4 <= s1 + s2; ++s4)
          for (int s5 = 0; s5 <= s2 + s3; ++s5)
            for (int s6 = 0; s6 <= s1 + s2 + s3 - s4 - s5; ++s6) {
              const int tau = s1 + s2 + s3 - s4 - s5 - s6;
              if (heaviside(a + s1 + s2 - s4) * heaviside(a + s2 + s3 - s5) * heaviside(tau) *
                      heaviside(a - tau) ==
                  0)
                continue;
              LaurentQ f = qbinom_laurent(s2 + s1, s4);
              for (auto [r, s] : std::initializer_list<std::pair<int, int>>{{s2 + s3, s5}, {tau + s2 + s6, s6}, {s1 + s2 - s4, s1},
                                  {tau, s1 + s2 - s4}, {s2 + s3 - s5, s3}, {tau, s2 + s3 - s5},
                                  {a, a - tau}}) {
                if (f.is_zero()) break;
                f *= qbinom_laurent(r, s);
              }
              if (f.is_zero()) continue;
              const int e = s1 + s2 + s3;
              // (-q)^{-e}
              inner[tau] += f * LaurentQ::monomial(e % 2 == 0 ? 1 : -1, -e);
            }
  XPoly sum;
  for (const auto& [tau, c] : inner) sum += xbinom(-tau, a) * RatQ(c);
  return sum * xbinom(0, a) * RatQ(LaurentQ::q_power(3 * a));
}

XPoly oracle_torus(int s, int m, bool zero_framed) {
  if (m < 0) throw std::invalid_argument("oracle_torus: m < 0");
  if (zero_framed && (s < 1 || s % 2 == 0))
    throw std::invalid_argument("oracle_torus: zero framing needs odd s >= 1");
  XPoly out;
  for (int k = 0; k <= m; ++k) {
    const int e = zero_framed ? s * (-m - 2 * m * k + k * k - k) : s * (m * m - 2 * m * k + k * k - k);
    const int sgn = (zero_framed ? k : s * k) % 2 == 0 ? 1 : -1;
    const RatQ c = RatQ(LaurentQ::monomial(sgn, e)) * qint(2 * m - 2 * k + 1) / qint(2 * m - k + 1);
    out += xbinom(k - 2, k) * xbinom(2 * m - k - 1, 2 * m - k) * c;
  }
  return out;
}

}  // namespace qhomfly
