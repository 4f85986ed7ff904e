#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "builtin_ops.hpp"
#include "qhomfly/braid.hpp"
#include "qhomfly/invariants.hpp"
#include "qhomfly/json_io.hpp"
#include "qhomfly/ladder.hpp"
#include "qhomfly/qholo.hpp"

namespace qhomfly::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kColorHelp =
    "Colors attach to the closure components in order of their smallest bottom strand index "
    "(strand 1 is the leftmost). A color is e<k> (column), h<k> (row) or p<l1,l2,...> "
    "(also written p2,1).";

struct EvalArgs {
  int strands = 1;
  std::string braid;
  std::vector<std::string> colors;
  std::string framing = "blackboard";
  std::optional<int> specialize;
  std::string format = "text";
  std::string route = "auto";
  int jobs = 1;
  bool mirror = false;
  bool dump_terms = false;
  bool trace = false;
  bool no_memo = false;
  int extra = 0;
};

struct OracleArgs {
  int a = 0;
  int s = 3;
  int m = 0;
  bool zero_framed = false;
  std::string format = "text";
};

struct SeqArgs {
  std::string source = "engine";
  int strands = 0;
  std::string braid;
  bool mirror = false;
  std::string kind = "h";
  std::string framing = "blackboard";
  int from = 0;
  int to = -1;
  int s = 3;
  int jobs = 1;
};

struct RecurArgs {
  SeqArgs seq;
  std::string op_file;
  std::string op_text;
  std::string builtin;
  std::optional<int> check_from;
  std::optional<int> check_to;
  int max_order = 2;
  int max_degree = 8;
};

void add_seq_options(CLI::App* app, SeqArgs& a) {
  app->add_option("--source", a.source, "engine, torus-oracle or trefoil-oracle")
      ->check(CLI::IsMember({"engine", "torus-oracle", "trefoil-oracle"}));
  app->add_option("--strands", a.strands, "strand count (engine source)");
  app->add_option("--braid", a.braid, "braid word (engine source)");
  app->add_flag("--mirror", a.mirror, "negate every braid letter");
  app->add_option("--kind", a.kind, "e: colors e_m, h: colors h_m")->check(CLI::IsMember({"e", "h"}));
  app->add_option("--framing", a.framing, "blackboard or zero")->check(CLI::IsMember({"blackboard", "zero"}));
  app->add_option("--from", a.from, "first index");
  app->add_option("--to", a.to, "last index")->required();
  app->add_option("--s", a.s, "crossing count for torus-oracle");
  app->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
}

Partition color_of(const std::string& kind, int m) {
  return kind == "e" ? Partition::column(m) : Partition::row(m);
}

Sequence compute_sequence(const SeqArgs& a) {
  if (a.from < 0 || a.to < a.from) throw UsageError("need 0 <= --from <= --to");
  Sequence f;
  f.start = a.from;
  if (a.source == "torus-oracle") {
    if (a.kind != "h") throw UsageError("torus-oracle gives row colors only");
    for (int m = a.from; m <= a.to; ++m) f.values.push_back(oracle_torus(a.s, m, a.framing == "zero"));
    return f;
  }
  if (a.source == "trefoil-oracle") {
    if (a.kind != "e" || a.framing != "blackboard")
      throw UsageError("trefoil-oracle gives blackboard-framed column colors only");
    for (int m = a.from; m <= a.to; ++m) f.values.push_back(oracle_trefoil_sum(m));
    return f;
  }
  if (a.strands < 1) throw UsageError("engine source needs --strands");
  Braid b = parse_braid(a.braid, a.strands);
  if (a.mirror) b = mirror(b);
  const int r = closure_info(b).component_count;
  InvariantOptions opt;
  opt.jobs = a.jobs;
  for (int m = a.from; m <= a.to; ++m) {
    const ColoredBraid cb = make_colored(b, std::vector<int>(static_cast<std::size_t>(r), m));
    XPoly v = a.kind == "e" ? w_columns(cb, opt) : w_rows(cb, opt);
    if (a.framing == "zero")
      v = to_zero_framing(v, b, std::vector<Partition>(static_cast<std::size_t>(r), color_of(a.kind, m)));
    f.values.push_back(std::move(v));
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RecOperator load_operator(const RecurArgs& a) {
  const int given = !a.op_file.empty() + !a.op_text.empty() + !a.builtin.empty();
  if (given > 1) throw UsageError("give at most one of --operator, --operator-text, --builtin");
  if (!a.op_file.empty()) return parse_operator(read_file(a.op_file));
  if (!a.op_text.empty()) return parse_operator(a.op_text);
  if (a.builtin.empty() || a.builtin == "trefoil-tre") return parse_operator(kTrefoilTre);
  throw UsageError("unknown builtin operator '" + a.builtin + "'");
}

void print_value(std::ostream& out, const std::string& format, const XPoly& v, nlohmann::ordered_json meta) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["value"] = to_json(v);
    j["meta"] = std::move(meta);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(v) << '\n';
  }
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  Braid b = parse_braid(a.braid, a.strands);
  if (a.mirror) b = mirror(b);
  const ClosureInfo info = closure_info(b);
  std::vector<Partition> colors;
  for (const auto& c : a.colors) colors.push_back(parse_color(c));
  if (static_cast<int>(colors.size()) != info.component_count)
    throw UsageError("closure has " + std::to_string(info.component_count) + " component(s) but " +
                     std::to_string(colors.size()) + " color(s) were given");

  InvariantOptions opt;
  opt.jobs = a.jobs;
  opt.eval.memo = !a.no_memo;
  if (a.trace) opt.eval.trace = &err;

  const bool columns = std::all_of(colors.begin(), colors.end(), [](const Partition& p) { return p.is_column(); });
  const bool rows = std::all_of(colors.begin(), colors.end(), [](const Partition& p) { return p.is_row(); });
  std::vector<int> sizes;
  for (const auto& p : colors) sizes.push_back(p.size());

  if (a.dump_terms) {
    if (!columns && !rows) throw UsageError("--dump-terms needs column or row colors");
    TermEnumerator en(make_colored(b, sizes), a.extra);
    Term t;
    while (en.next(t)) out << dump_term(t) << '\n';
    return kOk;
  }

  XPoly v;
  if (columns) {
    v = w_columns(make_colored(b, sizes), opt);
  } else if (rows) {
    v = w_rows(make_colored(b, sizes), opt);
  } else {
    const JtRoute route = a.route == "transpose" ? JtRoute::Transpose
                          : a.route == "direct"  ? JtRoute::Direct
                                                 : JtRoute::Auto;
    v = w_colored(b, colors, route, opt);
  }
  if (a.framing == "zero") v = to_zero_framing(v, b, colors);

  nlohmann::ordered_json meta;
  meta["command"] = "eval";
  meta["strands"] = b.strands;
  meta["braid"] = to_string(b);
  meta["components"] = info.component_count;
  std::vector<std::string> cs;
  for (const auto& p : colors) cs.push_back(to_string(p));
  meta["colors"] = cs;
  meta["framing"] = a.framing;

  if (!a.specialize) {
    print_value(out, a.format, v, std::move(meta));
    return kOk;
  }
  const int n = *a.specialize;
  const RatQ r = subst_x_eq_qn(v, n);
  const IntegralCheck ic = is_integral_laurent(r);
  meta["specialize"] = n;
  meta["integral"] = ic.integral;
  if (!ic.integral) err << "note: value at x = q^" << n << " is not a Laurent polynomial\n";
  if (a.format == "json") {
    print_value(out, a.format, XPoly(r), std::move(meta));
  } else {
    out << (ic.integral ? to_string(ic.value) : to_string(r)) << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string& which, const OracleArgs& a, std::ostream& out) {
  nlohmann::ordered_json meta;
  meta["command"] = "oracle";
  meta["oracle"] = which;
  XPoly v;
  if (which == "trefoil") {
    if (a.a < 0) throw UsageError("--a must be nonnegative");
    v = oracle_trefoil_sum(a.a);
    meta["a"] = a.a;
  } else {
    if (a.m < 0) throw UsageError("--m must be nonnegative");
    if (a.zero_framed && (a.s < 1 || a.s % 2 == 0)) throw UsageError("--zero-framed needs odd --s >= 1");
    v = oracle_torus(a.s, a.m, a.zero_framed);
    meta["s"] = a.s;
    meta["m"] = a.m;
    meta["framing"] = a.zero_framed ? "zero" : "blackboard";
  }
  print_value(out, a.format, v, std::move(meta));
  return kOk;
}

int cmd_verify(const RecurArgs& a, std::ostream& out) {
  const RecOperator p = load_operator(a);
  if (p.is_zero()) throw UsageError("operator is zero");
  const Sequence f = compute_sequence(a.seq);
  const int lo = a.check_from.value_or(f.start);
  const int hi = a.check_to.value_or(last_verifiable(p, f));
  if (lo < f.start || hi > last_verifiable(p, f) || hi < lo)
    throw UsageError("check window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "] needs values outside [" + std::to_string(f.start) + ", " + std::to_string(f.end() - 1) + "]");
  bool ok = true;
  for (int m = lo; m <= hi; ++m) {
    const bool zero = apply(p, f, m).is_zero();
    ok = ok && zero;
    out << "m=" << m << ' ' << (zero ? "ok" : "nonzero") << '\n';
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_guess(const RecurArgs& a, std::ostream& out) {
  const Sequence f = compute_sequence(a.seq);
  std::optional<RecOperator> p;
  try {
    p = guess(f, a.max_order, a.max_degree);
  } catch (const WindowTooSmall& e) {
    throw UsageError(e.what());
  }
  if (!p) {
    out << "none\n";
    return kVerifyFailed;
  }
  out << to_string(*p) << '\n';
  return kOk;
}

int cmd_table(const SeqArgs& a, const std::string& format, std::ostream& out) {
  const Sequence f = compute_sequence(a);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["values"] = nlohmann::ordered_json::array();
    for (int m = f.start; m < f.end(); ++m) {
      nlohmann::ordered_json row;
      row["m"] = m;
      row["value"] = to_json(f.at(m));
      j["values"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    for (int m = f.start; m < f.end(); ++m) out << m << '\t' << to_string(f.at(m)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact colored HOMFLYPT invariants of braid closures", "qhomfly"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "compute W of a colored braid closure");
  eval->footer(kColorHelp);
  eval->add_option("--strands", ea.strands, "strand count")->required()->check(CLI::PositiveNumber);
  eval->add_option("--braid", ea.braid, "letters i or -i for sigma_i^{+-1}, space or comma separated");
  eval->add_option("--colors", ea.colors, "one color per component")->required();
  eval->add_option("--framing", ea.framing, "blackboard or zero")->check(CLI::IsMember({"blackboard", "zero"}));
  eval->add_option("--specialize", ea.specialize, "substitute x = q^n");
  eval->add_option("--format", ea.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--route", ea.route, "partition colors: auto, transpose or direct")
      ->check(CLI::IsMember({"auto", "transpose", "direct"}));
  eval->add_option("--jobs", ea.jobs, "worker threads")->check(CLI::PositiveNumber);
  eval->add_flag("--mirror", ea.mirror, "negate every braid letter");
  eval->add_flag("--dump-terms", ea.dump_terms, "print the ladder terms instead of evaluating");
  eval->add_option("--extra", ea.extra, "widen the term box by this much (with --dump-terms)");
  eval->add_flag("--trace", ea.trace, "print rewrite steps to stderr");
  eval->add_flag("--no-memo", ea.no_memo, "disable the evaluation memo");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "closed-form values");
  oracle->require_subcommand(1);
  auto* tre = oracle->add_subcommand("trefoil", "right-handed trefoil colored e_a, blackboard framing");
  tre->add_option("--a", oa.a, "column color")->required();
  tre->add_option("--format", oa.format)->check(CLI::IsMember({"text", "json"}));
  auto* tor = oracle->add_subcommand("torus", "torus knot T(2,s) colored h_m");
  tor->add_option("--s", oa.s, "crossings")->required();
  tor->add_option("--m", oa.m, "row color")->required();
  tor->add_flag("--zero-framed", oa.zero_framed, "0-framed value (odd s)");
  tor->add_option("--format", oa.format)->check(CLI::IsMember({"text", "json"}));

  RecurArgs ra;
  auto* recur = app.add_subcommand("recur", "verify or guess recurrences in the color");
  recur->require_subcommand(1);
  auto* ver = recur->add_subcommand("verify", "check that an operator annihilates a sequence");
  add_seq_options(ver, ra.seq);
  ver->add_option("--operator", ra.op_file, "file holding an operator in M, L, q, x");
  ver->add_option("--operator-text", ra.op_text, "operator given inline");
  ver->add_option("--builtin", ra.builtin, "named operator: trefoil-tre (default)");
  ver->add_option("--check-from", ra.check_from, "first index to check");
  ver->add_option("--check-to", ra.check_to, "last index to check");
  auto* gue = recur->add_subcommand("guess", "find an annihilating operator on the window");
  add_seq_options(gue, ra.seq);
  gue->add_option("--max-order", ra.max_order, "largest order tried")->check(CLI::PositiveNumber);
  gue->add_option("--max-degree", ra.max_degree, "largest M-degree tried")->check(CLI::NonNegativeNumber);

  SeqArgs ta;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "print a sequence of invariants");
  add_seq_options(table, ta);
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(ea, out, err);
    if (tre->parsed()) return cmd_oracle("trefoil", oa, out);
    if (tor->parsed()) return cmd_oracle("torus", oa, out);
    if (ver->parsed()) return cmd_verify(ra, out);
    if (gue->parsed()) return cmd_guess(ra, out);
    if (table->parsed()) return cmd_table(ta, table_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qhomfly::cli
