#include "commands.hpp"

#include "system_file.hpp"

#include <coverkit/bench.hpp>
#include <coverkit/covering.hpp>
#include <coverkit/fractions.hpp>
#include <coverkit/multidim.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace coverkit::cli {

namespace {

struct Options {
  std::string input = "-";
  std::optional<std::string> target_const;
  std::optional<std::string> target_file;
  std::int64_t start = 0;
  std::uint64_t characteristic = 0;
  bool exploratory = false;
  std::int64_t m = 1;
  std::uint64_t l = 0;
  std::string multipliers;
  std::string n0;
  std::string d;
  int repetitions = 5;
};

struct Outcome {
  int code = kVerified;
  std::string verdict;
  std::optional<std::int64_t> witness;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

Caps caps_from_env() {
  Caps caps;
  if (const char* v = std::getenv("COVERKIT_ORACLE_CAP"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (*end != '\0' || cap == 0 || v[0] == '-') {
      throw Error("COVERKIT_ORACLE_CAP must be a positive integer");
    }
    caps.period_points = cap;
    caps.box_points = cap;
  }
  return caps;
}

template <class T>
std::string csv(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string vec_str(const IntVector& v) { return "(" + csv(v) + ")"; }

void describe(std::ostream& out, const System& system) {
  out << "system: k=" << system.size() << " sequences, moduli " << csv(system.moduli())
      << ", period " << system.period().get_str() << "\n";
}

Outcome cmd_verify(const Options& o, const SystemFile& file, const Caps& caps,
                   std::ostream& out) {
  const System& system = file.system();
  if (o.target_const.has_value() == o.target_file.has_value()) {
    throw CLI::ValidationError("verify", "exactly one of --target-const or --target-file");
  }
  const Field field =
      o.characteristic == 0 ? Field::rationals() : Field::prime(o.characteristic);
  const PeriodicValueTable target =
      o.target_const ? PeriodicValueTable::constant(parse_rational(*o.target_const), field)
                     : parse_target(read_input(*o.target_file, std::cin), field);
  describe(out, system);
  out << "target: period " << target.period();
  if (field.is_prime()) out << ", compared in F_" << field.characteristic;
  out << "\n";
  WindowOptions opts;
  opts.caps = caps;
  opts.exploratory = o.exploratory;
  if (o.exploratory) {
    out << "EXPLORATORY: the characteristic may divide a period; the window verdict is not "
           "guaranteed\n";
  }
  const ScanVerdict v = verify_target_function(system, target, o.start, opts);
  out << "window: " << v.window_length << " consecutive integers from " << o.start << "\n";
  if (v.holds) {
    out << "verdict: w_A equals the target on all integers\n";
    return {kVerified, "matches", std::nullopt};
  }
  out << "verdict: mismatch at x=" << *v.witness << " (w_A=" << to_string(cover_count(system, *v.witness))
      << ", target=" << to_string(target.at(*v.witness)) << ")\n";
  return {kFalsified, "mismatch", v.witness};
}

Outcome cmd_exact_cover(const Options& o, const SystemFile& file, const Caps& caps,
                        std::ostream& out) {
  const System& system = file.system();
  describe(out, system);
  WindowOptions opts;
  opts.caps = caps;
  const ScanVerdict v =
      verify_target_function(system, PeriodicValueTable::constant(Rational(o.m)), 0, opts);
  if (v.holds) {
    out << "exact " << o.m << "-cover: yes (checked " << v.window_length << " integers)\n";
    return {kVerified, "exact", std::nullopt};
  }
  out << "exact " << o.m << "-cover: no, w_A(" << *v.witness
      << ")=" << to_string(cover_count(system, *v.witness)) << "\n";
  return {kFalsified, "not-exact", v.witness};
}

Outcome cmd_least_period(const SystemFile& file, std::ostream& out) {
  const System& system = file.system();
  const Integer period = least_period_thm13(system);
  out << period.get_str() << "\n";
  describe(out, system);
  std::vector<std::string> support;
  for (const auto& [alpha, c] : fourier_coefficients(system)) {
    if (!c.is_zero()) support.push_back(alpha.to_string());
  }
  out << "nonzero coefficients at alpha in {" << csv(support) << "}\n";
  return {kVerified, "computed", std::nullopt};
}

Outcome cmd_min_window(const Options& o, const SystemFile& file, const Caps& caps,
                       std::ostream& out) {
  const System& system = file.system();
  const auto multipliers = parse_int_csv(o.multipliers);
  const MinWindowReport r = corollary_1_3_min_window(system, multipliers, o.l, o.start, caps);
  out << r.window_size << "\n";
  describe(out, system);
  out << "W_" << o.l << " = " << r.window_size << "; min on [" << o.start << ", "
      << o.start + static_cast<std::int64_t>(r.window_size) << ") = " << to_string(r.window_min)
      << "; global min = " << to_string(r.global_min) << "\n";
  return {kVerified, "computed", std::nullopt};
}

Outcome cmd_witness(const Options& o, const SystemFile& file, std::ostream& out) {
  const System& system = file.system();
  const std::int64_t x = corollary_1_2_witness(system, o.m);
  describe(out, system);
  out << "w_A(" << x << ")=" << to_string(cover_count(system, x)) << " != " << o.m << "\n";
  return {kFalsified, "witness-found", x};
}

Outcome cmd_expsum_cover(const Options& o, const std::string& text, const Caps& caps,
                         std::ostream& out) {
  const auto seqs = parse_coefficients(text);
  if (o.m < 1) throw CLI::ValidationError("--m", "must be positive");
  WindowOptions opts;
  opts.caps = caps;
  const ScanVerdict v =
      theorem_1_2_window_cover(seqs, static_cast<std::uint64_t>(o.m), o.start, opts);
  out << "sets: k=" << seqs.size() << "; window W=" << v.window_length << " from " << o.start
      << "\n";
  if (v.holds) {
    out << "every integer is covered at least " << o.m << " times\n";
    return {kVerified, "covers", std::nullopt};
  }
  out << "x=" << *v.witness << " is covered fewer than " << o.m << " times\n";
  return {kFalsified, "uncovered", v.witness};
}

Outcome cmd_multidim_period(const Options& o, const SystemFile& file, const Caps& caps,
                            std::ostream& out) {
  const auto seqs = file.multi();
  const auto n0 = parse_modulus_csv(o.n0);
  const PeriodBoxVerdict v = is_periodic_mod_vec(seqs, n0, caps);
  if (v.periodic) {
    out << "w is periodic modulo (" << csv(n0) << ")\n";
    return {kVerified, "periodic", std::nullopt};
  }
  const auto& [x, y] = *v.counterexample;
  out << "w" << vec_str(x) << "=" << to_string(multidim_value(seqs, x)) << " but w"
      << vec_str(y) << "=" << to_string(multidim_value(seqs, y)) << "\n";
  return {kFalsified, "not-periodic", std::nullopt};
}

Outcome cmd_thm14(const Options& o, const SystemFile& file, const Caps& caps,
                  std::ostream& out) {
  const auto seqs = file.multi();
  const auto n0 = parse_modulus_csv(o.n0);
  const auto d = parse_modulus_csv(o.d);
  const ChainReport r = theorem_1_4_chain(seqs, n0, d, caps);
  if (!r.applicable) {
    out << "not applicable: d divides n0, I(d) is empty, or the weighted density of I(d) "
           "vanishes\n";
    return {kUsage, "not-applicable", std::nullopt};
  }
  std::vector<std::size_t> one_based;
  for (std::size_t s : r.index_set) one_based.push_back(s + 1);
  out << "I(d) = {" << csv(one_based) << "}\n";
  out << "Theta = " << r.theta.to_string() << "\n";
  out << "chain: " << r.index_count.get_str() << " >= " << r.theta_size.get_str() << " >= "
      << r.min_bound.get_str() << " >= " << r.least_prime.get_str() << " : "
      << (r.verified ? "holds" : "VIOLATED") << "\n";
  return r.verified ? Outcome{kVerified, "holds", std::nullopt}
                    : Outcome{kFalsified, "violated", std::nullopt};
}

Outcome cmd_cor14(const Options& o, const SystemFile& file, const Caps& caps,
                  std::ostream& out) {
  const auto seqs = file.multi();
  const auto n0 = parse_modulus_csv(o.n0);
  if (corollary_1_4_decide(seqs, n0, caps)) {
    out << "every modulus divides (" << csv(n0) << "): periodic\n";
    return {kVerified, "periodic", std::nullopt};
  }
  out << "some modulus does not divide (" << csv(n0) << "): not periodic\n";
  return {kFalsified, "not-periodic", std::nullopt};
}

Outcome cmd_zero_coeffs(const SystemFile& file, const Caps& caps, std::ostream& out) {
  const System& system = file.system();
  const auto coeffs = zero_system_coefficients(system, caps);
  describe(out, system);
  for (const auto& [alpha, c] : coeffs) {
    out << "alpha=" << alpha.to_string() << " c=" << c.to_string() << " : zero\n";
  }
  return {kVerified, "all-zero", std::nullopt};
}

Outcome cmd_average(const SystemFile& file, const Caps& caps, std::ostream& out) {
  const System& system = file.system();
  describe(out, system);
  Rational expected = 0;
  for (const auto& s : system.seqs()) {
    expected += s.weight() / Rational(static_cast<unsigned long>(s.modulus()));
  }
  const bool ok = weighted_average_check(system, caps);
  out << "sum lambda_s/n_s = " << to_string(expected) << "; period mean "
      << (ok ? "agrees" : "DIFFERS") << "\n";
  return ok ? Outcome{kVerified, "holds", std::nullopt}
            : Outcome{kFalsified, "fails", std::nullopt};
}

Outcome cmd_su6(const SystemFile& file, const Caps& caps, std::ostream& out) {
  const System& system = file.system();
  describe(out, system);
  const bool ok = su6_superset_check(system, caps);
  out << "subset sums of 1/n_s " << (ok ? "contain" : "do NOT contain")
      << " every r/n_s\n";
  return ok ? Outcome{kVerified, "holds", std::nullopt}
            : Outcome{kFalsified, "fails", std::nullopt};
}

Outcome cmd_bench(const Options& o, const SystemFile& file, const Caps& caps,
                  std::ostream& out) {
  const System& system = file.system();
  const Rational c = o.target_const ? parse_rational(*o.target_const) : Rational(1);
  const BenchReport r =
      bench_window_vs_full(system, PeriodicValueTable::constant(c), caps, o.repetitions);
  describe(out, system);
  out << "window check: " << r.window_points << " points, " << r.window_ns << " ns\n";
  out << "full period:  " << r.full_points << " points, " << r.full_ns << " ns\n";
  std::ostringstream ratio;
  ratio.precision(4);
  ratio << r.ratio();
  out << "size ratio N/|S| = " << ratio.str() << "\n";
  out << format_bench_line(r) << "\n";
  return {r.agree ? kVerified : kFalsified, r.agree ? "agree" : "disagree", std::nullopt};
}

Outcome cmd_window_size(const SystemFile& file, std::ostream& out) {
  const System& system = file.system();
  const auto moduli = system.moduli();
  out << phi_sum_cardinality(moduli).get_str() << "\n";
  return {kVerified, "computed", std::nullopt};
}

void result_line(std::ostream& out, const std::string& cmd, const Outcome& r) {
  out << "result|cmd=" << cmd << "|verdict=" << r.verdict
      << "|witness=" << (r.witness ? std::to_string(*r.witness) : std::string("none")) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream& in) {
  Options o;
  CLI::App app{"coverkit: exact verification of covering systems and periodic maps", "coverkit"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub, const char* what = "system file ('-' for stdin)") {
    sub->add_option("file", o.input, what);
  };
  auto* verify = app.add_subcommand("verify", "check w_A against a target on a window");
  add_input(verify);
  verify->add_option("--target-const", o.target_const, "constant target value");
  verify->add_option("--target-file", o.target_file, "one period of target values");
  verify->add_option("--start", o.start, "first integer of the window");
  verify->add_option("--char", o.characteristic, "compare in F_p instead of Q");
  verify->add_flag("--exploratory", o.exploratory,
                   "allow p dividing a period (verdict not guaranteed)");

  auto* exact = app.add_subcommand("exact-cover", "decide whether w_A is constantly m");
  add_input(exact);
  exact->add_option("--m", o.m)->required();

  auto* least = app.add_subcommand("least-period", "least period from nonzero coefficients");
  add_input(least);

  auto* minw = app.add_subcommand("min-window", "window on which w_A attains its minimum");
  add_input(minw);
  minw->add_option("--l", o.l)->required();
  minw->add_option("--multipliers", o.multipliers, "CSV, one per sequence")->required();
  minw->add_option("--start", o.start);

  auto* wit = app.add_subcommand("witness", "point in [0,|S|) where w_A != m");
  add_input(wit);
  wit->add_option("--m", o.m)->required();

  auto* expsum = app.add_subcommand("expsum-cover", "m-fold coverage by exponential-sum zero sets");
  add_input(expsum, "coefficient file ('-' for stdin)");
  expsum->add_option("--m", o.m);
  expsum->add_option("--start", o.start);

  auto* mdp = app.add_subcommand("multidim-period", "periodicity modulo a vector");
  add_input(mdp);
  mdp->add_option("--n0", o.n0, "CSV")->required();

  auto* t14 = app.add_subcommand("thm14", "divisibility chain for a vector d");
  add_input(t14);
  t14->add_option("--n0", o.n0, "CSV")->required();
  t14->add_option("--d", o.d, "CSV")->required();

  auto* c14 = app.add_subcommand("cor14", "periodicity decided by divisibility of moduli");
  add_input(c14);
  c14->add_option("--n0", o.n0, "CSV")->required();

  auto* zero = app.add_subcommand("zero-coeffs", "coefficients of an identically zero system");
  add_input(zero);
  auto* avg = app.add_subcommand("average", "mean of w over a period");
  add_input(avg);
  auto* su6 = app.add_subcommand("su6-check", "subset sums of 1/n_s for equal covers");
  add_input(su6);
  auto* bench = app.add_subcommand("bench", "window check versus full-period scan");
  add_input(bench);
  bench->add_option("--target-const", o.target_const, "constant target (default 1)");
  bench->add_option("--repetitions", o.repetitions)->check(CLI::PositiveNumber);
  auto* wsize = app.add_subcommand("window-size", "|S| for the moduli of a system");
  add_input(wsize);

  std::string cmd = "none";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    result_line(out, cmd, {kUsage, "error", std::nullopt});
    return kUsage;
  }
  cmd = app.get_subcommands().front()->get_name();

  Outcome r;
  try {
    const Caps caps = caps_from_env();
    const std::string text = read_input(o.input, in);
    if (cmd == "expsum-cover") {
      r = cmd_expsum_cover(o, text, caps, out);
    } else {
      const SystemFile file = parse_system(text);
      if (cmd == "verify") r = cmd_verify(o, file, caps, out);
      else if (cmd == "exact-cover") r = cmd_exact_cover(o, file, caps, out);
      else if (cmd == "least-period") r = cmd_least_period(file, out);
      else if (cmd == "min-window") r = cmd_min_window(o, file, caps, out);
      else if (cmd == "witness") r = cmd_witness(o, file, out);
      else if (cmd == "multidim-period") r = cmd_multidim_period(o, file, caps, out);
      else if (cmd == "thm14") r = cmd_thm14(o, file, caps, out);
      else if (cmd == "cor14") r = cmd_cor14(o, file, caps, out);
      else if (cmd == "zero-coeffs") r = cmd_zero_coeffs(file, caps, out);
      else if (cmd == "average") r = cmd_average(file, caps, out);
      else if (cmd == "su6-check") r = cmd_su6(file, caps, out);
      else if (cmd == "bench") r = cmd_bench(o, file, caps, out);
      else if (cmd == "window-size") r = cmd_window_size(file, out);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    r = {kUsage, "error", std::nullopt};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    r = {kUsage, "error", std::nullopt};
  }
  result_line(out, cmd, r);
  return r.code;
}

}  // namespace coverkit::cli
