#ifndef COMPACTA_TOOLS_CLI_HPP
#define COMPACTA_TOOLS_CLI_HPP

// The `compacta` command line. run() is kept separate from main() so the
// tests can drive it with captured streams.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compacta/asymptotics.hpp"
#include "compacta/compaction.hpp"
#include "compacta/dfinite.hpp"
#include "compacta/enumerate.hpp"
#include "compacta/operator.hpp"
#include "compacta/recurrences.hpp"
#include "compacta/selftest.hpp"
#include "compacta/tree.hpp"

namespace compacta::cli {

enum exit_code : int { ok = 0, domain_error = 1, usage_error = 2 };

namespace detail {

inline std::string fixed(long double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << static_cast<double>(x);
  return os.str();
}

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline family to_family(const std::string& s) { return *parse_family(s); }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compacted and relaxed binary trees: enumeration, counting, operators, asymptotics", "compacta"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  unsigned threads = 1;
  std::string budget_text;
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", budget_text, "Enumeration budget (default 10^8 or $COMPACTA_BUDGET)");

  const std::vector<std::string> families{"relaxed", "compacted"};

  // compact
  std::string compact_path;
  auto* compact = app.add_subcommand("compact", "Run the UID procedure on an s-expression tree");
  compact->add_option("file", compact_path, "Tree file ('-' for stdin)")->required();

  // enumerate
  std::uint32_t en_n = 0;
  std::optional<std::uint32_t> en_k;
  std::string en_kind = "relaxed";
  bool en_count_only = false;
  std::string en_emit;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustively generate trees of a given size");
  enumerate->add_option("--n", en_n, "Size (number of internal nodes)")->required();
  enumerate->add_option("--max-right-height", en_k, "Right height bound");
  enumerate->add_option("--kind", en_kind, "relaxed or compacted")->check(CLI::IsMember(families));
  enumerate->add_flag("--count-only", en_count_only, "Print only the number of trees");
  enumerate->add_option("--emit", en_emit, "Write the trees to this file, one per line");

  // count
  std::uint32_t ct_n = 0;
  std::string ct_kind;
  bool ct_table = false;
  auto* count = app.add_subcommand("count", "Exact counts from the two-parameter tables");
  count->add_option("--kind", ct_kind, "relaxed or compacted")->required()->check(CLI::IsMember(families));
  count->add_option("--n", ct_n, "Size")->required();
  count->add_flag("--table", ct_table, "Dump the whole table (n + p <= N) as CSV");

  // sequence
  std::string sq_family;
  std::uint32_t sq_k = 0, sq_upto = 0;
  std::optional<std::uint32_t> sq_n0;
  bool sq_csv = false;
  auto* sequence = app.add_subcommand("sequence", "Stream counts with right height at most K");
  sequence->add_option("--family", sq_family, "relaxed or compacted")->required()->check(CLI::IsMember(families));
  sequence->add_option("--k", sq_k, "Right height bound")->required();
  sequence->add_option("--upto", sq_upto, "Last size")->required();
  sequence->add_option("--n0", sq_n0, "Number of seeds (default: operator order)");
  sequence->add_flag("--csv", sq_csv, "CSV output with columns n,value");

  // operator
  std::string op_family;
  std::uint32_t op_k = 0;
  bool op_latex = false, op_plain = false, op_recurrence = false;
  auto* op = app.add_subcommand("operator", "Print L_k or M_k");
  op->add_option("--family", op_family, "L (relaxed) or M (compacted)")->required()->check(CLI::IsMember({"L", "M"}));
  op->add_option("--k", op_k, "Index k")->required();
  auto* latex_flag = op->add_flag("--latex", op_latex, "LaTeX output");
  op->add_flag("--plain", op_plain, "Plain output (default)")->excludes(latex_flag);
  op->add_flag("--recurrence", op_recurrence, "Also print the coefficient recurrence");

  // asymptotics
  std::uint32_t as_k = 0, as_upto = 2000;
  std::string as_family;
  bool as_fit = false;
  std::string as_plot;
  auto* asym = app.add_subcommand("asymptotics", "Singularity data and constant estimates");
  asym->add_option("--k", as_k, "Right height bound")->required();
  asym->add_option("--family", as_family, "relaxed or compacted")->required()->check(CLI::IsMember(families));
  asym->add_flag("--fit", as_fit, "Estimate the constant by extrapolation");
  asym->add_option("--upto", as_upto, "Largest n used by --fit / --emit-plot");
  asym->add_option("--emit-plot", as_plot, "Write n,u_n pairs as CSV");

  // table1
  bool t1_csv = false;
  auto* t1 = app.add_subcommand("table1", "Growth and exponents for k = 1..7 against published values");
  t1->add_flag("--csv", t1_csv, "CSV output");

  auto* selftest = app.add_subcommand("selftest", "Run the cross-oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  integer budget = default_budget();
  if (!budget_text.empty() && (budget.set_str(budget_text, 10) != 0 || budget <= 0)) {
    err << "error: --budget must be a positive integer\n";
    return usage_error;
  }

  try {
    if (*compact) {
      const auto tree = parse_tree(detail::read_input(compact_path));
      const auto res = uid_compact(tree);
      res.table.write_csv(out);
      out << "\n" << to_string(res.dag) << "\n";
    } else if (*enumerate) {
      gen_filter f{en_n, en_k, detail::to_family(en_kind)};
      if (en_count_only) {
        out << count_by_generation(f, budget, threads) << "\n";
      } else if (!en_emit.empty()) {
        std::ofstream file(en_emit);
        if (!file) throw error("cannot write '" + en_emit + "'");
        std::uint64_t c = 0;
        for_each_tree(f, [&](const relaxed_dag& d) { file << to_string(d) << '\n'; ++c; }, budget);
        out << c << "\n";
      } else {
        for_each_tree(f, [&](const relaxed_dag& d) { out << to_string(d) << '\n'; }, budget);
      }
    } else if (*count) {
      const auto kind = ct_kind == "compacted" ? table_kind::gamma : table_kind::delta;
      const auto table = build_table(kind, ct_n);
      if (ct_table) table.write_csv(out);
      else out << table.count(ct_n) << "\n";
    } else if (*sequence) {
      const family f = detail::to_family(sq_family);
      auto seq = seed(sq_k, f, sq_n0, budget);
      const auto values = stream(seq, sq_upto);
      if (sq_csv) {
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n] << '\n';
      } else {
        for (std::size_t n = 0; n < values.size(); ++n) out << (n ? "," : "") << values[n];
        out << "\n";
      }
    } else if (*op) {
      const auto L = op_family == "L" ? build_L(op_k) : build_M(op_k);
      out << (op_latex ? L.to_latex() : L.to_plain()) << "\n";
      if (op_recurrence) out << ode_to_recurrence(L).to_string() << "\n";
    } else if (*asym) {
      const family f = detail::to_family(as_family);
      const auto s = singularity(as_k, f);
      out << "k: " << s.k << "\n"
          << "family: " << to_string(f) << "\n"
          << "rho: " << detail::fixed(s.rho, 12) << "\n"
          << "growth: " << detail::fixed(s.growth, 12) << "\n"
          << "delta1: " << detail::fixed(s.delta1, 12);
      if (s.delta1_exact) out << " (" << *s.delta1_exact << ")";
      out << "\n"
          << "delta1_from_operator: " << detail::fixed(s.delta1_numeric, 12) << "\n"
          << "indicial_roots:";
      for (auto r : s.indicial_roots) out << ' ' << detail::fixed(r, 6);
      out << "\n"
          << "exponent: " << detail::fixed(s.exponent, 12) << "\n";
      if (as_fit || !as_plot.empty()) {
        const auto counts = bounded_height_sequence(as_k, f, as_upto);
        if (as_fit) {
          const auto fit = fit_constant(counts, s.growth, s.exponent);
          for (std::size_t i = 0; i < fit.ladder_n.size(); ++i)
            out << "u[" << fit.ladder_n[i] << "]: " << detail::fixed(fit.ladder_u[i], 10) << "\n";
          out << "constant_estimate: " << detail::fixed(fit.estimate, 10) << "\n";
          if (!fit.converged) err << "warning: " << fit.warning << "\n";
        }
        if (!as_plot.empty()) {
          std::ofstream file(as_plot);
          if (!file) throw error("cannot write '" + as_plot + "'");
          file << "n,u_n\n" << std::setprecision(15);
          for (std::uint32_t n = 1; n <= as_upto; ++n)
            file << n << ',' << static_cast<double>(std::exp(log_normalized(counts[n], n, s.growth, s.exponent))) << '\n';
        }
      }
    } else if (*t1) {
      const auto rows = table1();
      if (t1_csv) {
        out << "k,r,r_ref,alpha,alpha_ref,beta,beta_ref,status\n";
        for (const auto& r : rows)
          out << r.k << ',' << detail::fixed(r.r, 6) << ',' << detail::fixed(r.r_ref, 3) << ','
              << detail::fixed(r.alpha, 6) << ',' << detail::fixed(r.alpha_ref, 3) << ','
              << detail::fixed(r.beta, 6) << ',' << detail::fixed(r.beta_ref, 1) << ','
              << (r.pass ? "PASS" : "FAIL") << '\n';
      } else {
        out << std::left << std::setw(3) << "k" << std::right << std::setw(10) << "r" << std::setw(8) << "ref"
            << std::setw(11) << "alpha" << std::setw(8) << "ref" << std::setw(11) << "beta" << std::setw(6) << "ref"
            << "  status\n";
        for (const auto& r : rows)
          out << std::left << std::setw(3) << r.k << std::right << std::setw(10) << detail::fixed(r.r, 6)
              << std::setw(8) << detail::fixed(r.r_ref, 3) << std::setw(11) << detail::fixed(r.alpha, 6)
              << std::setw(8) << detail::fixed(r.alpha_ref, 3) << std::setw(11) << detail::fixed(r.beta, 6)
              << std::setw(6) << detail::fixed(r.beta_ref, 1) << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
      }
    } else if (*selftest) {
      const auto results = run_selftest(5, threads);
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
        passed += r.passed;
      }
      out << passed << "/" << results.size() << " checks passed\n";
      if (passed != results.size()) return domain_error;
    }
  } catch (const std::exception& e) {
    // Library errors, table range errors, unreadable files.
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
  return ok;
}

}  // namespace compacta::cli

#endif  // COMPACTA_TOOLS_CLI_HPP
