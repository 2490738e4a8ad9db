#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlab/congruences.hpp"
#include "qlab/errors.hpp"
#include "qlab/kernels.hpp"
#include "qlab/macmahon.hpp"
#include "qlab/qexpr.hpp"
#include "qlab/special.hpp"

namespace qlab::cli {

namespace {

struct Range {
  unsigned long lo = 0;
  unsigned long hi = 0;
};

Range parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  Range r{std::stoul(m[1]), std::stoul(m[2])};
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

// Named sequences, else a q-expression.
//   prefA, pbar, modd:<a>:<t>, coeff:<a>:<t>
Series resolve_series(const std::string& name, std::size_t order) {
  if (name == "prefA") return prefactor_A(order);
  if (name == "pbar") return overpartition(order);
  static const std::regex re(R"(^(modd|coeff):(-?\d+):(\d+)$)");
  std::smatch m;
  if (std::regex_match(name, m, re)) {
    const int a = std::stoi(m[2]);
    const auto t = static_cast<unsigned>(std::stoul(m[3]));
    if (m[1] == "modd") {
      if (a == -2 || a == 0 || a == 1) return macmahon::explicit_utilde(a, t, order);
      if (a < -2 || a > 2) throw UnsupportedA(a);
      return macmahon::direct_utilde(a, t, order).at(t);
    }
    std::vector<mpz_class> c(order, mpz_class(0));
    for (std::size_t n = 1; n < order; ++n) c[n] = macmahon::coeff_c(a, t, n);
    return Series(std::move(c));
  }
  return qexpr::eval(name, order);
}

mpz_class reduce(const mpz_class& v, const std::optional<unsigned long>& mod) {
  if (!mod) return v;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), *mod);
  return r;
}

nlohmann::ordered_json json_int(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

int cmd_expand(const std::string& expr, std::size_t order, const std::optional<unsigned long>& mod,
               const std::string& format, std::ostream& out) {
  const Series s = resolve_series(expr, order);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = expr;
    j["order"] = order;
    j["mod"] = mod ? nlohmann::json(*mod) : nlohmann::json(nullptr);
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < order; ++i) arr.push_back(json_int(reduce(s[i], mod)));
    out << j.dump() << '\n';
  } else if (format == "csv") {
    out << "n,value\n";
    for (std::size_t i = 0; i < order; ++i) out << i << ',' << reduce(s[i], mod).get_str() << '\n';
  } else {
    for (std::size_t i = 0; i < order; ++i) out << (i ? " " : "") << reduce(s[i], mod).get_str();
    out << '\n';
  }
  return 0;
}

int cmd_modd(int a, unsigned t, unsigned long n, const std::string& method, std::ostream& out, std::ostream& err) {
  if (a < -2 || a > 2) throw UnsupportedA(a);
  auto direct = [&] { return macmahon::direct_utilde(a, t, n + 1).at(t)[n]; };
  auto explicit_form = [&] {
    macmahon::PrefactorCache cache;
    return macmahon::ModdEvaluator(a, t, n, cache)(n);
  };
  auto oracle = [&] { return macmahon::oracle_modd(a, t, n); };
  if (method == "direct") {
    out << direct().get_str() << '\n';
  } else if (method == "explicit") {
    out << explicit_form().get_str() << '\n';
  } else if (method == "oracle") {
    out << oracle().get_str() << '\n';
  } else {
    const mpz_class d = direct();
    const mpz_class e = explicit_form();
    const mpz_class o = oracle();
    out << d.get_str() << ' ' << e.get_str() << ' ' << o.get_str() << '\n';
    if (d != e || d != o) {
      err << "methods disagree for a=" << a << " t=" << t << " n=" << n << '\n';
      return 1;
    }
  }
  return 0;
}

bool matches(const std::string& id, const std::vector<std::string>& selectors) {
  if (selectors.empty()) return true;
  return std::any_of(selectors.begin(), selectors.end(), [&](const std::string& s) {
    if (!s.empty() && s.back() == '*') return id.rfind(s.substr(0, s.size() - 1), 0) == 0;
    return id == s;
  });
}

int cmd_verify(const std::vector<std::string>& selectors, const std::string& profile_name,
               const std::optional<unsigned long>& budget, const std::optional<std::string>& j_text,
               std::ostream& out) {
  std::vector<congruences::CongruenceFamily> chosen;
  for (const auto& sel : selectors) {
    if (sel.empty() || sel.back() != '*') (void)congruences::lookup(sel);  // unknown id -> error
  }
  for (const auto& f : congruences::registry()) {
    if (matches(f.id, selectors)) chosen.push_back(f);
  }
  if (chosen.empty()) throw std::invalid_argument("no family matches the selection");
  congruences::SweepOptions opt;
  opt.profile = profile_name == "full" ? congruences::Profile::Full : congruences::Profile::Quick;
  opt.budget = budget;
  if (j_text) {
    const Range r = parse_range(*j_text);
    opt.j_range = std::make_pair(r.lo, r.hi);
  }
  int failures = 0;
  for (const auto& f : chosen) {
    const auto report = congruences::verify_family(f, opt);
    if (!report.pass) ++failures;
    out << congruences::to_json_line(report) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

int cmd_lemmas(const std::string& path, std::size_t order, std::ostream& out) {
  const auto fixtures = qexpr::load_fixtures(path);
  std::vector<qexpr::FixtureReport> reports(fixtures.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < fixtures.size(); ++i) reports[i] = qexpr::check_fixture(fixtures[i], order);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.pass) {
      ++passed;
      out << "pass  " << r.name << "  (order " << r.checked_to << ")\n";
    } else if (!r.error.empty()) {
      out << "FAIL  " << r.name << "  error: " << r.error << '\n';
    } else {
      out << "FAIL  " << r.name << "  first mismatch at q^" << *r.first_mismatch << '\n';
    }
  }
  out << passed << '/' << reports.size() << " pass\n";
  return passed == reports.size() ? 0 : 1;
}

int cmd_table(const std::string& seq, const std::string& range_text, const std::optional<unsigned long>& mod,
              std::ostream& out) {
  const Range r = parse_range(range_text);
  const Series s = resolve_series(seq, r.hi + 1);
  out << "n,value\n";
  for (unsigned long n = r.lo; n <= r.hi; ++n) out << n << ',' << reduce(s[n], mod).get_str() << '\n';
  return 0;
}

int cmd_list(std::ostream& out) {
  for (const auto& f : congruences::registry()) {
    const auto rep_seq = congruences::to_string(f.sequence);
    out << f.id << '\t' << rep_seq << '\t' << f.cases.size() << (f.cases.size() == 1 ? " case" : " cases") << '\n';
  }
  out << congruences::registry().size() << " families\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qlab: exact q-series, MacMahon-type sums and congruence checks"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Thread cap (overrides QLAB_THREADS)");

  std::string expr;
  std::size_t order = 20;
  std::optional<unsigned long> mod;
  std::string format = "text";
  auto* expand = app.add_subcommand("expand", "Expand a q-expression or named sequence");
  expand->add_option("expr", expr, "Expression, or prefA | pbar | modd:<a>:<t> | coeff:<a>:<t>")->required();
  expand->add_option("--order", order, "Number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--mod", mod, "Reduce coefficients modulo m")->check(CLI::PositiveNumber);
  expand->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  int a = 0;
  unsigned t = 1;
  unsigned long n = 0;
  std::string method = "explicit";
  auto* modd = app.add_subcommand("modd", "One coefficient m_odd(a, t; n)");
  modd->add_option("-a", a, "a in -2..2")->required();
  modd->add_option("-t", t, "t >= 0")->required();
  modd->add_option("-n", n, "argument")->required();
  modd->add_option("--method", method, "direct | explicit | oracle | all")
      ->check(CLI::IsMember({"direct", "explicit", "oracle", "all"}));

  std::vector<std::string> families;
  std::string profile = "quick";
  std::optional<unsigned long> budget;
  std::optional<std::string> j_text;
  auto* verify = app.add_subcommand("verify", "Sweep congruence families; JSON lines");
  verify->add_option("--family", families, "Family id (repeatable; trailing * matches a prefix)");
  verify->add_option("--profile", profile, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--budget", budget, "Largest argument");
  verify->add_option("--j", j_text, "J range a..b");

  std::string path;
  std::size_t lemma_order = 0;
  auto* lemmas = app.add_subcommand("lemmas", "Check a dissection fixture file");
  lemmas->add_option("path", path, "Fixture file")->required();
  lemmas->add_option("--order", lemma_order, "Minimum order (default: each fixture's check_to)");

  std::string seq;
  std::string range_text;
  std::optional<unsigned long> table_mod;
  auto* table = app.add_subcommand("table", "CSV table of a sequence");
  table->add_option("--seq", seq, "prefA | pbar | modd:<a>:<t> | coeff:<a>:<t> | expression")->required();
  table->add_option("--n", range_text, "Index range a..b")->required();
  table->add_option("--mod", table_mod, "Reduce values modulo m")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "List registered congruence families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  apply_thread_env();
  if (threads > 0) set_thread_cap(threads);

  try {
    if (*expand) return cmd_expand(expr, order, mod, format, out);
    if (*modd) return cmd_modd(a, t, n, method, out, err);
    if (*verify) return cmd_verify(families, profile, budget, j_text, out);
    if (*lemmas) return cmd_lemmas(path, lemma_order, out);
    if (*table) return cmd_table(seq, range_text, table_mod, out);
    if (*list) return cmd_list(out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qlab::cli
