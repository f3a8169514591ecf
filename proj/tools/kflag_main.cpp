#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "kflag/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotExact = 3;

kflag::RootSystem make_root_system(const std::string& type, const std::string& matrix) {
  if (type.empty() == matrix.empty())
    throw kflag::validation_error("provide exactly one of --type and --matrix");
  if (!type.empty()) return kflag::RootSystem(type);
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(matrix);
  } catch (const std::exception& e) {
    throw kflag::validation_error(std::string("cannot parse --matrix: ") + e.what());
  }
  kflag::CartanMatrix m;
  if (!parsed.is_array()) throw kflag::validation_error("--matrix must be an array of rows");
  for (const auto& row : parsed) {
    if (!row.is_array()) throw kflag::validation_error("--matrix rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw kflag::validation_error("--matrix entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.entries.push_back(std::move(r));
  }
  return kflag::RootSystem(std::move(m));
}

std::string poly_out(const kflag::RootSystem& rs, const kflag::LaurentPoly& p,
                     const std::string& coords, const std::string& output) {
  kflag::CoordMode mode = kflag::parse_coord_mode(coords);
  return output == "text" ? kflag::poly_to_text(rs, p, mode) : kflag::poly_to_json(rs, p, mode);
}

std::string graded_poly_to_json(const kflag::Poly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json term;
    ordered_json exp = ordered_json::array();
    for (auto x : e) exp.push_back(x);
    term["exp"] = std::move(exp);
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  ordered_json out;
  out["terms"] = std::move(terms);
  return out.dump();
}

std::string graded_poly_to_text(const kflag::Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    kflag::Int mag = c < 0 ? kflag::Int(-c) : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    bool constant = true;
    std::string vars;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "a" + std::to_string(k + 1);
      if (e[k] > 1) vars += "^" + std::to_string(e[k]);
      constant = false;
    }
    if (mag != 1 || constant) {
      out += mag.str();
      if (!constant) out += "*";
    }
    out += vars;
  }
  return out;
}

void print_report(const kflag::SuiteReport& report, const std::string& output, std::ostream& os) {
  if (output == "json") {
    ordered_json j;
    j["suite"] = report.suite;
    j["passed"] = report.passed;
    j["checks"] = report.checks;
    j["failures"] = report.failures;
    os << j.dump() << "\n";
    return;
  }
  os << "suite " << report.suite << ": " << (report.passed ? "PASS" : "FAIL") << " ("
     << report.checks << " checks)\n";
  for (const auto& f : report.failures) os << "  " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant K-theory computations for flag varieties"};
  app.require_subcommand(1);

  std::string type, matrix, w_text, v_text, word_text, eps_text, eps_prime_text;
  std::string coords = "root", output, suite;
  int max_len = 5;
  unsigned trials = 100;

  auto add_system_opts = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "Named type, e.g. A3, B2, G2, A1xA1");
    cmd->add_option("--matrix", matrix, "Cartan matrix as a JSON array of rows");
  };

  CLI::App* roots = app.add_subcommand("roots", "List the positive roots");
  add_system_opts(roots);
  roots->add_option("--output", output, "json or text");

  CLI::App* psi = app.add_subcommand("psi", "Fixed-point basis value psi^w along a word");
  add_system_opts(psi);
  psi->add_option("--w", w_text, "Word for the basis element w")->required();
  psi->add_option("--v", v_text, "Evaluation word (need not be reduced)")->required();
  psi->add_option("--coords", coords, "Exponent basis: root or fundamental");
  psi->add_option("--output", output, "json or text");

  CLI::App* xi = app.add_subcommand("xi", "Graded-limit value xi^w along a reduced word");
  add_system_opts(xi);
  xi->add_option("--w", w_text, "Word for the basis element w")->required();
  xi->add_option("--v", v_text, "Reduced evaluation word")->required();
  xi->add_option("--output", output, "json or text");

  CLI::App* sig = app.add_subcommand("sigma", "Structure sheaf class as a fixed-point function");
  add_system_opts(sig);
  sig->add_option("--w", w_text, "Word for the element w")->required();
  sig->add_option("--coords", coords, "Exponent basis: root or fundamental");
  sig->add_option("--output", output, "json or text");

  CLI::App* mu_cmd = app.add_subcommand("mu", "Cube fixed-point basis value mu_eps(eps')");
  add_system_opts(mu_cmd);
  mu_cmd->add_option("--word", word_text, "Word of the desingularization")->required();
  mu_cmd->add_option("--eps", eps_text, "Basis vertex, a bit string")->required();
  mu_cmd->add_option("--eps-prime", eps_prime_text, "Evaluation vertex, a bit string")->required();
  mu_cmd->add_option("--coords", coords, "Exponent basis: root or fundamental");
  mu_cmd->add_option("--output", output, "json or text");

  CLI::App* bco = app.add_subcommand("bcoeff", "Structure sheaf coefficient b^v from a word");
  add_system_opts(bco);
  bco->add_option("--v", v_text, "Word for v (need not be reduced)")->required();
  bco->add_option("--coords", coords, "Exponent basis: root or fundamental");
  bco->add_option("--output", output, "json or text");

  CLI::App* thm5 = app.add_subcommand(
      "theorem5", "Compare the triangular expansion of sigma^w with the closed form");
  add_system_opts(thm5);
  thm5->add_option("--output", output, "json or text");

  CLI::App* ver = app.add_subcommand("verify", "Run verification suites");
  add_system_opts(ver);
  ver->add_option("--suite", suite, "One suite name; omit to run all");
  ver->add_option("--max-len", max_len, "Word length bound for bs-delta");
  ver->add_option("--trials", trials, "Random trials per exchange relation");
  ver->add_option("--output", output, "json or text");

  CLI::App* bsv = app.add_subcommand("bs-verify", "Localization checks for one word");
  add_system_opts(bsv);
  bsv->add_option("--word", word_text, "Word of the desingularization")->required();
  bsv->add_option("--output", output, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(roots)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      std::cout << (output == "text" ? kflag::roots_to_text(rs)
                                     : kflag::roots_to_json(rs) + "\n");
      return 0;
    }

    if (app.got_subcommand(psi)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::WeylElement w = kflag::element_from_word(rs, kflag::parse_word(w_text));
      kflag::LaurentPoly value = kflag::psi(rs, w, kflag::parse_word(v_text));
      std::cout << poly_out(rs, value, coords, output) << "\n";
      return 0;
    }

    if (app.got_subcommand(xi)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::WeylElement w = kflag::element_from_word(rs, kflag::parse_word(w_text));
      kflag::Poly value = kflag::xi(rs, w, kflag::parse_word(v_text));
      std::cout << (output == "text" ? graded_poly_to_text(value) : graded_poly_to_json(value))
                << "\n";
      return 0;
    }

    if (app.got_subcommand(sig)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::WeylElement w = kflag::element_from_word(rs, kflag::parse_word(w_text));
      kflag::FixedPointFn fn = kflag::sigma(rs, w);
      kflag::CoordMode mode = kflag::parse_coord_mode(coords);
      std::cout << (output == "text" ? kflag::element_map_to_text(rs, fn.values, mode)
                                     : kflag::element_map_to_json(rs, fn.values, mode) + "\n");
      return 0;
    }

    if (app.got_subcommand(mu_cmd)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::Word word = kflag::parse_word(word_text);
      kflag::LaurentPoly value = kflag::mu(rs, word, kflag::parse_epsilon(eps_text),
                                           kflag::parse_epsilon(eps_prime_text));
      std::cout << poly_out(rs, value, coords, output) << "\n";
      return 0;
    }

    if (app.got_subcommand(bco)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::LaurentPoly value = kflag::b_coeff(rs, kflag::parse_word(v_text));
      std::cout << poly_out(rs, value, coords, output) << "\n";
      return 0;
    }

    if (app.got_subcommand(thm5)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      const auto elements = kflag::all_elements(rs);
      bool all_ok = true;
      ordered_json rows = ordered_json::object();
      for (const auto& w : elements) {
        auto expansion = kflag::expand_sigma(rs, w);
        ordered_json row = ordered_json::object();
        std::string line;
        for (const auto& v : elements) {
          bool ok = expansion.at(v) == kflag::a_coeff(rs, w, v);
          all_ok = all_ok && ok;
          row[kflag::format_word(v.canonical_word())] = ok;
          line += ok ? " ok" : " FAIL";
        }
        if (output != "json")
          std::cout << "sigma^{" << kflag::format_word(w.canonical_word()) << "}:" << line << "\n";
        rows[kflag::format_word(w.canonical_word())] = std::move(row);
      }
      if (output == "json") {
        ordered_json j;
        j["matrix"] = std::move(rows);
        j["passed"] = all_ok;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
      }
      return all_ok ? 0 : kExitVerifyFailed;
    }

    if (app.got_subcommand(ver)) {
      kflag::SuiteOptions opts;
      opts.max_word_len = max_len;
      opts.trials = trials;
      std::optional<kflag::RootSystem> rs;
      if (!type.empty() || !matrix.empty()) rs.emplace(make_root_system(type, matrix));
      std::vector<std::string> names =
          suite.empty() ? kflag::suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& name : names) {
        kflag::SuiteReport report =
            kflag::run_suite(rs.has_value() ? &rs.value() : nullptr, name, opts);
        all_ok = all_ok && report.passed;
        print_report(report, output, std::cout);
      }
      return all_ok ? 0 : kExitVerifyFailed;
    }

    if (app.got_subcommand(bsv)) {
      kflag::RootSystem rs = make_root_system(type, matrix);
      kflag::Word word = kflag::parse_word(word_text);
      const int n = static_cast<int>(word.size());
      const auto cube = kflag::all_epsilons(n);
      kflag::SuiteReport report;
      report.suite = "bs-verify " + kflag::format_word(word);
      for (const auto& eps : cube) {
        kflag::BSFn f;
        for (const auto& other : cube) f.values.emplace(other, kflag::mu(rs, word, eps, other));
        for (const auto& eps_prime : cube) {
          kflag::LaurentPoly expected =
              eps == eps_prime ? kflag::LaurentPoly::one(rs.rank()) : kflag::LaurentPoly::zero();
          bool ok;
          try {
            ok = kflag::frac_to_poly(kflag::euler_char(rs, word, eps_prime, f)) == expected;
          } catch (const kflag::not_divisible_error&) {
            ok = false;
          }
          report.record(ok, "mu at " + eps.to_string() + " against " + eps_prime.to_string());
        }
      }
      for (const auto& w : kflag::all_elements(rs)) {
        for (const auto& eps : cube) {
          report.record(kflag::euler_delta_check(rs, word, w, eps),
                        "pullback delta at w = " + w.to_string() + ", vertex " + eps.to_string());
        }
      }
      print_report(report, output, std::cout);
      return report.passed ? 0 : kExitVerifyFailed;
    }
  } catch (const kflag::not_divisible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotExact;
  } catch (const kflag::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const kflag::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
