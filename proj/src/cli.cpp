#include "meyer/cli.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "meyer/matrix_io.hpp"
#include "meyer/verify.hpp"

namespace meyer {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());
}

json json_matrix(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Rationals cross the I/O boundary as "p/q" strings so nothing is rounded.
json json_rat_matrix(const RatMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_int_list(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& e : v) out.push_back(json_int(e));
  return out;
}

// Resolves the (--matrix | --word --g) input alternative shared by phi-v
// and torus.
UrSpElement ursp_input(bool matrix_given, const std::string& matrix_path,
                       bool word_given, const std::string& word_text,
                       std::size_t g) {
  if (matrix_given == word_given)
    throw Error("pass exactly one of --matrix or --word");
  if (matrix_given) return load_ursp_element(matrix_path);
  if (g == 0) throw Error("--word needs --g");
  return split_ursp(evaluate_word(parse_word(word_text), g));
}

void render_torus_text(const TorusHomologyReport& r, std::ostream& out) {
  out << "g: " << r.g << "\n";
  out << "h2_rank: " << r.h2_rank << "\n";
  out << "h2rel_rank: " << r.h2rel_rank << "\n";
  out << "h2rel_torsion:";
  if (r.h2rel_torsion.empty()) out << " (none)";
  for (const Int& e : r.h2rel_torsion) out << ' ' << e.str();
  out << "\n";
  out << "d_matrix:\n";
  out << (r.d_matrix.rows() == 0 ? "(empty)" : to_string(r.d_matrix)) << "\n";
  out << "intersection_gram:\n";
  out << (r.intersection_gram.rows() == 0 ? "(empty)"
                                          : to_string(r.intersection_gram))
      << "\n";
  out << "signature: " << r.signature << "\n";
  if (r.h1_torsion) {
    out << "h1_torsion:";
    if (r.h1_torsion->empty()) out << " (none)";
    for (const Int& e : *r.h1_torsion) out << ' ' << e.str();
    out << "\n";
  }
}

json torus_json(const TorusHomologyReport& r) {
  json doc;
  doc["g"] = r.g;
  doc["h2_rank"] = r.h2_rank;
  doc["h2rel_rank"] = r.h2rel_rank;
  doc["h2rel_torsion"] = json_int_list(r.h2rel_torsion);
  doc["d_matrix"] = json_matrix(r.d_matrix);
  doc["intersection_gram"] = json_rat_matrix(r.intersection_gram);
  doc["signature"] = r.signature;
  if (r.h1_torsion) doc["h1_torsion"] = json_int_list(*r.h1_torsion);
  return doc;
}

void render_verify_text(const std::vector<SuiteResult>& results,
                        std::ostream& out) {
  std::size_t total = 0, failed = 0;
  for (const SuiteResult& sr : results) {
    out << "suite " << sr.suite << "\n";
    std::string group;
    for (const CheckLine& c : sr.checks) {
      if (c.group != group) {
        group = c.group;
        out << "  [" << group << "]\n";
      }
      if (c.record) {
        out << "    " << c.label << " | " << (c.pass() ? "pass" : "fail")
            << "\n";
      } else {
        out << "    " << (c.pass() ? "ok   " : "FAIL ") << c.label << " ("
            << (c.total - c.failed) << "/" << c.total << ")";
        if (!c.pass() && !c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
      }
      total += c.total;
      failed += c.failed;
    }
  }
  out << (failed == 0 ? "PASS" : "FAIL") << ": " << total << " checks, "
      << failed << " failed\n";
}

json verify_json(const std::vector<SuiteResult>& results) {
  json doc;
  bool pass = true;
  json suites = json::array();
  for (const SuiteResult& sr : results) {
    json checks = json::array();
    for (const CheckLine& c : sr.checks) {
      json line;
      line["label"] = c.label;
      line["group"] = c.group;
      line["total"] = c.total;
      line["failed"] = c.failed;
      line["pass"] = c.pass();
      line["record"] = c.record;
      line["detail"] = c.detail;
      checks.push_back(std::move(line));
    }
    json s;
    s["suite"] = sr.suite;
    s["pass"] = sr.pass();
    s["checks"] = std::move(checks);
    suites.push_back(std::move(s));
    pass = pass && sr.pass();
  }
  doc["pass"] = pass;
  doc["suites"] = std::move(suites);
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Meyer functions, signature cocycle and mapping-torus "
               "homology on the integral symplectic group"};
  app.name("meyer");
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for the randomized suites")
      ->envname("MEYER_SEED");
  std::size_t cases = 100;
  app.add_option("--cases", cases, "cases per randomized check");

  auto* tau_cmd = app.add_subcommand("tau", "Meyer cocycle of two matrices");
  std::size_t tau_g = 0;
  std::string tau_a, tau_b;
  tau_cmd->add_option("--g", tau_g, "genus")->required()->check(CLI::PositiveNumber);
  tau_cmd->add_option("--a", tau_a, "matrix document for A")->required();
  tau_cmd->add_option("--b", tau_b, "matrix document for B")->required();
  tau_cmd->fallthrough();

  auto* phiv_cmd = app.add_subcommand("phi-v", "handlebody Meyer function");
  std::string phiv_matrix, phiv_word;
  std::size_t phiv_g = 0;
  auto* phiv_matrix_opt =
      phiv_cmd->add_option("--matrix", phiv_matrix, "urSp matrix document");
  auto* phiv_word_opt =
      phiv_cmd->add_option("--word", phiv_word, "word in t1,t2,t3,r1,s1");
  phiv_cmd->add_option("--g", phiv_g, "genus for --word")->check(CLI::PositiveNumber);
  phiv_cmd->fallthrough();

  auto* phih_cmd = app.add_subcommand("phi-h", "hyperelliptic Meyer function");
  std::string phih_word;
  std::size_t phih_g = 0;
  phih_cmd->add_option("--word", phih_word, "word in t1,t2,t3,r1,s1")->required();
  phih_cmd->add_option("--g", phih_g, "genus")->required()->check(CLI::PositiveNumber);
  phih_cmd->fallthrough();

  auto* mu_cmd = app.add_subcommand("mu", "the homomorphism mu");
  std::string mu_word;
  std::size_t mu_g = 0;
  mu_cmd->add_option("--word", mu_word, "word in t1,r1,s1")->required();
  mu_cmd->add_option("--g", mu_g, "genus")->required()->check(CLI::PositiveNumber);
  mu_cmd->fallthrough();

  auto* diff_cmd = app.add_subcommand("diff", "phi_h minus phi_v on a word");
  std::string diff_word;
  std::size_t diff_g = 0;
  diff_cmd->add_option("--word", diff_word, "word in t1,r1,s1")->required();
  diff_cmd->add_option("--g", diff_g, "genus")->required()->check(CLI::PositiveNumber);
  diff_cmd->fallthrough();

  auto* torus_cmd =
      app.add_subcommand("torus", "mapping-torus homology report");
  std::string torus_matrix, torus_word;
  std::size_t torus_g = 0;
  bool torus_h1 = false;
  auto* torus_matrix_opt =
      torus_cmd->add_option("--matrix", torus_matrix, "urSp matrix document");
  auto* torus_word_opt =
      torus_cmd->add_option("--word", torus_word, "word in t1,t2,t3,r1,s1");
  torus_cmd->add_option("--g", torus_g, "genus for --word")
      ->check(CLI::PositiveNumber);
  torus_cmd->add_flag("--h1-torsion", torus_h1,
                      "also report the torsion of H1 of the torus");
  torus_cmd->fallthrough();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word to a matrix");
  std::string eval_word;
  std::size_t eval_g = 0;
  eval_cmd->add_option("--word", eval_word, "word in t1,t2,t3,r1,s1")->required();
  eval_cmd->add_option("--g", eval_g, "genus")->required()->check(CLI::PositiveNumber);
  eval_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  std::size_t verify_g = 0;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", verify_suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify_cmd
      ->add_option("--g", verify_g, "genus (0 = each suite's default range)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (*tau_cmd) {
      const SpElement a = load_sp_element(tau_a);
      const SpElement b = load_sp_element(tau_b);
      if (a.genus() != tau_g || b.genus() != tau_g)
        throw GenusMismatch("--g does not match the documents");
      const long long t = tau(a, b);
      if (as_json)
        out << json{{"tau", t}}.dump() << "\n";
      else
        out << t << "\n";
      return 0;
    }
    if (*phiv_cmd) {
      const UrSpElement a =
          ursp_input(phiv_matrix_opt->count() > 0, phiv_matrix,
                     phiv_word_opt->count() > 0, phiv_word, phiv_g);
      const long long v = phi_v(a);
      if (as_json)
        out << json{{"phi_v", v}}.dump() << "\n";
      else
        out << v << "\n";
      return 0;
    }
    if (*phih_cmd) {
      const Rat v = phi_h(parse_word(phih_word), phih_g);
      if (as_json)
        out << json{{"phi_h", to_string(v)}}.dump() << "\n";
      else
        out << to_string(v) << "\n";
      return 0;
    }
    if (*mu_cmd) {
      const Rat v = mu(parse_word(mu_word), mu_g);
      if (as_json)
        out << json{{"mu", to_string(v)}}.dump() << "\n";
      else
        out << to_string(v) << "\n";
      return 0;
    }
    if (*diff_cmd) {
      const Rat v = difference(parse_word(diff_word), diff_g);
      if (as_json)
        out << json{{"difference", to_string(v)}}.dump() << "\n";
      else
        out << to_string(v) << "\n";
      return 0;
    }
    if (*torus_cmd) {
      const UrSpElement a =
          ursp_input(torus_matrix_opt->count() > 0, torus_matrix,
                     torus_word_opt->count() > 0, torus_word, torus_g);
      const TorusHomologyReport r = mapping_torus_homology(a, torus_h1);
      if (as_json)
        out << torus_json(r).dump() << "\n";
      else
        render_torus_text(r, out);
      return 0;
    }
    if (*eval_cmd) {
      const SpElement a = evaluate_word(parse_word(eval_word), eval_g);
      if (as_json)
        out << to_json(a) << "\n";
      else
        out << to_string(a.matrix()) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      const std::vector<SuiteResult> results =
          run_verify(verify_suite, verify_g, seed, cases);
      if (as_json)
        out << verify_json(results).dump() << "\n";
      else
        render_verify_text(results, out);
      for (const SuiteResult& sr : results)
        if (!sr.pass()) return 1;
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace meyer
