#include "uinf/oracle.hpp"
#include "uinf/parse.hpp"
#include "uinf/props.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

json partition_json(const uinf::Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

json image_json(const uinf::GrVector& image) {
  json arr = json::array();
  for (const auto& [key, coeff] : image.terms()) {
    arr.push_back({{"level", key.level},
                   {"partition", partition_json(key.partition)},
                   {"coeff", coeff.str()}});
  }
  return arr;
}

json report_json(const uinf::MembershipReport& rep) {
  json j;
  j["member"] = rep.member;
  j["checked_columns"] = rep.checked_columns;
  if (rep.witness) {
    j["witness"] = {{"column", rep.witness->column},
                    {"partition", partition_json(rep.witness->partition)},
                    {"image", image_json(rep.witness->image)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json results_json(const std::vector<uinf::CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json item = {{"name", r.name}, {"params", r.parameters}, {"passed", r.passed}};
    item["detail"] = r.detail ? json(*r.detail) : json(nullptr);
    arr.push_back(std::move(item));
  }
  return arr;
}

int print_results(const std::vector<uinf::CheckResult>& results, bool as_json) {
  bool all_passed = true;
  for (const auto& r : results) all_passed &= r.passed;
  if (as_json) {
    std::cout << results_json(results).dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " | " << r.parameters;
      if (r.detail) std::cout << " | " << *r.detail;
      std::cout << '\n';
    }
    std::cout << results.size() << " checks, "
              << std::count_if(results.begin(), results.end(),
                               [](const uinf::CheckResult& r) { return !r.passed; })
              << " failed\n";
  }
  return all_passed ? 0 : 1;
}

uinf::GrVector maybe_evaluate(const uinf::GrVector& image,
                              const std::optional<uinf::Rational>& lambda0) {
  return lambda0 ? image.evaluate_at(*lambda0) : image;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the matrix vertex algebra U^inf(M(1)): products, "
               "Q^inf membership, and the verification suites"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string lambda_text;
  app.add_flag("--json", as_json, "emit structured JSON records");
  app.add_option("--lambda", lambda_text,
                 "evaluate formal-λ output numerically at this rational (e.g. 3/2)");

  std::string lhs_text, rhs_text, element_text, suite = "all";
  unsigned level_n = 0, n_max = 4;

  CLI::App* circ = app.add_subcommand("circ", "u ∘_n v (level-n Zhu ideal element)");
  circ->add_option("--n", level_n, "level n")->required();
  circ->add_option("u", lhs_text, "left vector literal")->required();
  circ->add_option("v", rhs_text, "right vector literal")->required();

  CLI::App* star = app.add_subcommand("star", "u *_n v (level-n Zhu product)");
  star->add_option("--n", level_n, "level n")->required();
  star->add_option("u", lhs_text, "left vector literal")->required();
  star->add_option("v", rhs_text, "right vector literal")->required();

  CLI::App* dia = app.add_subcommand("diamond", "A ◇ B on U^inf(M(1))");
  dia->add_option("A", lhs_text, "left UElement literal")->required();
  dia->add_option("B", rhs_text, "right UElement literal")->required();

  CLI::App* check = app.add_subcommand("check-qinf", "decide Q^inf membership of a UElement");
  check->add_option("element", element_text, "UElement literal, e.g. \"[a(-1)|0>]{1,1}\"")
      ->required();

  CLI::App* counter = app.add_subcommand(
      "counterexample", "run the diagonal-shift counterexample family E_n for n = 1..N");
  counter->add_option("--n-max", n_max, "largest n (default 4)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "jacobi|diamond-star|mult|theorem-main|counterexample|a1-heis|all");

  for (CLI::App* sub : {circ, star, dia, check, counter, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  std::optional<uinf::Rational> lambda0;
  try {
    if (!lambda_text.empty()) lambda0 = uinf::Rational(lambda_text);
  } catch (const std::exception&) {
    std::cerr << "error: --lambda expects a rational like -3/2\n";
    return 2;
  }

  try {
    if (circ->parsed() || star->parsed()) {
      uinf::FockVector u = uinf::parse_fock(lhs_text);
      uinf::FockVector v = uinf::parse_fock(rhs_text);
      uinf::FockVector r = circ->parsed() ? uinf::circ_n(u, v, level_n)
                                          : uinf::star_n(u, v, level_n);
      if (as_json) {
        std::cout << json{{"element", r.str()}}.dump(2) << '\n';
      } else {
        std::cout << r.str() << '\n';
      }
      return 0;
    }

    if (dia->parsed()) {
      uinf::UElement a = uinf::parse_uelement(lhs_text);
      uinf::UElement b = uinf::parse_uelement(rhs_text);
      uinf::UElement r = uinf::diamond(a, b);
      if (as_json) {
        std::cout << json{{"element", r.str()}}.dump(2) << '\n';
      } else {
        std::cout << r.str() << '\n';
      }
      return 0;
    }

    if (check->parsed()) {
      uinf::UElement a = uinf::parse_uelement(element_text);
      uinf::MembershipReport rep = uinf::in_qinf(a);
      if (rep.witness) rep.witness->image = maybe_evaluate(rep.witness->image, lambda0);
      if (as_json) {
        std::cout << report_json(rep).dump(2) << '\n';
      } else if (rep.member) {
        std::cout << "member of Q^inf(M(1))\n";
      } else {
        std::cout << "NOT a member of Q^inf(M(1)): witness at column " << rep.witness->column
                  << ", partition " << rep.witness->partition.str() << ", image "
                  << rep.witness->image.str() << '\n';
      }
      return rep.member ? 0 : 1;
    }

    if (counter->parsed()) {
      if (n_max < 1) {
        std::cerr << "error: --n-max must be at least 1\n";
        return 2;
      }
      std::vector<uinf::CheckResult> rows;
      for (unsigned n = 1; n <= n_max; ++n) {
        uinf::UElement e = uinf::counterexample_element(n);
        uinf::DiagonalShiftReport rep = uinf::diagonal_shift_report(e);
        bool ok = rep.original.member && !rep.shifted.member;
        std::ostringstream detail;
        if (ok) {
          const uinf::Witness& w = *rep.shifted.witness;
          detail << "member; shifted non-member with witness at column " << w.column
                 << ", partition " << w.partition.str() << ", image "
                 << maybe_evaluate(w.image, lambda0).str();
        } else {
          detail << "original " << (rep.original.member ? "member" : "non-member") << ", shifted "
                 << (rep.shifted.member ? "member" : "non-member");
        }
        uinf::CheckResult row;
        row.name = "counterexample";
        row.parameters = "n=" + std::to_string(n);
        row.passed = ok;
        row.detail = detail.str();
        rows.push_back(std::move(row));
      }
      return print_results(rows, as_json);
    }

    if (verify->parsed()) {
      std::vector<uinf::CheckResult> results = uinf::run_suite(suite);
      return print_results(results, as_json);
    }
  } catch (const uinf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
