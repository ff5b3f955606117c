// Command-line front end: count, enumerate, phi, series, verify.
//
// Exit codes: 0 success, 1 a verify check failed, 2 usage or domain error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "avoid/bijection.hpp"
#include "avoid/enumeration.hpp"
#include "avoid/errors.hpp"
#include "avoid/series.hpp"
#include "avoid/verify.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ClassFlags {
  std::size_t n = 0;
  std::string patterns = "1243,2134";
  bool start_small = false;
  std::optional<std::size_t> k;
  std::optional<std::size_t> j;
  bool json = false;
};

void add_class_flags(CLI::App* cmd, ClassFlags& f) {
  cmd->add_option("--n", f.n, "permutation length")->required();
  cmd->add_option("--patterns", f.patterns, "comma-separated patterns, or 'none'")->capture_default_str();
  cmd->add_flag("--start-small", f.start_small, "only permutations not starting with n");
  cmd->add_option("--k", f.k, "number of key mid-123 entries");
  cmd->add_option("--j", f.j, "position of the last mid-123 entry (requires --k)");
  cmd->add_flag("--json", f.json, "JSON output");
}

avoid::ClassDescriptor descriptor(const ClassFlags& f) {
  avoid::ClassDescriptor d;
  d.n = f.n;
  if (f.patterns != "none" && !f.patterns.empty()) d.patterns = avoid::parse_pattern_list(f.patterns);
  d.start_small_only = f.start_small;
  d.k = f.k;
  d.j = f.j;
  d.validate();
  return d;
}

int run_count(const ClassFlags& f) {
  const auto count = avoid::count_class(descriptor(f));
  if (f.json) {
    std::cout << nlohmann::json{{"count", count.str()}}.dump() << '\n';
  } else {
    std::cout << count << '\n';
  }
  return 0;
}

int run_enumerate(const ClassFlags& f) {
  const auto d = descriptor(f);
  if (f.json) {
    nlohmann::json arr = nlohmann::json::array();
    avoid::for_each_in_class(d, [&](const avoid::Permutation& p) { arr.push_back(avoid::to_string(p)); });
    std::cout << arr.dump() << '\n';
  } else {
    avoid::for_each_in_class(d, [](const avoid::Permutation& p) { std::cout << avoid::to_string(p) << '\n'; });
  }
  return 0;
}

int run_phi(const std::string& forward, const std::string& inverse, bool json) {
  if (!forward.empty()) {
    const auto list = avoid::phi(avoid::parse_permutation(forward));
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : list) arr.push_back(avoid::to_string(e));
      std::cout << nlohmann::json{{"list", arr}}.dump() << '\n';
    } else {
      std::cout << avoid::to_string(list) << '\n';
    }
    return 0;
  }
  const auto p = avoid::phi_inverse(avoid::parse_start_small_list(inverse));
  if (json) {
    std::cout << nlohmann::json{{"permutation", avoid::to_string(p)}}.dump() << '\n';
  } else {
    std::cout << avoid::to_string(p) << '\n';
  }
  return 0;
}

int run_series(const std::string& which, std::size_t order, bool json) {
  avoid::PowerSeries s(0);
  if (which == "catalan") {
    s = avoid::catalan_series(order);
  } else if (which == "G") {
    s = avoid::gf_start_small(order);
  } else if (which == "F") {
    s = avoid::gf_full(order);
  } else {
    s = avoid::kotesovec_series(order);
  }
  std::cout << (json ? avoid::format_json(s) + "\n" : avoid::format_lines(s));
  return 0;
}

int run_verify(std::size_t max_n, std::size_t order, bool deep, bool json) {
  avoid::VerifyOptions opts{deep ? 10 : max_n, order};
  const auto report = avoid::run_verify(opts);
  std::cout << (json ? report.json() + "\n" : report.table());
  if (const auto* first = report.first_failure()) {
    std::cerr << "first failure: " << first->name << ": " << first->detail << '\n';
    return kExitCheckFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"{1243, 2134}-avoiding permutations: counting, bijection, generating functions"};
  app.require_subcommand(1);

  ClassFlags count_flags;
  auto* count = app.add_subcommand("count", "count a permutation class");
  add_class_flags(count, count_flags);

  ClassFlags enum_flags;
  auto* enumerate = app.add_subcommand("enumerate", "print a permutation class, one per line");
  add_class_flags(enumerate, enum_flags);

  std::string forward;
  std::string inverse;
  bool phi_json = false;
  auto* phi = app.add_subcommand("phi", "apply the bijection to lists of start-small 123-avoiders or its inverse");
  auto* fwd = phi->add_option("--forward", forward, "start-small {1243, 2134}-avoider, e.g. \"1 2 3 4 5\"");
  auto* inv = phi->add_option("--inverse", inverse, "list such as \"1 2 | 1 2\"");
  fwd->excludes(inv);
  phi->add_flag("--json", phi_json, "JSON output");

  std::string which;
  std::size_t order = 0;
  bool series_json = false;
  auto* series = app.add_subcommand("series", "expand a generating function");
  series->add_option("--which", which, "catalan | G | F | kotesovec")
      ->required()
      ->check(CLI::IsMember({"catalan", "G", "F", "kotesovec"}));
  series->add_option("--order", order, "truncation order N")->required();
  series->add_flag("--json", series_json, "JSON array of decimal strings");

  std::size_t max_n = 8;
  std::size_t verify_order = 100;
  bool deep = false;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the verification sweep");
  verify->add_option("--max-n", max_n, "largest permutation length swept")->capture_default_str();
  verify->add_option("--order", verify_order, "series truncation order")->capture_default_str();
  verify->add_flag("--deep", deep, "sweep up to n = 10");
  verify->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_flags);
    if (enumerate->parsed()) return run_enumerate(enum_flags);
    if (phi->parsed()) {
      if (forward.empty() && inverse.empty()) {
        std::cerr << "phi: one of --forward or --inverse is required\n";
        return kExitUsage;
      }
      return run_phi(forward, inverse, phi_json);
    }
    if (series->parsed()) return run_series(which, order, series_json);
    if (verify->parsed()) return run_verify(max_n, verify_order, deep, verify_json);
  } catch (const avoid::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const avoid::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
