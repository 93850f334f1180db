// Command-line front end: exact subgroup counts of Z_m x Z_n x Z_r x Z_s,
// the matching polynomials in p for prime-power inputs, the N(n) table, a
// brute-force verification sweep, and an empirical conjecture scanner.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subcount/numth.hpp"
#include "subcount/oracle.hpp"
#include "subcount/polynomial.hpp"
#include "subcount/rank4.hpp"

namespace {

using json = nlohmann::ordered_json;
using subcount::Int;
using subcount::Polynomial;
using subcount::u64;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailed = 3;

// Counts always travel as decimal strings; JSON numbers would silently lose
// precision past 2^53 in common consumers.
json int_json(const Int& value) { return value.get_str(); }

json coeffs_json(const Polynomial& poly) {
  json arr = json::array();
  for (const Int& c : poly.coeffs()) {
    if (c.fits_slong_p())
      arr.push_back(static_cast<std::int64_t>(c.get_si()));
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

struct CountArgs {
  std::vector<u64> mnrs;
  std::string order;  // decimal string
  bool has_order = false;
  std::string via = "primes";
};

int run_count(const CountArgs& args, const std::string& format) {
  const u64 m = args.mnrs[0], n = args.mnrs[1], r = args.mnrs[2],
            s = args.mnrs[3];
  const bool direct = args.via == "direct";
  Int result;
  if (!args.has_order) {
    result = direct ? subcount::count_rank4(m, n, r, s)
                    : subcount::count_via_primes(m, n, r, s);
  } else {
    const Int k(args.order);
    result = direct ? subcount::count_rank4_order(m, n, r, s, k)
                    : subcount::count_via_primes(m, n, r, s, k);
  }
  if (format == "json") {
    json inputs = {{"m", m}, {"n", n}, {"r", r}, {"s", s}};
    if (args.has_order) inputs["k"] = Int(args.order).get_str();
    emit({{"kind", "count"},
          {"inputs", inputs},
          {"value", int_json(result)},
          {"meta", {{"via", args.via}}}});
  } else {
    std::cout << result.get_str() << "\n";
  }
  return kExitOk;
}

struct PolyArgs {
  std::vector<unsigned> abcd;
  int order = -1;  // -1 = total count polynomial
  u64 eval_at = 0; // 0 = print the polynomial itself
};

int run_poly(const PolyArgs& args, const std::string& format) {
  const unsigned a = args.abcd[0], b = args.abcd[1], c = args.abcd[2],
                 d = args.abcd[3];
  Polynomial poly;
  if (args.order < 0) {
    poly = subcount::poly_rank4(a, b, c, d);
  } else {
    poly = subcount::poly_rank4_order(a, b, c, d,
                                      static_cast<unsigned>(args.order));
  }
  json inputs = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  if (args.order >= 0) inputs["k"] = args.order;

  if (args.eval_at != 0) {
    if (!is_prime_u64(args.eval_at))
      throw std::invalid_argument("poly: --eval expects a prime >= 2");
    const Int value = poly.eval(Int(args.eval_at));
    if (format == "json") {
      inputs["p"] = args.eval_at;
      emit({{"kind", "count"},
            {"inputs", inputs},
            {"value", int_json(value)},
            {"meta", {{"via", "polynomial"}}}});
    } else {
      std::cout << value.get_str() << "\n";
    }
    return kExitOk;
  }

  if (format == "json") {
    emit({{"kind", "polynomial"},
          {"inputs", inputs},
          {"value", coeffs_json(poly)},
          {"meta", json::object()}});
  } else {
    std::cout << poly.to_string() << "\n";
  }
  return kExitOk;
}

int run_table(u64 max_n, const std::string& format) {
  const auto rows = subcount::table_N(max_n);
  if (format == "json") {
    json value = json::array();
    for (const auto& [n, count] : rows)
      value.push_back({{"n", n}, {"count", int_json(count)}});
    emit({{"kind", "table"},
          {"inputs", {{"max", max_n}}},
          {"value", value},
          {"meta", json::object()}});
  } else {
    for (const auto& [n, count] : rows)
      std::cout << n << " " << count.get_str() << "\n";
  }
  return kExitOk;
}

int run_verify(u64 max_order, const std::string& format) {
  if (max_order < 1 || max_order > subcount::kDefaultOrderBound)
    throw std::invalid_argument(
        "verify: --max-order must be between 1 and " +
        std::to_string(subcount::kDefaultOrderBound));
  u64 tuples = 0, orders = 0;
  json mismatch;
  bool ok = true;
  for (u64 m = 1; ok && m * m * m * m <= max_order; ++m) {
    for (u64 n = m; ok && m * n * n * n <= max_order; ++n) {
      for (u64 r = n; ok && m * n * r * r <= max_order; ++r) {
        for (u64 s = r; ok && m * n * r * s <= max_order; ++s) {
          const auto census = subcount::enumerate_subgroups(
              subcount::FiniteAbelianGroup{{m, n, r, s}}, max_order);
          ++tuples;
          const Int total = subcount::count_rank4(m, n, r, s);
          if (total != census.total) {
            ok = false;
            mismatch = {{"m", m},      {"n", n},
                        {"r", r},      {"s", s},
                        {"oracle", census.total},
                        {"formula", int_json(total)}};
            break;
          }
          for (u64 k : subcount::divisors(m * n * r * s)) {
            ++orders;
            const Int by_formula =
                subcount::count_rank4_order(m, n, r, s, Int(k));
            const auto it = census.by_order.find(k);
            const u64 by_oracle = it == census.by_order.end() ? 0 : it->second;
            if (by_formula != by_oracle) {
              ok = false;
              mismatch = {{"m", m},      {"n", n},
                          {"r", r},      {"s", s},
                          {"k", k},      {"oracle", by_oracle},
                          {"formula", int_json(by_formula)}};
              break;
            }
          }
        }
      }
    }
  }
  if (format == "json") {
    json meta = {{"tuples", tuples}, {"orders", orders}};
    if (!ok) meta["mismatch"] = mismatch;
    emit({{"kind", "report"},
          {"inputs", {{"max_order", max_order}}},
          {"value", ok ? "pass" : "fail"},
          {"meta", meta}});
  } else if (ok) {
    std::cout << "verified " << tuples << " groups of order <= " << max_order
              << " (" << orders << " order classes): oracle and formulas agree\n";
  } else {
    std::cout << "MISMATCH: " << mismatch.dump() << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_conjectures(unsigned max_exp, const std::string& format) {
  const auto report = subcount::check_conjectures(max_exp);
  std::vector<subcount::SymmetryReport> symmetry;
  for (unsigned a = 1; a <= max_exp; ++a)
    for (unsigned b = a; b <= max_exp; ++b)
      for (unsigned c = b; c <= max_exp; ++c)
        for (unsigned d = c; d <= max_exp; ++d)
          symmetry.push_back(subcount::check_symmetry_unimodality(a, b, c, d));

  bool all = report.all_pass();
  for (const auto& s : symmetry) all = all && s.symmetric && s.unimodal;

  if (format == "json") {
    json degree = json::array();
    for (const auto& f : report.degree)
      degree.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d},
                        {"degree", f.degree}, {"expected", f.expected},
                        {"pass", f.pass}});
    json diagonal = json::array();
    for (const auto& f : report.diagonal)
      diagonal.push_back({{"m", f.m}, {"degree", f.degree},
                          {"expected", f.expected},
                          {"leading", f.leading.get_str()},
                          {"pass", f.pass}});
    json sym = json::array();
    for (const auto& s : symmetry)
      sym.push_back({{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d},
                     {"symmetric", s.symmetric}, {"unimodal", s.unimodal}});
    emit({{"kind", "report"},
          {"inputs", {{"max_exp", max_exp}}},
          {"value", all ? "pass" : "fail"},
          {"meta", {{"degree", degree}, {"diagonal", diagonal},
                    {"symmetry", sym}}}});
  } else {
    for (const auto& f : report.degree)
      std::cout << "degree (" << f.a << "," << f.b << "," << f.c << "," << f.d
                << "): " << f.degree << " expected " << f.expected << " -> "
                << (f.pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : report.diagonal)
      std::cout << "diagonal m=" << f.m << ": degree " << f.degree
                << " expected " << f.expected << ", leading "
                << f.leading.get_str() << " -> " << (f.pass ? "pass" : "FAIL")
                << "\n";
    for (const auto& s : symmetry)
      std::cout << "symmetry/unimodality (" << s.a << "," << s.b << "," << s.c
                << "," << s.d << "): "
                << (s.symmetric && s.unimodal ? "pass" : "FAIL") << "\n";
    std::cout << (all ? "all checks pass within the scanned range"
                      : "some checks FAILED")
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subgroup counts of Z_m x Z_n x Z_r x Z_s"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "total or order-k subgroup count");
  count->add_option("mnrs", count_args.mnrs, "moduli m n r s")
      ->required()
      ->expected(4)
      ->check(CLI::PositiveNumber);
  count->add_option("--order", count_args.order,
                    "count only subgroups of this order (divides m*n*r*s)");
  count->add_option("--via", count_args.via, "evaluation route")
      ->check(CLI::IsMember({"primes", "direct"}))
      ->capture_default_str();

  PolyArgs poly_args;
  auto* poly = app.add_subcommand(
      "poly", "subgroup-count polynomial in p for Z_{p^a} x ... x Z_{p^d}");
  poly->add_option("abcd", poly_args.abcd, "exponents a b c d")
      ->required()
      ->expected(4)
      ->check(CLI::NonNegativeNumber);
  poly->add_option("--order", poly_args.order,
                   "exponent k of the subgroup order p^k")
      ->check(CLI::NonNegativeNumber);
  poly->add_option("--eval", poly_args.eval_at,
                   "evaluate the polynomial at this prime")
      ->check(CLI::PositiveNumber);

  u64 table_max = 30;
  auto* table = app.add_subcommand("table", "table of N(Z_n^4) for n = 1..max");
  table->add_option("--max", table_max, "last row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  u64 verify_max = 64;
  auto* verify = app.add_subcommand(
      "verify", "compare formulas against brute-force subgroup enumeration");
  verify->add_option("--max-order", verify_max,
                     "check all groups of order up to this bound")
      ->capture_default_str();

  unsigned conj_max = 3;
  auto* conjectures = app.add_subcommand(
      "conjectures", "empirical degree/symmetry/unimodality scan");
  conjectures->add_option("--max-exp", conj_max, "largest exponent scanned")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  for (auto* sub : {count, poly, table, verify, conjectures})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*count) {
      count_args.has_order = count->count("--order") > 0;
      return run_count(count_args, format);
    }
    if (*poly) return run_poly(poly_args, format);
    if (*table) return run_table(table_max, format);
    if (*verify) return run_verify(verify_max, format);
    if (*conjectures) return run_conjectures(conj_max, format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  } catch (const subcount::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
