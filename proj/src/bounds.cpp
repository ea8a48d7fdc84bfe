#include "cliquelab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace cliquelab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_even(long n, const char* who) {
  require(n >= 2 && n % 2 == 0,
          std::string(who) + " requires even n >= 2, got " +
              std::to_string(n));
}

ExactInt pow2(unsigned long e) {
  ExactInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
  return v;
}

unsigned long to_ulong_exact(const ExactInt& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw std::overflow_error(std::string(what) +
                              " does not fit a machine word: " +
                              v.get_str());
  }
  return v.get_ui();
}

}  // namespace

std::string to_decimal(const ExactInt& v) { return v.get_str(); }

std::string to_decimal(const ExactRatio& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

ExactInt factorial(long n) {
  require(n >= 0, "factorial requires n >= 0, got " + std::to_string(n));
  ExactInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactInt binomial(long n, long q) {
  require(n >= 0 && q >= 0,
          "binomial requires nonnegative arguments, got n=" +
              std::to_string(n) + ", q=" + std::to_string(q));
  require(q <= n, "binomial requires q <= n, got n=" + std::to_string(n) +
                      ", q=" + std::to_string(q));
  ExactInt r = 1;
  for (long i = 1; i <= q; ++i) {
    r *= (n - q + i);
    r /= i;  // exact: r is C(n-q+i, i) after this step
  }
  return r;
}

ExactRatio binomial_step_ratio(long n, long q) {
  require(q >= 0 && q < n,
          "step ratio requires 0 <= q < n, got n=" + std::to_string(n) +
              ", q=" + std::to_string(q));
  ExactRatio r(n - q, q + 1);
  r.canonicalize();
  return r;
}

long argmax_binomial(long n) {
  require(n >= 1, "argmax requires n >= 1, got " + std::to_string(n));
  return n / 2;
}

ExactInt central_binomial(long n) {
  require_even(n, "central_binomial");
  return binomial(n, n / 2);
}

ExactRatio central_binomial_floor(long n) {
  require_even(n, "central_binomial_floor");
  ExactRatio r(pow2(static_cast<unsigned long>(n)), ExactInt(n + 1));
  r.canonicalize();
  return r;
}

bool central_binomial_exceeds_floor(long n) {
  ExactRatio lhs(central_binomial(n));
  return lhs > central_binomial_floor(n);
}

ExactRatio floor_growth_ratio(long n) {
  require(n >= 1, "growth ratio requires n >= 1, got " + std::to_string(n));
  ExactInt p = pow2(static_cast<unsigned long>(n));
  ExactRatio envelope(p, ExactInt(n + 1));
  envelope.canonicalize();
  ExactRatio crude(p, ExactInt(n));
  crude.canonicalize();
  return envelope / crude;  // collapses to n/(n+1)
}

double log_gamma(double z) {
  // Lanczos, g = 671/128 with the matching 14-term coefficient set; the
  // relative error stays near 1e-15 on the positive axis, far inside the
  // 1e-9 the duplication checks ask for.
  static constexpr double kCoef[14] = {
      57.1562356658629235,      -59.5979603554754912,
      14.1360979747417471,      -0.491913816097620199,
      0.339946499848118887e-4,  0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  require(z > 0.0, "log_gamma requires z > 0, got " + std::to_string(z));
  double y = z;
  double tmp = z + 5.24218750000000000;  // z + g + 1/2
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : kCoef) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / z);
}

double gamma_duplication_residual(double z) {
  require(z > 0.0,
          "duplication residual requires z > 0, got " + std::to_string(z));
  double lhs = log_gamma(z) + log_gamma(z + 0.5);
  double rhs = (1.0 - 2.0 * z) * std::log(2.0) +
               0.5 * std::log(std::numbers::pi) + log_gamma(2.0 * z);
  return std::abs(lhs - rhs);
}

ExactInt comparison_lower_bound(long n) {
  require(n >= 1, "lower bound requires n >= 1, got " + std::to_string(n));
  ExactInt f = factorial(n);
  if (f <= 1) return 0;
  // ceil(log2 x) for x > 1 is the bit length of x - 1.
  ExactInt m = f - 1;
  return ExactInt(mpz_sizeinbase(m.get_mpz_t(), 2));
}

double comparison_bound_estimate(long n) {
  require(n >= 1, "estimate requires n >= 1, got " + std::to_string(n));
  return static_cast<double>(n) * std::log2(static_cast<double>(n)) / 2.0 -
         1.0;
}

ExactInt census_exponent(long n) {
  require_even(n, "census_exponent");
  ExactInt nn(n);
  return (3 * nn * nn - 2 * nn) / 8;  // divisible by 8 for every even n
}

ExactInt census_formula(long n) {
  return pow2(to_ulong_exact(census_exponent(n), "census exponent"));
}

long census_free_cells(long n) {
  require_even(n, "census_free_cells");
  long q = n / 2;
  return n * (n - 1) / 2 - q * (q - 1) / 2;
}

ExactInt census_brute_force(long n) {
  require_even(n, "census_brute_force");
  const long q = n / 2;
  const long free_cells = census_free_cells(n);
  if (free_cells > 24) {
    throw std::domain_error(
        "census enumeration refused: " + std::to_string(free_cells) +
        " free cells exceeds the guard of 24 (2^" +
        std::to_string(free_cells) + " assignments)");
  }

  // Adjacency over nodes 1..n; the clique on the last q nodes is forced.
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (long i = 1; i <= n; ++i) adj[i][i] = 1;
  const long first_member = q + 1;
  for (long i = first_member; i <= n; ++i) {
    for (long j = i + 1; j <= n; ++j) adj[i][j] = adj[j][i] = 1;
  }
  std::vector<std::pair<long, long>> free_list;
  for (long i = 1; i <= n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      if (!(i >= first_member && j >= first_member)) free_list.push_back({i, j});
    }
  }

  std::uint64_t hits = 0;
  const std::uint64_t total = std::uint64_t{1} << free_cells;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (long t = 0; t < free_cells; ++t) {
      char bit = static_cast<char>((mask >> t) & 1u);
      auto [i, j] = free_list[t];
      adj[i][j] = adj[j][i] = bit;
    }
    bool contains = true;
    for (long a = first_member; contains && a <= n; ++a) {
      for (long b = first_member; b <= n; ++b) {
        if (!adj[a][b]) {
          contains = false;
          break;
        }
      }
    }
    if (contains) ++hits;
  }
  return ExactInt(static_cast<unsigned long>(hits));
}

OutcomeSpace outcome_space(long n, long q) {
  OutcomeSpace out;
  out.exponent = binomial(n, q);
  if (out.exponent <= 64) {
    out.value = pow2(to_ulong_exact(out.exponent, "outcome exponent"));
  }
  return out;
}

std::vector<BoundRow> bound_report(long n_lo, long n_hi, bool census) {
  std::vector<BoundRow> rows;
  if (n_lo < 1) {
    throw std::domain_error("bound table starts at n >= 1, got " +
                            std::to_string(n_lo));
  }
  for (long n = n_lo; n <= n_hi; ++n) {
    BoundRow row;
    row.n = n;
    row.binom_half = binomial(n, argmax_binomial(n));
    row.sort_lb = comparison_lower_bound(n);
    row.sort_est = comparison_bound_estimate(n);
    // Exact comparison: a double is a dyadic rational, so lifting the
    // estimate into ExactRatio loses nothing.
    row.lb_gt_est = ExactRatio(row.sort_lb) > ExactRatio(row.sort_est);
    row.pow2_lb_eq_factorial =
        pow2(to_ulong_exact(row.sort_lb, "sort lower bound")) == factorial(n);
    if (n % 2 == 0) {
      row.central = central_binomial(n);
      row.floor_envelope = central_binomial_floor(n);
      row.census_exp = census_exponent(n);
      row.central_gt_floor = central_binomial_exceeds_floor(n);
      if (census) {
        row.census_formula_value = census_formula(n);
        if (census_free_cells(n) <= 24) {
          row.census_brute_value = census_brute_force(n);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double v) { return nlohmann::json(v).dump(); }

namespace {

std::string check_text(const std::optional<bool>& v) {
  if (!v) return "skip";
  return *v ? "pass" : "fail";
}

std::string check_text(bool v) { return v ? "pass" : "fail"; }

nlohmann::json row_json(const BoundRow& row, bool census) {
  nlohmann::json j;
  j["n"] = row.n;
  j["binom_half"] = to_decimal(row.binom_half);
  j["h"] = row.central ? nlohmann::json(to_decimal(*row.central))
                       : nlohmann::json(nullptr);
  if (row.floor_envelope) {
    j["phi_num"] = to_decimal(row.floor_envelope->get_num());
    j["phi_den"] = to_decimal(row.floor_envelope->get_den());
  } else {
    j["phi_num"] = nullptr;
    j["phi_den"] = nullptr;
  }
  j["sort_lb"] = to_decimal(row.sort_lb);
  j["sort_est"] = row.sort_est;
  j["census_exp"] = row.census_exp
                        ? nlohmann::json(to_decimal(*row.census_exp))
                        : nlohmann::json(nullptr);
  j["h_gt_phi"] = check_text(row.central_gt_floor);
  j["lb_gt_est"] = check_text(row.lb_gt_est);
  j["pow2_eq_factorial"] = check_text(row.pow2_lb_eq_factorial);
  if (census) {
    j["census_formula"] = row.census_formula_value
                              ? nlohmann::json(to_decimal(*row.census_formula_value))
                              : nlohmann::json(nullptr);
    j["census_brute"] = row.census_brute_value
                            ? nlohmann::json(to_decimal(*row.census_brute_value))
                            : nlohmann::json(nullptr);
    if (row.census_formula_value && row.census_brute_value) {
      j["census_match"] =
          check_text(*row.census_formula_value == *row.census_brute_value);
    } else {
      j["census_match"] = "skip";
    }
  }
  return j;
}

}  // namespace

std::string bound_report_csv(const std::vector<BoundRow>& rows, bool census) {
  std::string out =
      "n,binom_half,h,phi_num,phi_den,sort_lb,sort_est,census_exp,"
      "h_gt_phi,lb_gt_est,pow2_eq_factorial";
  if (census) out += ",census_formula,census_brute,census_match";
  out += "\n";
  for (const BoundRow& row : rows) {
    out += std::to_string(row.n);
    out += "," + to_decimal(row.binom_half);
    out += ",";
    if (row.central) out += to_decimal(*row.central);
    out += ",";
    if (row.floor_envelope) out += to_decimal(row.floor_envelope->get_num());
    out += ",";
    if (row.floor_envelope) out += to_decimal(row.floor_envelope->get_den());
    out += "," + to_decimal(row.sort_lb);
    out += "," + format_double(row.sort_est);
    out += ",";
    if (row.census_exp) out += to_decimal(*row.census_exp);
    out += "," + check_text(row.central_gt_floor);
    out += "," + check_text(row.lb_gt_est);
    out += "," + check_text(row.pow2_lb_eq_factorial);
    if (census) {
      out += ",";
      if (row.census_formula_value) out += to_decimal(*row.census_formula_value);
      out += ",";
      if (row.census_brute_value) out += to_decimal(*row.census_brute_value);
      out += ",";
      if (row.census_formula_value && row.census_brute_value) {
        out += check_text(*row.census_formula_value == *row.census_brute_value);
      } else {
        out += "skip";
      }
    }
    out += "\n";
  }
  return out;
}

std::string bound_report_json(const std::vector<BoundRow>& rows, bool census) {
  nlohmann::json j;
  j["metadata"]["precision_note"] =
      "integer and ratio columns are exact; sort_est is IEEE double";
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundRow& row : rows) arr.push_back(row_json(row, census));
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace cliquelab
