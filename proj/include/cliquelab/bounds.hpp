#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliquelab {

// Exact arbitrary-precision arithmetic. Every inequality in this module is
// decided over these types; doubles appear only in the estimate column and
// the log-gamma routine, and are labeled as approximate where emitted.
using ExactInt = mpz_class;
using ExactRatio = mpq_class;

std::string to_decimal(const ExactInt& v);
std::string to_decimal(const ExactRatio& v);  // "num/den", canonical form

ExactInt factorial(long n);

// Multiplicative form: prod_{i=1..q} (n-q+i)/i, each division exact.
ExactInt binomial(long n, long q);

// C(n, q+1) / C(n, q) as an exact ratio: (n-q)/(q+1). Requires 0 <= q < n.
ExactRatio binomial_step_ratio(long n, long q);

// The q maximizing C(n, q): floor(n/2) (ties at odd n resolve downward).
long argmax_binomial(long n);

// C(n, n/2) for even n: the candidate count at the hardest subset size.
ExactInt central_binomial(long n);

// 2^n / (n+1), the strict lower envelope the central binomial must clear.
ExactRatio central_binomial_floor(long n);

// Exact check of C(n, n/2) > 2^n/(n+1) for even n.
bool central_binomial_exceeds_floor(long n);

// floor(n) divided by 2^n/n, which collapses to n/(n+1): how close the
// envelope sits to the cruder 2^n/n as n grows.
ExactRatio floor_growth_ratio(long n);

// Lanczos approximation of ln Gamma(z) for z > 0.
double log_gamma(double z);

// |lgG(z) + lgG(z+1/2) - (1-2z) ln 2 - (1/2) ln pi - lgG(2z)|, which is 0
// for the exact function; the approximation keeps it below 1e-9.
double gamma_duplication_residual(double z);

// ceil(log2(n!)) computed from the exact factorial's bit length.
ExactInt comparison_lower_bound(long n);

// n * log2(n) / 2 - 1, the coarse closed-form stand-in for the bound.
double comparison_bound_estimate(long n);

// Exponent of the count of networks on n nodes containing a clique on the
// last n/2 nodes: (3n^2 - 2n) / 8, an integer for every even n.
ExactInt census_exponent(long n);

// 2^census_exponent(n).
ExactInt census_formula(long n);

// The same count by enumeration: force the clique cells, run every
// assignment of the free upper-triangle cells through a containment test.
// Refused when there are more than 24 free cells.
ExactInt census_brute_force(long n);
long census_free_cells(long n);

// Number of subsets examined by an exhaustive q-search, and the size of
// the a-priori outcome space 2^C(n,q); the value is materialized only when
// C(n,q) <= 64, otherwise just the exponent is reported.
struct OutcomeSpace {
  ExactInt exponent;              // C(n, q)
  std::optional<ExactInt> value;  // 2^C(n,q) when exponent <= 64
};
OutcomeSpace outcome_space(long n, long q);

// One row of the bound table; even-only quantities are absent at odd n.
struct BoundRow {
  long n = 0;
  ExactInt binom_half;                       // C(n, floor(n/2))
  std::optional<ExactInt> central;           // C(n, n/2), even n
  std::optional<ExactRatio> floor_envelope;  // 2^n/(n+1), even n
  ExactInt sort_lb;
  double sort_est = 0.0;
  std::optional<ExactInt> census_exp;        // even n
  std::optional<bool> central_gt_floor;      // even n
  bool lb_gt_est = false;
  bool pow2_lb_eq_factorial = false;         // 2^sort_lb == n!
  std::optional<ExactInt> census_formula_value;  // filled when census asked
  std::optional<ExactInt> census_brute_value;    // only when free cells <= 24
};

std::vector<BoundRow> bound_report(long n_lo, long n_hi, bool census = false);

// Serializers share one number formatter so JSON and CSV agree byte for
// byte on every value. CSV starts with the fixed column prefix
// n,binom_half,h,phi_num,phi_den,sort_lb,sort_est,census_exp and appends
// the pass/fail columns (and census columns when asked) after it.
std::string bound_report_csv(const std::vector<BoundRow>& rows, bool census);
std::string bound_report_json(const std::vector<BoundRow>& rows, bool census);

// Formats a double exactly as the JSON serializer would (shortest
// round-trip form), so CSV cells match JSON values bit for bit.
std::string format_double(double v);

}  // namespace cliquelab
