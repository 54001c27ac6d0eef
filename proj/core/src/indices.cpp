#include "claws/indices.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "claws/errors.hpp"

namespace claws {

namespace {

constexpr double kIntegerTolerance = 1e-9;

bool near_integer(double x) {
  return std::abs(x - std::round(x)) < kIntegerTolerance;
}

/// Integer part of a nonnegative real, robust to decimal round-off.
int integer_part(double x) {
  if (near_integer(x)) return static_cast<int>(std::lround(x));
  return static_cast<int>(std::floor(x));
}

void require_loss_regime(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw DomainError("index calculus requires s > 1 (got s = " + std::to_string(s) + ")");
  }
}

int search_ceiling(int N) { return 4 * N + 64; }

}  // namespace

int ceil_plus(double r) {
  if (!(r >= 0.0)) throw DomainError("[r]_+ requires r >= 0");
  if (near_integer(r)) return static_cast<int>(std::lround(r));
  return static_cast<int>(std::floor(r)) + 1;
}

int star_bracket(double ell, int n, double r, double q) {
  if (!(ell >= 0.0)) throw DomainError("[.]_* requires l >= 0");
  if (n < 1) throw DomainError("[.]_* requires n >= 1");
  if (!(r >= 1.0 && r <= 2.0 && q >= 2.0)) {
    throw DomainError("[.]_* requires 1 <= r <= 2 <= q");
  }
  if (near_integer(ell) && r == 2.0 && q == 2.0) return static_cast<int>(std::lround(ell));
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  return integer_part(ell + n * (1.0 / r - inv_q)) + 1;
}

EllRow ell_table(int n, double s, int k) {
  require_loss_regime(s);
  if (n < 1) throw DomainError("dimension n must be >= 1");
  if (k < 0) throw DomainError("k must be >= 0");

  const double d = s - 1.0;
  const int sp = ceil_plus(s);
  EllRow row;
  row.k = k;
  row.l1 = k + ceil_plus((n / 2.0 + k) * d);

  double l2_arg;
  if (n == 1) {
    l2_arg = ((n + 3) / 2.0 + k) * d;
  } else if (n == 2) {
    l2_arg = ((n + 1) / 2.0 + k) * d;
  } else {
    l2_arg = (n / 2.0 + k) * d;
  }
  row.l2 = k + 1 + ceil_plus(l2_arg);

  // [2(s-1)] is the plain integer part here, not [.]_+.
  row.l3 = 2 + integer_part(2.0 * d) + k * sp;

  if (n >= 2) {
    row.l4 = k + 1 + ceil_plus(((n + 1) / 2.0 + k + 1) * d);
    int nu = 0;
    if (n == 2) {
      nu = (k + 1) * (sp - 1);
    } else if (n <= 4) {
      nu = k * (sp - 1);
    }
    row.nu = nu;
    row.l5 = row.l3 + nu;
  }
  return row;
}

int minimal_regularity(int n, double s) {
  require_loss_regime(s);
  const int sp = ceil_plus(s);
  const int k0 = n / 2 + 2;
  const EllRow base = ell_table(n, s, k0);
  // Every constraint is of the form k >= const or [k / sp] >= const, so the
  // first feasible k is found well below the search ceiling.
  const int ceiling = search_ceiling(base.l1 + base.l2 + base.l3 + sp * k0);
  for (int k = 0; k <= ceiling; ++k) {
    if (k / sp >= k0 && k >= base.l1 && k >= base.l2 && k >= base.l3) return k;
  }
  throw DomainError("N0 search exceeded its ceiling");
}

int optimal_decay_order(int n, double s, int N) {
  const int n0 = minimal_regularity(n, s);
  if (N < n0) {
    throw DomainError("N1 requires N >= N0 = " + std::to_string(n0) + " (got N = " +
                      std::to_string(N) + ")");
  }
  const int sp = ceil_plus(s);
  const int lo = n / 2 + 2;
  const int hi = N / sp;
  int best = std::numeric_limits<int>::min();
  for (int k = 0; k <= search_ceiling(N); ++k) {
    if (k < lo || k > hi) continue;
    const EllRow row = ell_table(n, s, k);
    if (row.l1 <= N && row.l2 <= N && row.l3 <= N) best = k;
  }
  if (best == std::numeric_limits<int>::min()) {
    throw DomainError("N1 feasible set is empty");
  }
  return best;
}

std::optional<int> profile_order(int n, double s, int N) {
  require_loss_regime(s);
  if (n < 2) return std::nullopt;
  const int sp = ceil_plus(s);
  const int hi = N / sp;
  std::optional<int> best;
  for (int k = 0; k <= search_ceiling(N); ++k) {
    if (k > hi) continue;
    const EllRow row = ell_table(n, s, k);
    if (*row.l4 <= N && *row.l5 <= N) best = k;
  }
  return best;
}

IndexReport compute_index_set(const IndexInputs& inputs) {
  if (inputs.n < 1) throw DomainError("dimension n must be >= 1");
  if (inputs.N < 0) throw DomainError("N must be >= 0");
  IndexReport report;
  report.inputs = inputs;
  report.N0 = minimal_regularity(inputs.n, inputs.s);
  if (inputs.N >= report.N0) {
    report.N1 = optimal_decay_order(inputs.n, inputs.s, inputs.N);
    report.N2 = profile_order(inputs.n, inputs.s, inputs.N);
  }
  report.table.reserve(static_cast<std::size_t>(inputs.N) + 1);
  for (int k = 0; k <= inputs.N; ++k) report.table.push_back(ell_table(inputs.n, inputs.s, k));
  return report;
}

}  // namespace claws
