#pragma once

#include <optional>
#include <vector>

namespace claws {

/// [r]_+ : r itself when r is an integer (fractional part within 1e-9),
/// otherwise floor(r) + 1.  Throws DomainError for r < 0.
int ceil_plus(double r);

/// The derivative-count bracket [l + n(1/r - 1/q)]_*.  Pass
/// q = +infinity for L^infinity.  Requires 1 <= r <= 2 <= q.
int star_bracket(double ell, int n, double r, double q);

/// One row of the derivative-count table for a given k.  `l4`, `l5` and
/// `nu` are only defined for n >= 2.
struct EllRow {
  int k = 0;
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;
  std::optional<int> l4;
  std::optional<int> l5;
  std::optional<int> nu;
};

EllRow ell_table(int n, double s, int k);

struct IndexInputs {
  int n = 1;
  double s = 2.0;
  int N = 0;
};

struct IndexReport {
  IndexInputs inputs;
  int N0 = 0;
  std::optional<int> N1;  ///< absent when N < N0
  std::optional<int> N2;  ///< absent for n = 1, N < N0 or an empty feasible set
  std::vector<EllRow> table;  ///< rows k = 0..N
};

/// Smallest data regularity N0 for s > 1.
int minimal_regularity(int n, double s);

/// Largest derivative order with the optimal rate; throws DomainError if N < N0.
int optimal_decay_order(int n, double s, int N);

/// Largest order converging to the diffusion wave (n >= 2); empty when no k qualifies.
std::optional<int> profile_order(int n, double s, int N);

/// N0, and N1/N2 when N >= N0, plus the l-table for k = 0..N.
IndexReport compute_index_set(const IndexInputs& inputs);

}  // namespace claws
