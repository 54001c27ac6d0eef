#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "claws/field.hpp"
#include "claws/solver.hpp"

namespace claws {

/// Two-term interpolation bound
///   ||grad^k <grad>^{-s} u||^2 <= inf_R [ A^2 / R^2 + B^2 V(R) ]
/// with A = ||grad^{k+1} <grad>^{-s} u||, B = max |u^_j| and
/// V(R) = L^n sum_{|xi_j| <= R} |xi_j|^{2k} (1 + |xi_j|^2)^{-s}, the lattice
/// form of int_{|xi|<=R} |xi|^{2k} (1+|xi|^2)^{-s} dxi on the grid.  The
/// infimum runs over every lattice radius, where the bound changes.
struct InterpolationReport {
  double lhs = 0.0;  ///< LHS^2
  double bound = 0.0;
  double best_radius = 0.0;
  bool trivial = false;
  bool pass = true;
};

InterpolationReport interpolation_check(const SpectralField& field, int k, double s);

enum class CheckStatus { pass, fail, warning };
const char* to_string(CheckStatus status);

/// Compares central differences of ||u||^2 between outputs (fourth order
/// where five outputs are available) with -2 sum a |u^|^2 (recorded
/// dissipation).  Linear runs must match to 1e-6
/// relative; nonlinear runs must satisfy the inequality up to
/// 1e-8 ||u||^2 / dt_out.  An output stride above 1 yields a warning.
struct EnergyReport {
  CheckStatus status = CheckStatus::pass;
  bool linear = true;
  double max_error = 0.0;  ///< relative identity error (linear) or worst excess (nonlinear)
  std::size_t points = 0;
  std::string note;
};

EnergyReport energy_identity_check(const TrajectoryRecord& record);

/// Production term of the k-th order energy balance,
///   P_k = d/dt ||grad^k u||^2 + 2 sum |xi|^{2k} a |u^|^2,
/// relative to ||grad u||_inf ||grad^k u||^2 at interior outputs.
struct KEnergyAudit {
  int k = 1;
  double max_ratio = 0.0;
  double constant = 0.0;
  bool pass = true;
};

/// Largest P_k / (||grad u||_inf ||grad^k u||^2) along the trajectory.
double calibrate_k_energy(const TrajectoryRecord& record, int k);
/// Fails when the ratio exceeds twice the calibrated constant.
KEnergyAudit k_energy_audit(const TrajectoryRecord& record, int k, double constant);

/// Exponent choice (p, q, r) of the product estimate.
enum class ProductNorms { p2_qinf_r2, p1_q2_r2 };

/// ||d^a1 u1 d^a2 u2||_p / (||u1||_q ||grad^k u2||_r + ||u2||_q ||grad^k u1||_r)
/// with k = |a1| + |a2|.  Returns a negative value when the denominator is zero.
double product_ratio(const SpectralField& u1, const SpectralField& u2, std::array<int, 2> a1,
                     std::array<int, 2> a2, ProductNorms norms);

struct ProductReport {
  double max_ratio = 0.0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  bool pass = true;  ///< max_ratio <= 10
};

/// Seeded corpus of band-limited pairs on a 64-point grid of length 2 pi.
/// Multi-indices are split across axes by the seeded generator.
ProductReport product_ratio_scan(std::uint64_t seed, std::size_t corpus_size, int n, int k1, int k2,
                                 ProductNorms norms);

}  // namespace claws
