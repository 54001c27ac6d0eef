#pragma once

#include <vector>

#include "claws/solver.hpp"

namespace claws {

/// Derivative step of the Sobolev slices: [s]_+ for s > 1 and 1 otherwise.
int functional_bracket(double s);

/// Time-weighted functionals evaluated at every output time of a trajectory.
///   E_N(t)    = sum_{k<=[N/b]}   sup_{tau<=t} (1+tau)^{k-1/2} ||grad^k <grad>^{N-kb} u||^2
///   D_N(t)    = sum_{k<=[N/b]+1} int_0^t      (1+tau)^{k-3/2} ||grad^k <grad>^{N-kb} u||^2
///   Eop(t)    = sum_{k<=N1}      sup_{tau<=t} (1+tau)^{n/2+k} ||grad^k u||^2
///   M_i(t)    = sup_{tau<=t} (1+tau)^{(n+i)/2} ||grad^i u||_inf,  i = 0, 1
/// with b = functional_bracket(s).  Integrals use the trapezoid rule.
struct WeightedFunctionals {
  int n = 1;
  double s = 0.0;
  int N = 0;
  int N1 = 0;
  int bracket = 1;
  std::vector<double> times;
  std::vector<double> energy;       ///< E_N
  std::vector<double> dissipation;  ///< D_N
  std::vector<double> optimal;      ///< Eop_{N1}
  std::vector<double> m0;
  std::vector<double> m1;
};

/// Throws DomainError naming the absent channels when the trajectory lacks
/// the slices for order N or the gradient norms up to N1.
WeightedFunctionals weighted_functionals(const TrajectoryRecord& record, int n, double s, int N,
                                         int N1);

}  // namespace claws
