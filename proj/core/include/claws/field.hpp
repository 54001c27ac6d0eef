#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace claws {

using Complex = std::complex<double>;

/// Uniform periodic grid on [-L/2, L/2)^n, n in {1, 2}, with a power-of-two
/// number of points per axis.  Axis wavenumbers follow the standard FFT
/// layout xi_j = 2 pi k_j / L with k_j in {0, 1, ..., P/2 - 1, -P/2, ..., -1}.
class Grid {
 public:
  Grid(int dim, int points, double length);

  int dim() const { return dim_; }
  int points() const { return points_; }
  double length() const { return length_; }
  double spacing() const { return length_ / points_; }
  double wavenumber_step() const;
  std::size_t size() const;  ///< total number of nodes (points^dim)

  /// Integer mode index for FFT slot j along one axis.
  int mode_index(int j) const { return j < points_ / 2 ? j : j - points_; }
  double wavenumber(int j) const;
  double coordinate(int j) const { return -0.5 * length_ + j * spacing(); }

  /// Wavevector of the flattened (row-major, last axis fastest) slot.
  std::array<double, 2> wavevector(std::size_t flat) const;
  std::array<int, 2> modes(std::size_t flat) const;
  std::array<double, 2> position(std::size_t flat) const;

  /// Volume element dx^n and domain volume L^n.
  double cell_volume() const;
  double volume() const;

  bool operator==(const Grid&) const = default;

 private:
  int dim_;
  int points_;
  double length_;
};

enum class Provenance { raw, dealiased };

struct RealField {
  Grid grid;
  std::vector<double> values;
  Provenance tag = Provenance::raw;

  explicit RealField(Grid g) : grid(g), values(g.size(), 0.0) {}
  RealField(Grid g, std::vector<double> v, Provenance t = Provenance::raw);
};

/// Fourier-series coefficients with phases measured from the corner of the
/// box: u(x) = sum_k c_k exp(i xi_k . (x + L/2)).  A constant field c has
/// c_0 = c and Parseval reads ||u||^2 = L^n sum |c_k|^2.
struct SpectralField {
  Grid grid;
  std::vector<Complex> coeffs;
  Provenance tag = Provenance::raw;

  explicit SpectralField(Grid g) : grid(g), coeffs(g.size(), Complex{}) {}
  SpectralField(Grid g, std::vector<Complex> c, Provenance t = Provenance::raw);
};

SpectralField forward(const RealField& field);
RealField inverse(const SpectralField& field);
RealField transform_roundtrip(const RealField& field);

/// Sample f(x) on the grid nodes.
RealField sample(const Grid& grid, const std::function<double(std::span<const double>)>& f);

using Multiplier = std::function<Complex(std::span<const double> xi)>;

/// Pointwise product in frequency space.  Throws DomainError on a non-finite
/// multiplier value.
SpectralField apply_multiplier(const SpectralField& field, const Multiplier& mu);

/// Real radial multiplier mu(|xi|); preserves conjugate symmetry.
SpectralField apply_radial_multiplier(const SpectralField& field,
                                      const std::function<double(double)>& mu);

/// Spectral partial derivative along `axis` (Nyquist slot zeroed so the
/// result stays real).
SpectralField derivative(const SpectralField& field, int axis, int order = 1);

/// Two-thirds rule: zero every mode with some |k_j| > points/3.
SpectralField dealias_two_thirds(const SpectralField& field);
void dealias_in_place(SpectralField& field);

bool is_conjugate_symmetric(const SpectralField& field, double tol = 1e-12);

struct LpNorm {
  double p = 2.0;  ///< 1, 2 or +infinity
};
struct SobolevNorm {
  double order = 0.0;  ///< ||(1 + |xi|^2)^{order/2} u||
};
/// ||grad^k <grad>^{-s} u|| with weight |xi|^{2k} (1 + |xi|^2)^{-s}.
struct MixedNorm {
  int k = 0;
  double s = 0.0;
};
using NormKind = std::variant<LpNorm, SobolevNorm, MixedNorm>;

double lp_norm(const RealField& field, double p);
double sobolev_norm(const SpectralField& field, double order);
double mixed_norm(const SpectralField& field, int k, double s);
/// ||grad^k u||_{L^2}; equal to mixed_norm(field, k, 0).
double gradient_norm(const SpectralField& field, int k);

double norm(const SpectralField& field, const NormKind& kind);

/// L^n sum |c_k|^2, the Parseval side of ||u||^2.
double spectral_energy(const SpectralField& field);

/// Total integral of u (L^n c_0).
double mass(const SpectralField& field);

}  // namespace claws
