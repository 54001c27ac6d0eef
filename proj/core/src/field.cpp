#include "claws/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "claws/errors.hpp"
#include "claws/fft.hpp"

namespace claws {

Grid::Grid(int dim, int points, double length) : dim_(dim), points_(points), length_(length) {
  if (dim != 1 && dim != 2) throw InvalidGridError("grid dimension must be 1 or 2");
  if (points < 16) throw InvalidGridError("grid needs at least 16 points per axis");
  if ((points & (points - 1)) != 0) {
    throw InvalidGridError("points per axis must be a power of two (got " +
                           std::to_string(points) + ")");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidGridError("domain length must be positive");
  }
}

double Grid::wavenumber_step() const { return 2.0 * std::numbers::pi / length_; }

std::size_t Grid::size() const {
  const auto p = static_cast<std::size_t>(points_);
  return dim_ == 1 ? p : p * p;
}

double Grid::wavenumber(int j) const { return wavenumber_step() * mode_index(j); }

std::array<int, 2> Grid::modes(std::size_t flat) const {
  const auto p = static_cast<std::size_t>(points_);
  if (dim_ == 1) return {mode_index(static_cast<int>(flat)), 0};
  return {mode_index(static_cast<int>(flat / p)), mode_index(static_cast<int>(flat % p))};
}

std::array<double, 2> Grid::wavevector(std::size_t flat) const {
  const auto m = modes(flat);
  const double h = wavenumber_step();
  return {h * m[0], h * m[1]};
}

std::array<double, 2> Grid::position(std::size_t flat) const {
  const auto p = static_cast<std::size_t>(points_);
  if (dim_ == 1) return {coordinate(static_cast<int>(flat)), 0.0};
  return {coordinate(static_cast<int>(flat / p)), coordinate(static_cast<int>(flat % p))};
}

double Grid::cell_volume() const { return std::pow(spacing(), dim_); }
double Grid::volume() const { return std::pow(length_, dim_); }

RealField::RealField(Grid g, std::vector<double> v, Provenance t)
    : grid(g), values(std::move(v)), tag(t) {
  if (values.size() != grid.size()) throw InvalidGridError("field size does not match grid");
}

SpectralField::SpectralField(Grid g, std::vector<Complex> c, Provenance t)
    : grid(g), coeffs(std::move(c)), tag(t) {
  if (coeffs.size() != grid.size()) throw InvalidGridError("field size does not match grid");
}

SpectralField forward(const RealField& field) {
  const Grid& g = field.grid;
  std::vector<Complex> data(field.values.begin(), field.values.end());
  fft::forward(data, g.dim(), g.points());
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& c : data) c *= scale;
  return SpectralField(g, std::move(data), field.tag);
}

RealField inverse(const SpectralField& field) {
  const Grid& g = field.grid;
  std::vector<Complex> data = field.coeffs;
  fft::backward(data, g.dim(), g.points());
  std::vector<double> values(data.size());
  std::transform(data.begin(), data.end(), values.begin(), [](Complex c) { return c.real(); });
  return RealField(g, std::move(values), field.tag);
}

RealField transform_roundtrip(const RealField& field) { return inverse(forward(field)); }

RealField sample(const Grid& grid, const std::function<double(std::span<const double>)>& f) {
  RealField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.position(i);
    out.values[i] = f(std::span<const double>(x.data(), static_cast<std::size_t>(grid.dim())));
  }
  return out;
}

SpectralField apply_multiplier(const SpectralField& field, const Multiplier& mu) {
  SpectralField out = field;
  const Grid& g = field.grid;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = g.wavevector(i);
    const Complex m = mu(std::span<const double>(xi.data(), static_cast<std::size_t>(g.dim())));
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
      throw DomainError("multiplier is not finite on the grid");
    }
    out.coeffs[i] *= m;
  }
  return out;
}

SpectralField apply_radial_multiplier(const SpectralField& field,
                                      const std::function<double(double)>& mu) {
  SpectralField out = field;
  const Grid& g = field.grid;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = g.wavevector(i);
    const double m = mu(std::hypot(xi[0], xi[1]));
    if (!std::isfinite(m)) throw DomainError("multiplier is not finite on the grid");
    out.coeffs[i] *= m;
  }
  return out;
}

SpectralField derivative(const SpectralField& field, int axis, int order) {
  const Grid& g = field.grid;
  if (axis < 0 || axis >= g.dim()) throw DomainError("derivative axis out of range");
  SpectralField out = field;
  const int nyquist = -g.points() / 2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto m = g.modes(i);
    if (m[axis] == nyquist && order % 2 == 1) {
      out.coeffs[i] = 0.0;
      continue;
    }
    const Complex ik{0.0, g.wavevector(i)[axis]};
    Complex factor = 1.0;
    for (int p = 0; p < order; ++p) factor *= ik;
    out.coeffs[i] *= factor;
  }
  return out;
}

void dealias_in_place(SpectralField& field) {
  const Grid& g = field.grid;
  const int p = g.points();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto m = g.modes(i);
    for (int d = 0; d < g.dim(); ++d) {
      if (3 * std::abs(m[d]) > p) {
        field.coeffs[i] = 0.0;
        break;
      }
    }
  }
  field.tag = Provenance::dealiased;
}

SpectralField dealias_two_thirds(const SpectralField& field) {
  SpectralField out = field;
  dealias_in_place(out);
  return out;
}

bool is_conjugate_symmetric(const SpectralField& field, double tol) {
  const Grid& g = field.grid;
  const int p = g.points();
  auto slot = [p](int m) { return ((m % p) + p) % p; };
  double scale = 0.0;
  for (const auto& c : field.coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto m = g.modes(i);
    std::size_t j;
    if (g.dim() == 1) {
      j = static_cast<std::size_t>(slot(-m[0]));
    } else {
      j = static_cast<std::size_t>(slot(-m[0])) * static_cast<std::size_t>(p) +
          static_cast<std::size_t>(slot(-m[1]));
    }
    if (std::abs(field.coeffs[i] - std::conj(field.coeffs[j])) > tol * scale) return false;
  }
  return true;
}

double lp_norm(const RealField& field, double p) {
  const auto& v = field.values;
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  const double dv = field.grid.cell_volume();
  if (p == 1.0) {
    double acc = 0.0;
    for (double x : v) acc += std::abs(x);
    return acc * dv;
  }
  if (p == 2.0) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc * dv);
  }
  throw DomainError("lp_norm supports p in {1, 2, inf}");
}

namespace {

template <class Weight>
double weighted_energy(const SpectralField& field, Weight w) {
  const Grid& g = field.grid;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double a = std::norm(field.coeffs[i]);
    if (a == 0.0) continue;
    const auto xi = g.wavevector(i);
    acc += w(xi[0] * xi[0] + xi[1] * xi[1]) * a;
  }
  return acc * g.volume();
}

}  // namespace

double spectral_energy(const SpectralField& field) {
  return weighted_energy(field, [](double) { return 1.0; });
}

double sobolev_norm(const SpectralField& field, double order) {
  return std::sqrt(weighted_energy(field, [order](double r2) { return std::pow(1.0 + r2, order); }));
}

double mixed_norm(const SpectralField& field, int k, double s) {
  if (k < 0) throw DomainError("mixed norm requires k >= 0");
  return std::sqrt(weighted_energy(field, [k, s](double r2) {
    const double radial = k == 0 ? 1.0 : std::pow(r2, k);
    return s == 0.0 ? radial : radial * std::pow(1.0 + r2, -s);
  }));
}

double gradient_norm(const SpectralField& field, int k) { return mixed_norm(field, k, 0.0); }

double norm(const SpectralField& field, const NormKind& kind) {
  return std::visit(
      [&field](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          return lp_norm(inverse(field), k.p);
        } else if constexpr (std::is_same_v<T, SobolevNorm>) {
          return sobolev_norm(field, k.order);
        } else {
          return mixed_norm(field, k.k, k.s);
        }
      },
      kind);
}

double mass(const SpectralField& field) { return field.grid.volume() * field.coeffs[0].real(); }

}  // namespace claws
