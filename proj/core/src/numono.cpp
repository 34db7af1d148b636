#include "ramify/numono.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "ramify/errors.hpp"

namespace ramify
{

char const *to_string(Precision p)
{
  return p == Precision::double_precision ? "double" : "quad";
}

namespace
{

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

template<class R>
struct Arith;

template<>
struct Arith<double>
{
  using Real = double;
  using Complex = std::complex<double>;

  static Real from_rational(Rational const &q) { return q.get_d(); }
  static Real from_double(double x) { return x; }
  static double to_double(Real x) { return x; }
  static Complex make(Real re, Real im) { return {re, im}; }
  static Real modulus(Complex const &z) { return std::abs(z); }
  static Real real(Complex const &z) { return z.real(); }
  static Real imag(Complex const &z) { return z.imag(); }
  static Real cos(Real x) { return std::cos(x); }
  static Real sin(Real x) { return std::sin(x); }
  static Real pi() { return std::numbers::pi; }
  static Real tolerance_scale() { return 1.0; }
};

template<>
struct Arith<Quad>
{
  using Real = Quad;
  using Complex = QuadComplex;

  static Real from_rational(Rational const &q)
  {
    return Quad(q.get_num().get_str()) / Quad(q.get_den().get_str());
  }
  static Real from_double(double x) { return Quad(x); }
  static double to_double(Real const &x) { return static_cast<double>(x); }
  static Complex make(Real const &re, Real const &im) { return Complex(re, im); }
  static Real modulus(Complex const &z) { return boost::multiprecision::abs(z); }
  static Real real(Complex const &z) { return z.real(); }
  static Real imag(Complex const &z) { return z.imag(); }
  static Real cos(Real const &x) { return boost::multiprecision::cos(x); }
  static Real sin(Real const &x) { return boost::multiprecision::sin(x); }
  static Real pi() { return boost::math::constants::pi<Quad>(); }
  static Real tolerance_scale() { return Quad(1e-12); }
};

/// Simultaneous Aberth-Ehrlich iteration on monic-free coefficients (low to
/// high). `z` holds the initial guesses and receives the roots.
template<class A>
bool aberth(std::vector<typename A::Complex> const &a, std::vector<typename A::Complex> &z,
            typename A::Real const &tolerance, int max_iterations)
{
  using Complex = typename A::Complex;
  using Real = typename A::Real;
  std::size_t n = a.size() - 1;
  Complex const zero = A::make(Real(0), Real(0));
  Complex const one = A::make(Real(1), Real(0));
  for (int it = 0; it < max_iterations; ++it) {
    Real worst = Real(0);
    for (std::size_t i = 0; i < n; ++i) {
      Complex p = a[n], dp = zero;
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[k];
      }
      if (A::modulus(p) == Real(0))
        continue;
      if (A::modulus(dp) == Real(0))
        dp = A::make(Real(1e-30), Real(0));
      Complex ratio = p / dp;
      Complex s = zero;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i)
          continue;
        Complex diff = z[i] - z[j];
        if (A::modulus(diff) == Real(0))
          diff = A::make(Real(1e-30), Real(0));
        s += one / diff;
      }
      Complex w = ratio / (one - ratio * s);
      z[i] -= w;
      Real corr = A::modulus(w) / (Real(1) + A::modulus(z[i]));
      if (corr > worst)
        worst = corr;
    }
    if (!(worst >= tolerance))
      return worst == worst; // false on NaN
  }
  return false;
}

template<class A>
std::vector<typename A::Complex> initial_guesses(std::vector<typename A::Complex> const &a)
{
  using Real = typename A::Real;
  std::size_t n = a.size() - 1;
  Real radius = Real(0);
  Real lead = A::modulus(a[n]);
  for (std::size_t k = 0; k < n; ++k) {
    Real ratio = A::modulus(a[k]) / lead;
    if (ratio > Real(0)) {
      Real r = Real(std::pow(A::to_double(ratio), 1.0 / static_cast<double>(n - k)));
      if (r > radius)
        radius = r;
    }
  }
  if (radius == Real(0))
    radius = Real(1);
  std::vector<typename A::Complex> z;
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = Real(2) * A::pi() * Real(static_cast<double>(k)) / Real(static_cast<double>(n)) + Real(0.7);
    z.push_back(A::make(radius * A::cos(angle), radius * A::sin(angle)));
  }
  return z;
}

template<class A>
typename A::Real min_separation(std::vector<typename A::Complex> const &z)
{
  using Real = typename A::Real;
  Real best = Real(std::numeric_limits<double>::max());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      Real d = A::modulus(z[i] - z[j]);
      if (d < best)
        best = d;
    }
  return best;
}

/// Nearest-neighbour matching of `next` to `previous`; every match must be
/// closer than the minimum separation of `previous` divided by `safety`.
/// Returns match[i] = index in `next`, or an empty vector.
template<class A>
std::vector<std::size_t> match_roots(std::vector<typename A::Complex> const &previous,
                                     std::vector<typename A::Complex> const &next, double safety)
{
  using Real = typename A::Real;
  Real bound = min_separation<A>(previous) / Real(safety);
  std::vector<std::size_t> match(previous.size());
  std::vector<bool> used(next.size(), false);
  for (std::size_t i = 0; i < previous.size(); ++i) {
    std::size_t best = 0;
    Real best_dist = A::modulus(previous[i] - next[0]);
    for (std::size_t j = 1; j < next.size(); ++j) {
      Real d = A::modulus(previous[i] - next[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (!(best_dist < bound) || used[best])
      return {};
    used[best] = true;
    match[i] = best;
  }
  return match;
}

struct Piece
{
  enum class Kind
  {
    segment,
    arc
  } kind;
  std::complex<double> from, to;  // segment
  std::complex<double> center;    // arc
  double radius = 0, start_angle = 0, sweep = 0;
};

using Path = std::vector<Piece>;

template<class A>
class FiberTracker
{
public:
  using Real = typename A::Real;
  using Complex = typename A::Complex;

  FiberTracker(PlanePolynomial const &p, TrackingConfig const &cfg) : _cfg(cfg)
  {
    for (auto const &coeff : p.y_coefficients()) {
      std::vector<Real> row;
      for (auto const &q : coeff.coefficients())
        row.push_back(A::from_rational(q));
      _coeffs.push_back(std::move(row));
    }
    _tolerance = Real(cfg.tolerance) * A::tolerance_scale();
  }

  std::vector<Complex> fiber_coefficients(Complex const &x) const
  {
    std::vector<Complex> a;
    for (auto const &row : _coeffs) {
      Complex acc = A::make(Real(0), Real(0));
      for (std::size_t k = row.size(); k-- > 0;)
        acc = acc * x + A::make(row[k], Real(0));
      a.push_back(acc);
    }
    return a;
  }

  std::vector<Complex> solve_cold(Complex const &x) const
  {
    auto a = fiber_coefficients(x);
    auto z = initial_guesses<A>(a);
    if (!aberth<A>(a, z, _tolerance, 2000))
      throw TrackingAmbiguity("fiber root solver did not converge at the base point");
    return z;
  }

  Complex point_on(Piece const &piece, Real const &t) const
  {
    if (piece.kind == Piece::Kind::segment) {
      Complex from = A::make(A::from_double(piece.from.real()), A::from_double(piece.from.imag()));
      Complex to = A::make(A::from_double(piece.to.real()), A::from_double(piece.to.imag()));
      return from + (to - from) * A::make(t, Real(0));
    }
    Real angle = A::from_double(piece.start_angle) + A::from_double(piece.sweep) * t;
    Real radius = A::from_double(piece.radius);
    return A::make(A::from_double(piece.center.real()) + radius * A::cos(angle),
                   A::from_double(piece.center.imag()) + radius * A::sin(angle));
  }

  std::vector<Complex> track(Path const &path, std::vector<Complex> roots) const
  {
    for (auto const &piece : path)
      roots = track_piece(piece, std::move(roots));
    return roots;
  }

private:
  std::vector<Complex> track_piece(Piece const &piece, std::vector<Complex> roots) const
  {
    Real s = Real(0);
    Real h = Real(1) / Real(16);
    int depth = 0;
    while (s < Real(1)) {
      Real t = s + h;
      if (t > Real(1))
        t = Real(1);
      Complex x = point_on(piece, t);
      auto a = fiber_coefficients(x);
      std::vector<Complex> candidate = roots;
      bool accepted = false;
      if (aberth<A>(a, candidate, _tolerance, 100)) {
        auto match = match_roots<A>(roots, candidate, _cfg.safety_factor);
        if (!match.empty()) {
          for (std::size_t i = 0; i < roots.size(); ++i)
            roots[i] = candidate[match[i]];
          accepted = true;
        }
      }
      if (accepted) {
        s = t;
        depth = 0;
        h = h * Real(2);
        if (h > Real(0.25))
          h = Real(0.25);
      } else {
        h = h / Real(2);
        if (++depth > _cfg.max_refinement_depth)
          throw TrackingAmbiguity("step refinement depth exhausted near x = " +
                                  std::to_string(A::to_double(A::real(x))) + " + " +
                                  std::to_string(A::to_double(A::imag(x))) + "i");
      }
    }
    return roots;
  }

  TrackingConfig _cfg;
  std::vector<std::vector<Real>> _coeffs;
  Real _tolerance;
};

/// Distance from point q to segment [a, b].
double segment_distance(std::complex<double> q, std::complex<double> a, std::complex<double> b)
{
  std::complex<double> ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0)
    return std::abs(q - a);
  double t = std::clamp(((q - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(q - (a + t * ab));
}

struct LoopGeometry
{
  std::complex<double> base_point;
  std::complex<double> center;
  std::vector<std::size_t> order; // loop order into the critical value list
};

std::complex<double> loop_entry(std::complex<double> base, std::complex<double> c, double r)
{
  std::complex<double> dir = base - c;
  return c + r * dir / std::abs(dir);
}

LoopGeometry choose_geometry(std::vector<CriticalValue> const &values, double base_angle)
{
  LoopGeometry g;
  if (values.empty()) {
    g.center = 0;
    g.base_point = std::polar(1.0, base_angle);
    return g;
  }
  std::complex<double> sum = 0;
  double max_re = -std::numeric_limits<double>::infinity();
  for (auto const &v : values) {
    sum += v.value;
    max_re = std::max(max_re, v.value.real());
  }
  g.center = sum / static_cast<double>(values.size());
  double spread = 0;
  for (auto const &a : values)
    for (auto const &b : values)
      spread = std::max(spread, std::abs(a.value - b.value));
  double rho = (max_re - g.center.real()) + 1 + spread;

  double best_clearance = -1;
  std::complex<double> best_base;
  for (int k = 0; k <= 20; ++k) {
    double delta = (k % 2 ? 1 : -1) * 0.05 * ((k + 1) / 2);
    std::complex<double> base = g.center + std::polar(rho, base_angle + delta);
    double clearance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
      auto entry = loop_entry(base, values[i].value, values[i].loop_radius);
      for (std::size_t m = 0; m < values.size(); ++m)
        if (m != i)
          clearance = std::min(clearance, segment_distance(values[m].value, base, entry) /
                                              values[m].loop_radius);
    }
    if (clearance > best_clearance) {
      best_clearance = clearance;
      best_base = base;
    }
    if (clearance >= 1)
      break;
  }
  g.base_point = best_base;

  // Ascending argument as seen from the base point, measured from the
  // direction of the centre.
  std::vector<double> phi;
  for (auto const &v : values)
    phi.push_back(std::arg((v.value - g.base_point) / (g.center - g.base_point)));
  g.order.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    g.order[i] = i;
  std::sort(g.order.begin(), g.order.end(),
            [&](std::size_t a, std::size_t b) { return phi[a] < phi[b]; });
  return g;
}

Path critical_loop(std::complex<double> base, CriticalValue const &v)
{
  auto entry = loop_entry(base, v.value, v.loop_radius);
  Path path;
  path.push_back({Piece::Kind::segment, base, entry, {}, 0, 0, 0});
  path.push_back({Piece::Kind::arc, {}, {}, v.value, v.loop_radius, std::arg(entry - v.value),
                  2 * std::numbers::pi});
  path.push_back({Piece::Kind::segment, entry, base, {}, 0, 0, 0});
  return path;
}

Path enclosing_loop(std::complex<double> base, std::complex<double> center)
{
  return {{Piece::Kind::arc, {}, {}, center, std::abs(base - center), std::arg(base - center),
           2 * std::numbers::pi}};
}

template<class A>
Permutation loop_permutation(FiberTracker<A> const &tracker, Path const &path,
                             std::vector<typename A::Complex> const &base_fiber, double safety)
{
  auto end = tracker.track(path, base_fiber);
  auto match = match_roots<A>(base_fiber, end, safety);
  if (match.empty())
    throw TrackingAmbiguity("loop endpoint does not match the base fiber");
  std::vector<Point> images;
  for (auto m : match)
    images.push_back(static_cast<Point>(m));
  return Permutation::from_images(std::move(images));
}

struct TrackOutcome
{
  std::complex<double> base_point;
  std::vector<std::complex<double>> base_fiber;
  std::vector<std::size_t> order;
  std::vector<Permutation> cycles; // loop order
  Permutation enclosing;
};

template<class A>
TrackOutcome track_all(PlanePolynomial const &p, std::vector<CriticalValue> const &values,
                       TrackingConfig const &cfg)
{
  using Complex = typename A::Complex;
  FiberTracker<A> tracker(p, cfg);
  LoopGeometry geometry = choose_geometry(values, cfg.base_angle);

  Complex base = A::make(A::from_double(geometry.base_point.real()),
                         A::from_double(geometry.base_point.imag()));
  auto fiber = tracker.solve_cold(base);
  std::sort(fiber.begin(), fiber.end(), [](Complex const &a, Complex const &b) {
    if (A::real(a) != A::real(b))
      return A::real(a) < A::real(b);
    return A::imag(a) < A::imag(b);
  });

  std::vector<Path> paths;
  for (std::size_t idx : geometry.order)
    paths.push_back(critical_loop(geometry.base_point, values[idx]));
  paths.push_back(enclosing_loop(geometry.base_point, geometry.center));

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Permutation> perms(paths.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < paths.size(); ++k)
      perms[k] = loop_permutation<A>(tracker, paths[k], fiber, cfg.safety_factor);
  } else {
    for (std::size_t first = 0; first < paths.size(); first += threads) {
      std::vector<std::future<Permutation>> batch;
      for (std::size_t k = first; k < std::min(paths.size(), first + threads); ++k)
        batch.push_back(std::async(std::launch::async, [&, k] {
          return loop_permutation<A>(tracker, paths[k], fiber, cfg.safety_factor);
        }));
      for (std::size_t k = 0; k < batch.size(); ++k)
        perms[first + k] = batch[k].get();
    }
  }

  TrackOutcome out;
  out.base_point = geometry.base_point;
  for (auto const &z : fiber)
    out.base_fiber.emplace_back(A::to_double(A::real(z)), A::to_double(A::imag(z)));
  out.order = geometry.order;
  out.enclosing = perms.back();
  perms.pop_back();
  out.cycles = std::move(perms);
  return out;
}

std::complex<double> evaluate(UPoly const &p, std::complex<double> x)
{
  std::complex<double> acc = 0;
  auto const &c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;)
    acc = acc * x + c[k].get_d();
  return acc;
}

std::string format_complex(std::complex<double> z)
{
  char buf[96];
  double re = z.real() == 0 ? 0.0 : z.real();
  double im = z.imag() == 0 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
  return buf;
}

} // anonymous namespace

std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> const &coeffs,
                                                   double tolerance)
{
  std::vector<std::complex<double>> a = coeffs;
  while (!a.empty() && a.back() == 0.0)
    a.pop_back();
  if (a.size() <= 1)
    return {};
  auto z = initial_guesses<Arith<double>>(a);
  if (!aberth<Arith<double>>(a, z, tolerance, 5000)) {
    // Accept the best iterate if the residuals are small.
    for (auto const &root : z) {
      std::complex<double> p = 0;
      double scale = 0;
      for (std::size_t k = a.size(); k-- > 0;) {
        p = p * root + a[k];
        scale = scale * std::abs(root) + std::abs(a[k]);
      }
      if (std::abs(p) > 1e-8 * scale)
        throw NonGenericProjection("polynomial root finder did not converge");
    }
  }
  std::sort(z.begin(), z.end(), [](auto const &x, auto const &y) {
    if (x.real() != y.real())
      return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

CriticalValues critical_values(PlanePolynomial const &p, TrackingConfig const &cfg)
{
  if (p.y_degree() < 2)
    throw InvalidArgument("projection needs y-degree >= 2");
  CriticalValues out;
  PlanePolynomial py = p.derivative_y();
  UPoly r = resultant_y(p, py);
  out.resultant = r;
  if (r.is_zero())
    throw NonGenericProjection("polynomial is not squarefree in y");

  UPoly lead = p.y_coefficients().back();

  // Affine singular points: x-roots common to Res_y(p, p_x + t p_y) for
  // t = 0..d, away from zeros of the leading coefficient.
  PlanePolynomial px = p.derivative_x();
  UPoly singular = r;
  for (unsigned t = 0; t <= p.y_degree() && singular.degree() > 0; ++t)
    singular = gcd(singular, resultant_y(p, px + PlanePolynomial::constant(t) * py));
  for (UPoly shared = gcd(singular, lead); singular.degree() > 0 && shared.degree() > 0;
       shared = gcd(singular, lead))
    singular = exact_divide(singular, shared);
  if (singular.degree() > 0)
    throw SingularCurve("curve has an affine singular point over a root of " + singular.to_string());
  out.genericity.smooth_affine = true;

  UPoly repeated = gcd(r, r.derivative());
  if (repeated.degree() > 0)
    throw NonGenericProjection("discriminant has a repeated root (a root of " +
                               repeated.to_string() + ")");
  out.genericity.simple_discriminant_roots = true;
  out.genericity.leading_coefficient_constant = lead.is_constant();

  UPoly monic = r.monic();
  std::vector<std::complex<double>> coeffs;
  for (auto const &c : monic.coefficients())
    coeffs.emplace_back(c.get_d(), 0.0);
  auto roots = polynomial_roots(coeffs, 1e-15);

  UPoly lead_common = gcd(r, lead);
  std::vector<std::complex<double>> pole_roots;
  if (lead_common.degree() > 0) {
    std::vector<std::complex<double>> lc;
    for (auto const &c : lead_common.coefficients())
      lc.emplace_back(c.get_d(), 0.0);
    pole_roots = polynomial_roots(lc, 1e-15);
  }

  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= cfg.tolerance * (1 + std::abs(roots[i])))
        throw NonGenericProjection("critical values closer than the tolerance");

  auto y_coeffs = p.y_coefficients();
  bool one_double = true;
  for (auto const &x0 : roots) {
    CriticalValue v{};
    v.value = x0;
    double scale = 0;
    for (std::size_t k = monic.coefficients().size(); k-- > 0;)
      scale = scale * std::abs(x0) + std::abs(monic.coefficients()[k].get_d());
    v.residual = std::abs(evaluate(monic, x0)) / scale;
    v.leading_coefficient_vanishes =
        std::any_of(pole_roots.begin(), pole_roots.end(),
                    [&](auto const &z) { return std::abs(z - x0) < 1e-6 * (1 + std::abs(x0)); });

    std::vector<std::complex<double>> fiber_coeffs;
    for (auto const &a : y_coeffs)
      fiber_coeffs.push_back(evaluate(a, x0));
    auto fiber = polynomial_roots(fiber_coeffs, 1e-15);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = i + 1; j < fiber.size(); ++j)
        if (std::abs(fiber[i] - fiber[j]) < 1e-5 * (1 + std::abs(fiber[i])))
          ++pairs;
    v.coincident_root_pairs = pairs;
    if (!v.leading_coefficient_vanishes && pairs != 1)
      one_double = false;
    if (v.leading_coefficient_vanishes)
      out.genericity.notes.push_back("leading coefficient vanishes at critical value " +
                                     format_complex(x0));

    double nearest = std::numeric_limits<double>::infinity();
    for (auto const &other : roots)
      if (&other != &x0)
        nearest = std::min(nearest, std::abs(other - x0));
    v.loop_radius = std::isfinite(nearest) ? nearest / 2 : 1.0;
    out.values.push_back(v);
  }
  out.genericity.one_double_root_per_fiber = one_double;
  return out;
}

MonodromyResult track_monodromy(PlanePolynomial const &p, TrackingConfig const &cfg)
{
  CriticalValues crit = critical_values(p, cfg);

  MonodromyResult result;
  result.polynomial = p;
  result.degree = p.y_degree();
  result.genericity = crit.genericity;
  result.retries = 0;

  TrackingConfig attempt = cfg;
  for (;;) {
    TrackOutcome outcome = attempt.precision == Precision::double_precision
                               ? track_all<Arith<double>>(p, crit.values, attempt)
                               : track_all<Arith<Quad>>(p, crit.values, attempt);
    Permutation product(result.degree);
    for (auto const &c : outcome.cycles)
      product = compose(product, c);
    if (product == outcome.enclosing) {
      result.base_point = outcome.base_point;
      result.base_fiber = outcome.base_fiber;
      for (std::size_t idx : outcome.order)
        result.critical_values.push_back(crit.values[idx]);
      result.branch_cycles = outcome.cycles;
      result.infinity_cycle = outcome.enclosing.inverse();
      result.precision_used = attempt.precision;
      break;
    }
    if (attempt.precision == Precision::quad_precision)
      throw RelationViolation("product of branch cycles " + to_cycle_string(product) +
                              " differs from the enclosing loop " +
                              to_cycle_string(outcome.enclosing));
    attempt.precision = Precision::quad_precision;
    ++result.retries;
  }

  BranchedCover &cover = result.cover;
  cover.degree = result.degree;
  cover.base_genus = 0;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < result.branch_cycles.size(); ++k) {
    if (result.branch_cycles[k].is_identity())
      continue;
    cover.branch_cycles.push_back(result.branch_cycles[k]);
    labels.push_back("x=" + format_complex(result.critical_values[k].value));
  }
  if (!result.infinity_cycle.is_identity()) {
    cover.branch_cycles.push_back(result.infinity_cycle);
    labels.push_back("x=inf");
  }
  cover.labels = std::move(labels);
  return result;
}

ProjectionCertificate certify_projection(MonodromyResult const &result)
{
  require_valid(result.cover);
  ProjectionCertificate cert{};
  cert.finite_cycles_morse = std::all_of(result.branch_cycles.begin(), result.branch_cycles.end(),
                                         [](Permutation const &c) { return c.is_transposition(); });
  cert.infinity_trivial = result.infinity_cycle.is_identity();
  cert.infinity_transposition = result.infinity_cycle.is_transposition();
  cert.full_morse = is_morse(result.cover) && cert.finite_cycles_morse;
  GeneratedGroup g = monodromy_group(result.cover);
  cert.group_order = g.order();
  cert.symmetric_group = g.order() == factorial(result.degree);
  cert.transitivity = transitivity(g);
  cert.total_space_genus = total_space_genus(result.cover);
  cert.sd = certify_sd(result.cover);
  return cert;
}

ProjectionCertificate certify_projection(PlanePolynomial const &p, TrackingConfig const &cfg)
{
  return certify_projection(track_monodromy(p, cfg));
}

} // namespace ramify
