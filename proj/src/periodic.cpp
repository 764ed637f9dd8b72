#include "srgeo/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <tuple>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

// Smallest 1 - k^2 the solver tries, just inside the range Modulus accepts.
constexpr double kMinComplement = 4e-12;
constexpr double kTargetTolerance = 1e-12;

void require_a(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("metric invariant a must lie in (0, 1), got " + std::to_string(a));
  }
}

}  // namespace

double G1(double a, const special::Modulus& k) {
  require_a(a);
  const double a2 = a * a;
  const double scale = std::sqrt((1.0 - a2 * k.mc()) / (a2 * (1.0 - a2)));
  return scale * special::complete_Pi({a2 * k.m() / (a2 - 1.0)}, k);
}

double G2(double a, const special::Modulus& k) {
  require_a(a);
  const double a2 = a * a;
  const double scale = std::sqrt((k.m() + a2 * k.mc()) / (a2 * (1.0 - a2)));
  return scale * special::complete_Pi({a2 / (a2 - 1.0)}, k);
}

double dG1_dk(double a, const special::Modulus& k) {
  require_a(a);
  if (k.k() == 0.0) {
    return 0.0;
  }
  const double a2 = a * a;
  const double big_e = special::complete_E(k), big_k = special::complete_K(k);
  return (big_e - k.mc() * big_k) /
         (a2 * k.k() * k.mc() * std::sqrt(1.0 / a2 + k.m() / (1.0 - a2)));
}

double dG2_dk(double a, const special::Modulus& k) {
  require_a(a);
  const double a2 = a * a;
  return k.k() * special::complete_E(k) /
         (a2 * k.mc() * std::sqrt(1.0 / (1.0 - a2) + k.m() / a2));
}

double G(Region region, double a, const special::Modulus& k) {
  switch (region) {
    case Region::C1: return G1(a, k);
    case Region::C2: return G2(a, k);
    default:
      throw DomainError("periodic geodesics are parameterised in C1 and C2 only");
  }
}

void PeriodicSpec::validate() const {
  if (n < 1 || m < 1) {
    throw DomainError("periodic geodesic needs positive n and m");
  }
  if (std::gcd(n, m) != 1) {
    throw DomainError("fraction " + std::to_string(n) + "/" + std::to_string(m) +
                      " is reducible");
  }
  if (region != Region::C1 && region != Region::C2) {
    throw DomainError("periodic geodesics live in C1 or C2");
  }
}

bool PeriodicSpec::admissible(const SRParams& params) const {
  if (region == Region::C1) {
    return params.a() * n > m;
  }
  return n > m;
}

double PeriodicSpec::target() const { return std::numbers::pi / 2.0 * n / m; }

EllipticData PeriodicGeodesic::elliptic(double theta0, int sign) const {
  EllipticData ed;
  ed.region = spec.region;
  ed.k = k;
  ed.theta0 = theta0;
  ed.s1 = sign < 0 ? -1 : 1;
  ed.s2 = ed.s1;
  return ed;
}

int expected_lift_sign(const PeriodicSpec& spec) {
  // phi3 gains 2 pi n; in C2 phi1 additionally turns once per period.
  const int winding = spec.region == Region::C2 ? spec.n + spec.m : spec.n;
  return winding % 2 == 0 ? 1 : -1;
}

std::optional<PeriodicGeodesic> solve_periodic(const PeriodicSpec& spec, const SRParams& params) {
  spec.validate();
  if (!spec.admissible(params)) {
    return std::nullopt;
  }
  const double a = params.a();
  const double target = spec.target();
  // Work in mc = 1 - k^2 so that k close to 1 keeps its precision; G decreases in mc.
  const double mc_cap = kMinComplement;
  const auto g_of = [&](double mc) {
    return G(spec.region, a, special::Modulus::from_complement(mc));
  };

  double hi = 1.0;
  double lo = 0.75;
  while (g_of(lo) < target) {
    if (lo <= mc_cap) {
      return std::nullopt;
    }
    hi = lo;
    lo = std::max(lo / 16.0, mc_cap);
  }

  double mc = lo;
  double g = g_of(mc);
  for (int it = 0; it < 400 && std::abs(g - target) > kTargetTolerance; ++it) {
    const double mid = hi > 2.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double gm = g_of(mid);
    if (gm < target) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (std::abs(gm - target) < std::abs(g - target)) {
      mc = mid;
      g = gm;
    }
  }

  PeriodicGeodesic pg;
  pg.spec = spec;
  pg.k = special::Modulus::from_complement(mc);
  pg.residual = std::abs(g - target);
  const double big_k = special::complete_K(pg.k);
  pg.T = spec.region == Region::C1 ? 4.0 * big_k / a : 4.0 * pg.k.k() * big_k / a;
  pg.total_time = spec.m * pg.T;
  pg.contractible = expected_lift_sign(spec) > 0;
  return pg;
}

ClosureReport verify_closure(const PeriodicGeodesic& pg, const EllipticData& ed,
                             const SRParams& params) {
  const Geodesic geo(ed, params);
  const GeodesicSample s = geo.sample(pg.total_time);
  ClosureReport r;
  r.closure_error = (s.R - Rotation::Identity()).cwiseAbs().maxCoeff();
  r.lift_sign = s.q.q0 >= 0.0 ? 1 : -1;
  r.lift_error = distance(s.q, r.lift_sign > 0 ? UnitQuaternion{} : -UnitQuaternion{});
  return r;
}

std::vector<PeriodicGeodesic> enumerate_periodic(const SRParams& params, int max_n, int max_m,
                                                 std::optional<Region> region) {
  if (max_n < 1 || max_m < 1) {
    throw DomainError("enumeration bounds must be at least 1");
  }
  std::vector<PeriodicGeodesic> out;
  for (Region r : {Region::C1, Region::C2}) {
    if (region && *region != r) {
      continue;
    }
    for (int m = 1; m <= max_m; ++m) {
      for (int n = 1; n <= max_n; ++n) {
        if (std::gcd(n, m) != 1) {
          continue;
        }
        if (auto pg = solve_periodic({n, m, r}, params)) {
          out.push_back(*pg);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PeriodicGeodesic& x, const PeriodicGeodesic& y) {
    return std::tuple(x.total_time, static_cast<int>(x.spec.region), x.spec.n, x.spec.m) <
           std::tuple(y.total_time, static_cast<int>(y.spec.region), y.spec.n, y.spec.m);
  });
  return out;
}

}  // namespace srgeo
