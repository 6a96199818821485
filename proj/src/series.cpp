#include "sgtau/series.hpp"

#include <cmath>

#include "sgtau/errors.hpp"

namespace sgtau::series {

std::int64_t PowerSeries::key(double e) {
  return static_cast<std::int64_t>(std::llround(e * 1e9));
}

void PowerSeries::add(double exponent, double coeff) {
  if (coeff == 0.0) return;
  terms_[key(exponent)] += coeff;
}

PowerSeries PowerSeries::plus(const PowerSeries& o, double factor) const {
  PowerSeries r = *this;
  for (const auto& [k, c] : o.terms_) r.terms_[k] += factor * c;
  return r;
}

PowerSeries PowerSeries::times(const PowerSeries& o, double e_max) const {
  const std::int64_t kmax = key(e_max);
  PowerSeries r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      if (ka + kb > kmax) break;
      r.terms_[ka + kb] += ca * cb;
    }
  }
  return r;
}

PowerSeries PowerSeries::exp(double e_max) const {
  PowerSeries r;
  r.add(0.0, 1.0);
  if (terms_.empty()) return r;
  if (terms_.begin()->first <= 0)
    throw DomainError("PowerSeries::exp: exponents must be positive");
  PowerSeries pw = r;  // running S^k / k!
  const double e_min = 1e-9 * static_cast<double>(terms_.begin()->first);
  const int n = static_cast<int>(e_max / e_min) + 1;
  for (int k = 1; k <= n; ++k) {
    pw = pw.times(*this, e_max);
    if (pw.terms_.empty()) break;
    for (auto& [kk, cc] : pw.terms_) cc /= k;
    r = r.plus(pw);
  }
  return r;
}

PowerSeries PowerSeries::shifted(double shift) const {
  PowerSeries r;
  const std::int64_t dk = key(shift);
  for (const auto& [k, c] : terms_) r.terms_[k + dk] = c;
  return r;
}

PowerSeries PowerSeries::truncated(double e_max) const {
  PowerSeries r;
  const std::int64_t kmax = key(e_max);
  for (const auto& [k, c] : terms_) {
    if (k > kmax) break;
    r.terms_[k] = c;
  }
  return r;
}

double PowerSeries::eval(double t) const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += c * std::pow(t, 1e-9 * static_cast<double>(k));
  return s;
}

double PowerSeries::min_exponent() const {
  if (terms_.empty()) return 0.0;
  return 1e-9 * static_cast<double>(terms_.begin()->first);
}

std::vector<std::pair<double, double>> PowerSeries::terms() const {
  std::vector<std::pair<double, double>> v;
  v.reserve(terms_.size());
  for (const auto& [k, c] : terms_) v.push_back({1e-9 * static_cast<double>(k), c});
  return v;
}

namespace {

PowerSeries negate(const PowerSeries& s) {
  PowerSeries r;
  for (const auto& [e, c] : s.terms()) r.add(e, -c);
  return r;
}

bool close(const PowerSeries& a, const PowerSeries& b) {
  const auto ta = a.terms(), tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].first != tb[i].first ||
        std::abs(ta[i].second - tb[i].second) >
            1e-14 * (1.0 + std::abs(tb[i].second)))
      return false;
  return true;
}

// g(x) in the Painleve variable x = t/2 with Bp = B 2^sigma:
//   g'' + g'/x = (2 nu / x)(u - 1/u) + u^2 - 1/u^2,   u = Bp x^sigma e^g.
// A particular solution of g'' + g'/x = kappa x^{E-2} is (kappa/E^2) x^E, so
// the lattice coefficients follow by iterating to a fixed point.
PowerSeries g_series_painleve_var(double sigma, double Bp, double nu, double e_max) {
  const double alpha = 1.0 - sigma;
  if (alpha < 0.02)
    throw DomainError(
        "log_u_corrections: sigma too close to 1 for the lattice expansion");
  PowerSeries g;
  const int sweeps = static_cast<int>(e_max / alpha) + 3;
  for (int it = 0; it < sweeps; ++it) {
    const PowerSeries eg = g.exp(e_max);
    const PowerSeries emg = negate(g).exp(e_max);
    PowerSeries src;  // coefficient of x^{E-2}, keyed by E
    auto accumulate = [&](const PowerSeries& s, double shift, double fac) {
      for (const auto& [e, c] : s.terms()) {
        const double E = e + shift;
        if (E > 1e-12 && E <= e_max + 1e-12) src.add(E, fac * c);
      }
    };
    accumulate(eg, sigma + 1.0, 2.0 * nu * Bp);                      // (2nu/x) u
    accumulate(emg, 1.0 - sigma, -2.0 * nu / Bp);                    // -(2nu/x)/u
    accumulate(eg.times(eg, e_max), 2.0 * sigma + 2.0, Bp * Bp);     // u^2
    accumulate(emg.times(emg, e_max), 2.0 - 2.0 * sigma, -1.0 / (Bp * Bp));  // -1/u^2
    PowerSeries gn;
    for (const auto& [E, c] : src.terms()) gn.add(E, c / (E * E));
    const bool done = close(g, gn);
    g = gn;
    if (done) break;
  }
  return g;
}

}  // namespace

PowerSeries log_u_corrections(double sigma, double B, double nu, double e_max) {
  if (!(B > 0.0)) throw DomainError("log_u_corrections: need B > 0");
  if (!(sigma > 0.0) || !(sigma < 1.0))
    throw DomainError("log_u_corrections: need sigma in (0,1)");
  const double Bp = B * std::pow(2.0, sigma);
  const PowerSeries g = g_series_painleve_var(sigma, Bp, nu, e_max);
  // Rescale from x = t/2 to t: the coefficient of t^E picks up 2^{-E}.
  PowerSeries G;
  for (const auto& [e, c] : g.terms()) G.add(e, c * std::pow(2.0, -e));
  return G;
}

PowerSeries log_tau_over_cosh_corrections(double sigma, double B, double nu,
                                          double e_max) {
  // With w(t) = u(t/2) = B t^sigma e^{G(t)}:
  //   d/dt ln(tau/cosh(q/2)) = sigma^2/(4t) + sigma G'/2 + (t/4) G'^2
  //       - (t/16)(w^{-2} - 2 + w^2) - (nu/4)(1/w - 2 + w),
  // every term of the form c t^{E-1} with E > 0; integrating gives (c/E) t^E.
  const PowerSeries G = log_u_corrections(sigma, B, nu, e_max);
  PowerSeries Gp;  // G'(t)
  for (const auto& [e, c] : G.terms()) Gp.add(e - 1.0, c * e);
  const PowerSeries eG = G.exp(e_max);
  const PowerSeries emG = negate(G).exp(e_max);
  const PowerSeries e2G = eG.times(eG, e_max);
  const PowerSeries em2G = emG.times(emG, e_max);
  PowerSeries one;
  one.add(0.0, 1.0);

  PowerSeries src;  // coefficient of t^{E-1}, keyed by E
  auto accumulate = [&](const PowerSeries& s, double shift, double fac) {
    for (const auto& [e, c] : s.terms()) {
      const double E = e + shift;
      if (E > 1e-12 && E <= e_max + 1e-12) src.add(E, fac * c);
    }
  };
  accumulate(Gp, 1.0, 0.5 * sigma);                             // sigma G'/2
  accumulate(Gp.times(Gp, e_max), 2.0, 0.25);                   // (t/4) G'^2
  accumulate(em2G, 1.0 - 2.0 * sigma, -1.0 / (16.0 * B * B));   // -(t/16) w^-2
  accumulate(one, 2.0, 1.0 / 8.0);                              // -(t/16)(-2)
  accumulate(e2G, 1.0 + 2.0 * sigma, -B * B / 16.0);            // -(t/16) w^2
  accumulate(emG, 1.0 - sigma, -0.25 * nu / B);                 // -(nu/4)/w
  accumulate(one, 1.0, 0.5 * nu);                               // -(nu/4)(-2)
  accumulate(eG, 1.0 + sigma, -0.25 * nu * B);                  // -(nu/4) w

  PowerSeries T;
  for (const auto& [E, c] : src.terms()) T.add(E, c / E);
  return T;
}

}  // namespace sgtau::series
