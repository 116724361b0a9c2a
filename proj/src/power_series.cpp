#include "slicealg/power_series.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

std::size_t min_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }

template <typename Op>
PowerSeries combine(const PowerSeries& a, const PowerSeries& b, Op op) {
  const std::size_t order = min_order(a, b);
  const std::size_t n = order == PowerSeries::kExact ? std::max(a.size(), b.size()) : order + 1;
  std::vector<Quaternion> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = op(a.coeff(k), b.coeff(k));
  return order == PowerSeries::kExact ? PowerSeries::polynomial(std::move(c)) : PowerSeries::truncated(std::move(c));
}

PowerSeries rebuild(const PowerSeries& like, std::vector<Quaternion> c) {
  return like.is_truncated() ? PowerSeries::truncated(std::move(c)) : PowerSeries::polynomial(std::move(c));
}

}  // namespace

PowerSeries PowerSeries::polynomial(std::vector<Quaternion> coeffs) { return PowerSeries(std::move(coeffs), false); }

PowerSeries PowerSeries::truncated(std::vector<Quaternion> coeffs) {
  if (coeffs.empty()) throw RangeError("a truncated series needs at least one known coefficient");
  return PowerSeries(std::move(coeffs), true);
}

PowerSeries PowerSeries::monomial(std::size_t n, const Quaternion& c) {
  std::vector<Quaternion> v(n + 1);
  v[n] = c;
  return polynomial(std::move(v));
}

PowerSeries& PowerSeries::trim() {
  if (!truncated_)
    while (!coeffs_.empty() && coeffs_.back() == Quaternion()) coeffs_.pop_back();
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  std::vector<Quaternion> c(coeffs_);
  for (auto& q : c) q = -q;
  return PowerSeries(std::move(c), truncated_);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  return *this = combine(*this, o, [](const Quaternion& x, const Quaternion& y) { return x + y; });
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  return *this = combine(*this, o, [](const Quaternion& x, const Quaternion& y) { return x - y; });
}

PowerSeries PowerSeries::right_mul(const Quaternion& c) const {
  std::vector<Quaternion> v(coeffs_);
  for (auto& q : v) q = q * c;
  return PowerSeries(std::move(v), truncated_);
}

PowerSeries PowerSeries::left_mul(const Quaternion& c) const {
  std::vector<Quaternion> v(coeffs_);
  for (auto& q : v) q = c * q;
  return PowerSeries(std::move(v), truncated_);
}

PowerSeries PowerSeries::scaled(double s) const {
  std::vector<Quaternion> v(coeffs_);
  for (auto& q : v) q *= s;
  return PowerSeries(std::move(v), truncated_);
}

PowerSeries PowerSeries::truncate(std::size_t n) const {
  std::vector<Quaternion> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (truncated_ && k >= coeffs_.size()) throw RangeError("truncation past the known order of the series");
    v[k] = coeff(k);
  }
  return PowerSeries(std::move(v), true);
}

Quaternion eval(const PowerSeries& f, const Quaternion& x) {
  const auto& a = f.coeffs();
  if (a.empty()) return {};
  Quaternion r = a.back();
  for (std::size_t n = a.size() - 1; n-- > 0;) r = x * r + a[n];
  return r;
}

Quaternion directional_derivative(const PowerSeries& f, const Quaternion& x, const Quaternion& e) {
  const auto& a = f.coeffs();
  Quaternion power(1.0);  // x^{n-1}
  Quaternion dpower;      // d(x^{n-1})[e]
  Quaternion sum;
  for (std::size_t n = 1; n < a.size(); ++n) {
    dpower = dpower * x + power * e;
    power = power * x;
    sum += dpower * a[n];
  }
  return sum;
}

PowerSeries slice_product(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = min_order(f, g);
  if (f.size() == 0 || g.size() == 0) {
    if (order == PowerSeries::kExact) return PowerSeries::polynomial({});
    return PowerSeries::truncated(std::vector<Quaternion>(order + 1));
  }
  std::size_t n = f.size() + g.size() - 1;
  if (order != PowerSeries::kExact) n = order + 1;
  std::vector<Quaternion> c(n);
  for (std::size_t i = 0; i < f.size() && i < n; ++i)
    for (std::size_t k = 0; k < g.size() && i + k < n; ++k) c[i + k] += f.coeffs()[i] * g.coeffs()[k];
  return order == PowerSeries::kExact ? PowerSeries::polynomial(std::move(c)) : PowerSeries::truncated(std::move(c));
}

PowerSeries slice_conjugate(const PowerSeries& f) {
  std::vector<Quaternion> c(f.coeffs());
  for (auto& q : c) q = q.conj();
  return rebuild(f, std::move(c));
}

PowerSeries normal(const PowerSeries& f) { return slice_product(f, slice_conjugate(f)); }

PowerSeries slice_derivative(const PowerSeries& f) {
  const auto& a = f.coeffs();
  if (a.size() <= 1) {
    if (f.is_truncated()) throw RangeError("derivative of an order-0 truncated series has no known coefficients");
    return PowerSeries::polynomial({});
  }
  std::vector<Quaternion> c(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) c[n - 1] = a[n] * static_cast<double>(n);
  return rebuild(f, std::move(c));
}

Quaternion spherical_derivative_eval(const PowerSeries& f, const Quaternion& x) {
  if (x.is_real()) {
    if (f.size() <= 1) return {};
    return eval(slice_derivative(f), x);
  }
  const Quaternion im = x.imag();
  const Quaternion im_inv = -im / im.norm2();
  return im_inv * (eval(f, x) - eval(f, x.conj())) * 0.5;
}

PowerSeries exp_series(const Quaternion& lambda, std::size_t N) {
  std::vector<Quaternion> c(N + 1);
  c[0] = Quaternion(1.0);
  for (std::size_t n = 1; n <= N; ++n) c[n] = c[n - 1] * lambda / static_cast<double>(n);
  return PowerSeries::truncated(std::move(c));
}

double exp_tail_bound(double abs_x_lambda, std::size_t N) {
  if (abs_x_lambda == 0.0) return 0.0;
  const double m = static_cast<double>(N + 1);
  return std::exp(m * std::log(abs_x_lambda) + abs_x_lambda - std::lgamma(m + 1.0));
}

std::size_t truncation_for(double abs_x_lambda, double tol) {
  std::size_t N = 0;
  while (exp_tail_bound(abs_x_lambda, N) >= tol) {
    if (++N > 100000) throw RangeError("no practical truncation reaches the requested tolerance");
  }
  return N;
}

std::string coefficients_to_json(std::span<const Quaternion> coeffs) {
  if (coeffs.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Quaternion& q = coeffs[n];
    out += "  [" + format_real(q.w) + ", " + format_real(q.x1) + ", " + format_real(q.x2) + ", " +
           format_real(q.x3) + "]";
    out += n + 1 < coeffs.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::vector<Quaternion> coefficients_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("coefficient file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("coefficient file must be a JSON array of [w, x1, x2, x3]");
  std::vector<Quaternion> out;
  out.reserve(doc.size());
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 4) throw ParseError("coefficient entries must be [w, x1, x2, x3]");
    double v[4];
    for (std::size_t c = 0; c < 4; ++c) {
      if (!entry[c].is_number()) throw ParseError("coefficient components must be numbers");
      v[c] = entry[c].get<double>();
    }
    out.emplace_back(v[0], v[1], v[2], v[3]);
  }
  return out;
}

}  // namespace slicealg
