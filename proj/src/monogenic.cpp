#include "slicealg/monogenic.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

using complex = std::complex<double>;

std::vector<complex> powers(complex z, unsigned n) {
  std::vector<complex> p(n + 1);
  p[0] = 1.0;
  for (unsigned k = 1; k <= n; ++k) p[k] = p[k - 1] * z;
  return p;
}

complex to_complex(const SlicePoint& p) { return {p.alpha, p.beta}; }

Quaternion from_stem(complex v, const Quaternion& unit) { return Quaternion(v.real()) + unit * v.imag(); }

// sum_{k=1}^{n+1} k z^{k-1} zb^{n-k+1} with precomputed powers.
complex p_from_powers(unsigned n, const std::vector<complex>& zp, const std::vector<complex>& zbp) {
  complex s = 0.0;
  for (unsigned k = 1; k <= n + 1; ++k) s += static_cast<double>(k) * zp[k - 1] * zbp[n - k + 1];
  return s;
}

const Quaternion kBasis[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};

}  // namespace

complex p_stem(unsigned n, complex z) { return p_from_powers(n, powers(z, n), powers(std::conj(z), n)); }

complex p_stem_dzbar(unsigned n, complex z) {
  const auto zp = powers(z, n);
  const auto zbp = powers(std::conj(z), n);
  complex s = 0.0;
  for (unsigned k = 1; k <= n; ++k) s += static_cast<double>(k * (n - k + 1)) * zp[k - 1] * zbp[n - k];
  return s;
}

Quaternion eval_P(unsigned n, const Quaternion& x) {
  const SlicePoint p = decompose(x, Quaternion::i());
  return from_stem(p_stem(n, to_complex(p)), p.unit);
}

Quaternion eval_Z(unsigned n, const Quaternion& x) {
  const SlicePoint p = decompose(x, Quaternion::i());
  const complex z = to_complex(p);
  const auto zp = powers(z, n);
  const auto zbp = powers(std::conj(z), n);
  complex s = 0.0;
  for (unsigned k = 0; k <= n; ++k) s += zp[k] * zbp[n - k];
  return from_stem(s, p.unit);
}

MonogenicSeries fueter_laplacian(const PowerSeries& f) {
  MonogenicSeries m;
  m.truncated = f.is_truncated();
  if (f.is_truncated() && f.order() < 2) throw RangeError("Laplacian of a series truncated below order 2");
  const std::size_t size = f.size() > 2 ? f.size() - 2 : 0;
  m.coeffs.resize(size);
  for (std::size_t k = 0; k < size; ++k) m.coeffs[k] = f.coeff(k + 2) * -4.0;
  return m;
}

PowerSeries inv_laplacian(const MonogenicSeries& m) {
  std::vector<Quaternion> a(m.size() + 2);
  for (std::size_t n = 0; n < m.size(); ++n) a[n + 2] = m.coeffs[n] * -0.25;
  if (m.size() == 0 && !m.truncated) return PowerSeries::polynomial({});
  return m.truncated ? PowerSeries::truncated(std::move(a)) : PowerSeries::polynomial(std::move(a));
}

MonogenicSeries apply_L(const Quaternion& lambda, const MonogenicSeries& m) {
  MonogenicSeries out;
  out.truncated = m.truncated;
  std::size_t size = m.size();
  if (m.truncated) {
    if (size < 2) throw RangeError("L_lambda of an order-0 truncated series has no known coefficients");
    size -= 1;
  }
  out.coeffs.resize(size);
  for (std::size_t k = 0; k < size; ++k)
    out.coeffs[k] = m.coeff(k + 1) * static_cast<double>(k + 3) - m.coeff(k) * lambda;
  return out;
}

MonogenicSeries delta_exp(const EigenTuple& lambdas, std::size_t N) {
  return fueter_laplacian(gen_exp(lambdas, N + 2));
}

Quaternion eval_monogenic(const MonogenicSeries& m, const Quaternion& x) {
  if (m.size() == 0) return {};
  const SlicePoint p = decompose(x, Quaternion::i());
  const complex z = to_complex(p);
  const auto n_max = static_cast<unsigned>(m.size() - 1);
  const auto zp = powers(z, n_max);
  const auto zbp = powers(std::conj(z), n_max);
  Quaternion re_part, im_part;
  for (unsigned n = 0; n <= n_max; ++n) {
    const complex pn = p_from_powers(n, zp, zbp);
    re_part += m.coeffs[n] * pn.real();
    im_part += m.coeffs[n] * pn.imag();
  }
  return re_part + p.unit * im_part;
}

Quaternion laplacian_pointwise(const SliceExpr& f, const Quaternion& x, const SliceExpr& dfdx) {
  const SlicePoint p = decompose(x);
  if (p.on_real_axis) throw DomainError("first-order Laplacian formula needs a non-real point");
  const Stem s = f.stem_at(x);
  const Quaternion spherical = s.f2 / p.beta;
  return p.unit * (spherical - dfdx(x)) * (-2.0 / p.beta);
}

Quaternion laplacian_from_partials(const PowerSeries& f, const Quaternion& x) {
  if (x.is_real()) throw DomainError("first-order Laplacian formula needs a non-real point");
  Quaternion sum = directional_derivative(f, x, kBasis[0]) * 3.0;
  for (int m = 1; m < 4; ++m) sum += kBasis[m] * directional_derivative(f, x, kBasis[m]);
  const Quaternion im = x.imag();
  return im / im.norm2() * sum;
}

CrfPair fd_crf(const Field& f, const Quaternion& x, double h) {
  Quaternion d[4];
  for (int m = 0; m < 4; ++m) d[m] = (f(x + kBasis[m] * h) - f(x - kBasis[m] * h)) / (2.0 * h);
  const Quaternion vec = kBasis[1] * d[1] + kBasis[2] * d[2] + kBasis[3] * d[3];
  return {(d[0] + vec) * 0.5, (d[0] - vec) * 0.5};
}

Quaternion fd_laplacian4(const Field& f, const Quaternion& x, double h) {
  const Quaternion centre = f(x) * 2.0;
  Quaternion sum;
  for (const auto& e : kBasis) sum += f(x + e * h) - centre + f(x - e * h);
  return sum / (h * h);
}

RichardsonCheck richardson(const std::function<double(double)>& residual_at, double h, double noise_floor) {
  RichardsonCheck r;
  r.residual_h = residual_at(h);
  r.residual_half = residual_at(h / 2.0);
  if (r.residual_h <= noise_floor && r.residual_half <= noise_floor) {
    r.exact = true;
    return r;
  }
  r.order = r.residual_half > 0.0 ? std::log2(r.residual_h / r.residual_half) : std::numeric_limits<double>::infinity();
  return r;
}

std::string monogenic_to_json(const MonogenicSeries& m) {
  std::string body = coefficients_to_json(m.coeffs);
  // indent the nested array under the "coeffs" key
  std::string indented;
  for (char c : body) {
    indented.push_back(c);
    if (c == '\n') indented += "  ";
  }
  while (!indented.empty() && (indented.back() == ' ' || indented.back() == '\n')) indented.pop_back();
  return "{\n  \"basis\": \"P\",\n  \"coeffs\": " + indented + "\n}\n";
}

MonogenicSeries monogenic_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("monogenic series is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("basis", std::string()) != "P" || !doc.contains("coeffs")) {
    throw ParseError("monogenic series must be {\"basis\": \"P\", \"coeffs\": [...]}");
  }
  MonogenicSeries m;
  m.coeffs = coefficients_from_json(doc["coeffs"].dump());
  return m;
}

}  // namespace slicealg
