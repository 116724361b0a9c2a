#include "slicealg/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "slicealg/errors.hpp"

namespace slicealg {

Quaternion pow(Quaternion q, unsigned n) {
  Quaternion result(1.0);
  while (n > 0) {
    if (n & 1U) result = result * q;
    n >>= 1U;
    if (n > 0) q = q * q;
  }
  return result;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  const double scale = std::max({a.norm(), b.norm(), 1.0});
  return (a - b).norm() <= tol * scale;
}

bool commutes(const Quaternion& a, const Quaternion& b, double tol) {
  return (a * b - b * a).norm() <= tol * (a.norm() * b.norm() + 1.0);
}

SlicePoint decompose(const Quaternion& x, std::optional<Quaternion> real_axis_unit) {
  SlicePoint p;
  p.alpha = x.w;
  p.beta = x.imag_norm();
  if (p.beta > 0.0) {
    p.unit = x.imag() / p.beta;
    return p;
  }
  p.on_real_axis = true;
  if (real_axis_unit) p.unit = unit_imaginary(*real_axis_unit);
  return p;
}

Quaternion unit_imaginary(const Quaternion& u) {
  const double n = u.imag_norm();
  if (!(n > 0.0)) throw DomainError("imaginary unit requested from a real quaternion");
  return u.imag() / n;
}

Quaternion orthogonal_unit(const Quaternion& u) {
  // Cross product with the coordinate axis least aligned with u.
  const double ax = std::abs(u.x1), ay = std::abs(u.x2), az = std::abs(u.x3);
  Quaternion axis = (ax <= ay && ax <= az) ? Quaternion::i() : (ay <= az ? Quaternion::j() : Quaternion::k());
  // For purely imaginary a, b: Im(ab) = a x b.
  return unit_imaginary((u.imag() * axis).imag());
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!is_space(c)) s.push_back(c);
  if (s.empty()) throw ParseError("empty quaternion literal");

  Quaternion q;
  std::size_t pos = 0;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1.0;
      ++pos;
    }
    double magnitude = 1.0;
    bool saw_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      const char* begin = s.data() + pos;
      const char* end = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(begin, end, magnitude);
      if (ec != std::errc() || ptr == begin) {
        throw ParseError("malformed number in quaternion literal '" + std::string(text) + "'");
      }
      pos += static_cast<std::size_t>(ptr - begin);
      saw_number = true;
    }
    int component = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      component = s[pos] == 'i' ? 1 : (s[pos] == 'j' ? 2 : 3);
      ++pos;
    } else if (!saw_number) {
      throw ParseError("unexpected character in quaternion literal '" + std::string(text) + "'");
    }
    if (!std::isfinite(magnitude)) throw ParseError("non-finite component in '" + std::string(text) + "'");
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw ParseError("unexpected character in quaternion literal '" + std::string(text) + "'");
    }
    const double v = sign * magnitude;
    switch (component) {
      case 0: q.w += v; break;
      case 1: q.x1 += v; break;
      case 2: q.x2 += v; break;
      default: q.x3 += v; break;
    }
  }
  return q;
}

std::vector<Quaternion> parse_quaternion_list(std::string_view text) {
  std::vector<Quaternion> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool blank = std::all_of(item.begin(), item.end(), is_space);
    if (blank) {
      if (comma != std::string_view::npos || !out.empty()) throw ParseError("empty entry in quaternion list");
    } else {
      out.push_back(parse_quaternion(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_real(double v) {
  if (!std::isfinite(v)) throw IoError("cannot format a non-finite value");
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_quaternion(const Quaternion& q) {
  std::string out = format_real(q.w);
  const double parts[3] = {q.x1, q.x2, q.x3};
  const char units[3] = {'i', 'j', 'k'};
  for (int n = 0; n < 3; ++n) {
    std::string p = format_real(parts[n]);
    if (p.front() != '-') out.push_back('+');
    out += p;
    out.push_back(units[n]);
  }
  return out;
}

}  // namespace slicealg
