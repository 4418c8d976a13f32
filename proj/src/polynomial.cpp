#include "cq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "cq/errors.hpp"

namespace cq {

namespace {

using Exponents = PolynomialObservable::Exponents;
using Terms = std::map<Exponents, double>;

void add_term(Terms& t, const Exponents& e, double c) {
  if (c == 0.0) return;
  t[e] += c;
}

// nz^2 -> 1 - nx^2 - ny^2 until every nz-degree is <= 1.
Terms canonicalize(Terms raw) {
  Terms out;
  while (!raw.empty()) {
    auto it = raw.begin();
    const Exponents e = it->first;
    const double c = it->second;
    raw.erase(it);
    if (c == 0.0) continue;
    if (e[2] <= 1) {
      out[e] += c;
      continue;
    }
    add_term(raw, {e[0], e[1], e[2] - 2}, c);
    add_term(raw, {e[0] + 2, e[1], e[2] - 2}, -c);
    add_term(raw, {e[0], e[1] + 2, e[2] - 2}, -c);
  }
  double scale = 0.0;
  for (const auto& [e, c] : out) scale = std::max(scale, std::abs(c));
  for (auto it = out.begin(); it != out.end();) {
    if (std::abs(it->second) <= 1e-14 * scale) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace

PolynomialObservable PolynomialObservable::from_raw(const Terms& raw) {
  PolynomialObservable p;
  p.terms_ = canonicalize(raw);
  return p;
}

PolynomialObservable PolynomialObservable::constant(double c) { return monomial({0, 0, 0}, c); }

PolynomialObservable PolynomialObservable::coordinate(int axis) {
  if (axis < 0 || axis > 2) throw InputError("coordinate axis must be 0, 1 or 2");
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(axis)] = 1;
  return monomial(e);
}

PolynomialObservable PolynomialObservable::monomial(Exponents e, double coeff) {
  for (int k : e)
    if (k < 0) throw InputError("negative exponent in monomial");
  Terms raw;
  add_term(raw, e, coeff);
  return from_raw(raw);
}

int PolynomialObservable::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double PolynomialObservable::evaluate(double x, double y, double z) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
  return s;
}

PolynomialObservable PolynomialObservable::derivative(int axis) const {
  Terms raw;
  const auto a = static_cast<std::size_t>(axis);
  for (const auto& [e, c] : terms_) {
    if (e[a] == 0) continue;
    Exponents d = e;
    d[a] -= 1;
    add_term(raw, d, c * e[a]);
  }
  // Lowering exponents preserves the canonical form.
  PolynomialObservable p;
  p.terms_ = std::move(raw);
  return p;
}

double PolynomialObservable::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

PolynomialObservable PolynomialObservable::operator+(const PolynomialObservable& o) const {
  Terms raw = terms_;
  for (const auto& [e, c] : o.terms_) add_term(raw, e, c);
  return from_raw(raw);
}

PolynomialObservable PolynomialObservable::operator-(const PolynomialObservable& o) const {
  return *this + o * -1.0;
}

PolynomialObservable PolynomialObservable::operator*(const PolynomialObservable& o) const {
  Terms raw;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) add_term(raw, {e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return from_raw(raw);
}

PolynomialObservable PolynomialObservable::operator*(double s) const {
  Terms raw;
  for (const auto& [e, c] : terms_) add_term(raw, e, c * s);
  return from_raw(raw);
}

std::string PolynomialObservable::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  out << std::setprecision(17);
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const double mag = std::abs(c);
    const bool bare = e[0] + e[1] + e[2] == 0;
    bool need_star = false;
    if (bare || mag != 1.0) {
      out << mag;
      need_star = true;
    }
    const char* names[3] = {"nx", "ny", "nz"};
    for (std::size_t a = 0; a < 3; ++a) {
      if (e[a] == 0) continue;
      if (need_star) out << "*";
      out << names[a];
      if (e[a] > 1) out << "^" << e[a];
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

PolynomialObservable PolynomialObservable::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty polynomial");

  Terms raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    double coeff = sign;
    Exponents e{0, 0, 0};
    bool have_factor = false;
    while (true) {
      if (pos >= s.size()) fail("dangling operator");
      if (s.compare(pos, 2, "nx") == 0 || s.compare(pos, 2, "ny") == 0 || s.compare(pos, 2, "nz") == 0) {
        const std::size_t axis = static_cast<std::size_t>(s[pos + 1] - 'x');
        pos += 2;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), power);
          if (ec != std::errc() || power < 0) fail("bad exponent");
          pos = static_cast<std::size_t>(ptr - s.data());
        }
        e[axis] += power;
      } else {
        std::size_t used = 0;
        double value = 0.0;
        try {
          value = std::stod(s.substr(pos), &used);
        } catch (const std::exception&) {
          fail("unexpected character '" + std::string(1, s[pos]) + "'");
        }
        if (used == 0 || !std::isfinite(value)) fail("bad number");
        coeff *= value;
        pos += used;
      }
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    add_term(raw, e, coeff);
  }
  return from_raw(raw);
}

PolynomialObservable poisson_bracket(const PolynomialObservable& f, const PolynomialObservable& g) {
  const PolynomialObservable df[3] = {f.derivative(0), f.derivative(1), f.derivative(2)};
  const PolynomialObservable dg[3] = {g.derivative(0), g.derivative(1), g.derivative(2)};
  PolynomialObservable out;
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3;
    const int b = (c + 2) % 3;
    // (grad f x grad g)_c = d_a f d_b g - d_b f d_a g
    const PolynomialObservable cross = df[a] * dg[b] - df[b] * dg[a];
    out = out - PolynomialObservable::coordinate(c) * cross;
  }
  return out;
}

}  // namespace cq
