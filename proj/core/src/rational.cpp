#include "polycone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polycone/errors.hpp"

namespace polycone {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.find('-') != std::string::npos)
    throw ParseError("not a rational number: \"" + raw + "\"");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator: \"" + raw + "\"");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) { return r.get_str(10); }

std::string format_vec(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_rat(v[i]);
  os << ')';
  return os.str();
}

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit(std::size_t n, std::size_t i) {
  RatVec e = zeros(n);
  e.at(i) = 1;
  return e;
}

void check_dim(const RatVec& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) +
                            ", got " + std::to_string(v.size()));
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_dim(b, a.size(), "dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  check_dim(b, a.size(), "add");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  check_dim(b, a.size(), "sub");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVec neg(const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

void axpy(const Rat& s, const RatVec& x, RatVec& y) {
  check_dim(y, x.size(), "axpy");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

Rat norm1(const RatVec& v) {
  Rat s = 0;
  for (const auto& r : v) s += abs(r);
  return s;
}

Rat norm2sq(const RatVec& v) {
  Rat s = 0;
  for (const auto& r : v) s += r * r;
  return s;
}

RatVec primitive(const RatVec& v) {
  if (is_zero(v)) return v;
  mpz_class l = 1;
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

RatMat transpose(const RatMat& m, std::size_t cols) {
  RatMat t(cols, RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_dim(m[i], cols, "transpose");
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

void sort_unique(RatMat& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace polycone

namespace polycone {

RatMat lattice_l1_ball(const RatVec& center, const Rat& step, const Rat& radius) {
  if (sgn(step) <= 0) throw PolyconeError("lattice step must be positive");
  const std::size_t n = center.size();
  mpz_class kmax_z;
  {
    Rat q = radius / step;
    mpz_fdiv_q(kmax_z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  }
  const long kmax = kmax_z.get_si();
  RatMat out;
  std::vector<long> k(n, -kmax);
  if (n == 0) return out;
  for (;;) {
    long l1 = 0;
    for (auto v : k) l1 += v < 0 ? -v : v;
    if (l1 <= kmax) {
      RatVec x = center;
      for (std::size_t i = 0; i < n; ++i) x[i] += step * k[i];
      out.push_back(std::move(x));
    }
    std::size_t i = n;
    while (i > 0 && k[i - 1] == kmax) k[--i] = -kmax;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

}  // namespace polycone
