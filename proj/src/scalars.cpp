#include "swd/scalars.hpp"

#include <charconv>
#include <cstdlib>

namespace swd {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("malformed integer '" + std::string(s) + "' in " + std::string(context));
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// QPower

std::string QPower::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  const std::int64_t t = exp_.twice();
  if (t == 0) return out + "1";
  out += "q^";
  if (t % 2 != 0) {
    out += "{" + std::to_string(t) + "/2}";
  } else if (t > 0) {
    out += std::to_string(t / 2);
  } else {
    out += "{" + std::to_string(t / 2) + "}";
  }
  return out;
}

QPower QPower::parse(std::string_view text) {
  const std::string original(text);
  int sign = 1;
  if (!text.empty() && text.front() == '-') {
    sign = -1;
    text.remove_prefix(1);
  } else if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  if (text == "1") return QPower(sign, HalfInt{});
  if (text == "q") return QPower(sign, HalfInt::integer(1));
  if (text.size() < 3 || text.substr(0, 2) != "q^") {
    throw DomainError("malformed q-power '" + original + "'");
  }
  text.remove_prefix(2);
  if (text.front() == '{') {
    if (text.back() != '}') throw DomainError("malformed q-power '" + original + "'");
    text = text.substr(1, text.size() - 2);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") {
      throw DomainError("q-power exponent denominator must be 2 in '" + original + "'");
    }
    return QPower(sign, HalfInt::from_twice(parse_int(text.substr(0, slash), original)));
  }
  return QPower(sign, HalfInt::integer(parse_int(text, original)));
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw DomainError("malformed rational '" + std::string(text) + "'");
  if (sgn(v.get_den()) == 0) throw DomainError("rational with zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("zero is not invertible");
  return Rational(Canonical{}, mpq_class(1 / v_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return Rational(Canonical{}, mpq_class(v_ / o.v_));
}

// ---------------------------------------------------------------------------
// TruncSeries1

TruncSeries1::TruncSeries1(int order) : order_(order), coeffs_(order + 1) {
  if (order < 0) throw DomainError("series order must be non-negative");
}

TruncSeries1::TruncSeries1(int order, std::vector<Rational> coeffs) : TruncSeries1(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncSeries1 TruncSeries1::constant(int order, const Rational& c) {
  TruncSeries1 f(order);
  f.coeffs_[0] = c;
  return f;
}

TruncSeries1 TruncSeries1::variable(int order) {
  TruncSeries1 f(order);
  if (order >= 1) f.coeffs_[1] = Rational(1);
  return f;
}

void TruncSeries1::require_same_order(const TruncSeries1& o) const {
  if (order_ != o.order_) throw DomainError("series truncation orders differ");
}

TruncSeries1 TruncSeries1::operator+(const TruncSeries1& o) const {
  require_same_order(o);
  TruncSeries1 r(order_);
  for (int i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

TruncSeries1 TruncSeries1::operator-(const TruncSeries1& o) const {
  require_same_order(o);
  TruncSeries1 r(order_);
  for (int i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

TruncSeries1 TruncSeries1::operator*(const TruncSeries1& o) const {
  require_same_order(o);
  TruncSeries1 r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) r.coeffs_[i + j].add_product(coeffs_[i], o.coeffs_[j]);
  }
  return r;
}

TruncSeries1 TruncSeries1::operator*(const Rational& s) const {
  TruncSeries1 r(order_);
  for (int i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] * s;
  return r;
}

TruncSeries1 TruncSeries1::inverse() const {
  if (!is_unit()) throw DomainError("series with zero constant term is not invertible");
  // g_0 = 1/f_0, g_k = -(1/f_0) sum_{i=1..k} f_i g_{k-i}
  TruncSeries1 g(order_);
  const Rational inv0 = coeffs_[0].inverse();
  g.coeffs_[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) acc.add_product(coeffs_[i], g.coeffs_[k - i]);
    g.coeffs_[k] = -(acc * inv0);
  }
  return g;
}

TruncSeries1 TruncSeries1::truncate(int order) const {
  if (order > order_) throw DomainError("cannot truncate to a higher order");
  return TruncSeries1(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

// ---------------------------------------------------------------------------
// TruncSeries2

TruncSeries2::TruncSeries2(int order)
    : order_(order), coeffs_(static_cast<std::size_t>(order + 1) * (order + 1)) {
  if (order < 0) throw DomainError("series order must be non-negative");
}

std::size_t TruncSeries2::index(int i, int j) const {
  if (i < 0 || j < 0 || i > order_ || j > order_) throw DomainError("bidegree out of range");
  return static_cast<std::size_t>(i) * (order_ + 1) + j;
}

void TruncSeries2::require_same_order(const TruncSeries2& o) const {
  if (order_ != o.order_) throw DomainError("series truncation orders differ");
}

TruncSeries2 TruncSeries2::constant(int order, const Rational& c) {
  TruncSeries2 r(order);
  r.coeffs_[0] = c;
  return r;
}

TruncSeries2 TruncSeries2::in_u(const TruncSeries1& f) {
  TruncSeries2 r(f.order());
  for (int i = 0; i <= f.order(); ++i) r.at(i, 0) = f[i];
  return r;
}

TruncSeries2 TruncSeries2::in_v(const TruncSeries1& f) {
  TruncSeries2 r(f.order());
  for (int j = 0; j <= f.order(); ++j) r.at(0, j) = f[j];
  return r;
}

TruncSeries2 TruncSeries2::operator+(const TruncSeries2& o) const {
  require_same_order(o);
  TruncSeries2 r(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

TruncSeries2 TruncSeries2::operator-(const TruncSeries2& o) const {
  require_same_order(o);
  TruncSeries2 r(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

TruncSeries2 TruncSeries2::operator*(const TruncSeries2& o) const {
  require_same_order(o);
  TruncSeries2 r(order_);
  for (int i1 = 0; i1 <= order_; ++i1) {
    for (int j1 = 0; j1 <= order_; ++j1) {
      const Rational& a = at(i1, j1);
      if (a.is_zero()) continue;
      for (int i2 = 0; i1 + i2 <= order_; ++i2) {
        for (int j2 = 0; j1 + j2 <= order_; ++j2) {
          const Rational& b = o.at(i2, j2);
          if (b.is_zero()) continue;
          r.at(i1 + i2, j1 + j2).add_product(a, b);
        }
      }
    }
  }
  return r;
}

TruncSeries2 TruncSeries2::operator*(const Rational& s) const {
  TruncSeries2 r(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
  return r;
}

TruncSeries2 TruncSeries2::inverse() const {
  if (constant_term().is_zero()) {
    throw DomainError("series with zero constant term is not invertible");
  }
  // g_{ij} = -(1/c_00) sum_{(k,l) != (0,0), k<=i, l<=j} c_{kl} g_{i-k,j-l}, filled in
  // order of increasing (i, j) so every referenced g is already known.
  const Rational inv0 = constant_term().inverse();
  TruncSeries2 g(order_);
  for (int i = 0; i <= order_; ++i) {
    for (int j = 0; j <= order_; ++j) {
      if (i == 0 && j == 0) {
        g.at(0, 0) = inv0;
        continue;
      }
      Rational acc;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          const Rational& c = at(k, l);
          if (!c.is_zero()) acc.add_product(c, g.at(i - k, j - l));
        }
      }
      g.at(i, j) = -(acc * inv0);
    }
  }
  return g;
}

TruncSeries2 TruncSeries2::swapped() const {
  TruncSeries2 r(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= order_; ++j) r.at(j, i) = at(i, j);
  return r;
}

TruncSeries1 TruncSeries2::eval_u0() const {
  TruncSeries1 f(order_);
  for (int j = 0; j <= order_; ++j) f[j] = at(0, j);
  return f;
}

TruncSeries2 TruncSeries2::truncate(int order) const {
  if (order > order_) throw DomainError("cannot truncate to a higher order");
  TruncSeries2 r(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order; ++j) r.at(i, j) = at(i, j);
  return r;
}

}  // namespace swd
