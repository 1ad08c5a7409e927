#include "stanpart/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "stanpart/errors.hpp"

namespace stanpart {

namespace {

void strip(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of p by (1-t); requires p(1) == 0.
std::vector<long long> divide_one_minus_t(const std::vector<long long>& p) {
  std::vector<long long> q(p.size() ? p.size() - 1 : 0, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    carry += p[i];
    q[i] = carry;
  }
  return q;
}

std::vector<long long> multiply(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() + b.size() > kSeriesLengthCap) throw cap_exceeded("series degree exceeds cap");
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<long long> times_one_minus_t_pow(std::vector<long long> p, int k) {
  for (int i = 0; i < k; ++i) p = multiply(p, {1, -1});
  return p;
}

}  // namespace

RationalSeries::RationalSeries(std::vector<long long> num, int e)
    : numerator(std::move(num)), denom_power(e) {
  if (e < 0) throw std::invalid_argument("negative denominator power");
  strip(numerator);
  if (numerator.empty()) {
    denom_power = 0;
    return;
  }
  while (denom_power > 0 &&
         std::accumulate(numerator.begin(), numerator.end(), 0LL) == 0) {
    numerator = divide_one_minus_t(numerator);
    strip(numerator);
    --denom_power;
  }
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  const int e = std::max(denom_power, o.denom_power);
  auto a = times_one_minus_t_pow(numerator, e - denom_power);
  auto b = times_one_minus_t_pow(o.numerator, e - o.denom_power);
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return RationalSeries(std::move(a), e);
}

std::vector<long long> RationalSeries::expand(std::size_t count) const {
  // Each division by (1-t) is one running prefix sum of the coefficients.
  std::vector<long long> acc(count, 0);
  for (std::size_t d = 0; d < count && d < numerator.size(); ++d) acc[d] = numerator[d];
  for (int i = 0; i < denom_power; ++i) {
    long long run = 0;
    for (std::size_t d = 0; d < count; ++d) {
      run += acc[d];
      acc[d] = run;
    }
  }
  return acc;
}

std::string RationalSeries::str() const {
  if (numerator.empty()) return "0";
  std::string num;
  bool first = true;
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    const long long c = numerator[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) num += "-";
      first = false;
    } else {
      num += c < 0 ? " - " : " + ";
    }
    const long long abs_c = c < 0 ? -c : c;
    if (abs_c != 1 || d == 0) num += std::to_string(abs_c);
    if (d > 0) {
      if (abs_c != 1) num += "*";
      num += "t";
      if (d > 1) num += "^" + std::to_string(d);
    }
  }
  if (denom_power == 0) return num;
  std::string out = "(" + num + ")/(1-t)";
  if (denom_power > 1) out += "^" + std::to_string(denom_power);
  return out;
}

bool series_equal(const RationalSeries& x, const RationalSeries& y) {
  const int e = std::max(x.denom_power, y.denom_power);
  auto a = times_one_minus_t_pow(x.numerator, e - x.denom_power);
  auto b = times_one_minus_t_pow(y.numerator, e - y.denom_power);
  strip(a);
  strip(b);
  return a == b;
}

RationalSeries hilbert_series(const MonomialIdeal& I) {
  const std::size_t s = I.gens.size();
  if (s > kGeneratorCap) throw cap_exceeded("generator count exceeds cap");
  std::vector<long long> num{1};
  // Inclusion-exclusion over generator subsets: each subset contributes its
  // lcm's total degree with an alternating sign.
  const std::uint64_t subsets = std::uint64_t{1} << s;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Monomial acc = I.gens[static_cast<std::size_t>(std::countr_zero(mask))];
    for (std::uint64_t rest = mask & (mask - 1); rest; rest &= rest - 1)
      acc = lcm(acc, I.gens[static_cast<std::size_t>(std::countr_zero(rest))]);
    const std::uint64_t deg = acc.degree();
    if (deg >= kSeriesLengthCap) throw cap_exceeded("series degree exceeds cap");
    if (num.size() <= deg) num.resize(static_cast<std::size_t>(deg) + 1, 0);
    num[static_cast<std::size_t>(deg)] += std::popcount(mask) % 2 == 1 ? -1 : 1;
  }
  return RationalSeries(std::move(num), I.ring.n());
}

RationalSeries interval_series(const Interval& iv) {
  if (!iv.lo.is_finite())
    throw std::invalid_argument("interval series requires a finite lower endpoint");
  std::uint64_t base = 0;
  for (int i = 0; i < iv.lo.n(); ++i) base += iv.lo[i].value();
  if (base >= kSeriesLengthCap) throw cap_exceeded("series degree exceeds cap");

  std::vector<long long> num(static_cast<std::size_t>(base) + 1, 0);
  num.back() = 1;
  int inf_count = 0;
  for (int i = 0; i < iv.hi.n(); ++i) {
    if (iv.hi[i].is_infinite()) {
      ++inf_count;
      continue;
    }
    const std::uint64_t span = iv.hi[i].value() - iv.lo[i].value();
    if (span == 0) continue;
    if (span >= kSeriesLengthCap) throw cap_exceeded("series degree exceeds cap");
    std::vector<long long> geo(static_cast<std::size_t>(span) + 1, 1);
    num = multiply(num, geo);
  }
  return RationalSeries(std::move(num), inf_count);
}

bool polarization_identity_holds(const RationalSeries& series_p, const RationalSeries& series,
                                 int steps) {
  if (steps < 0) throw std::invalid_argument("negative polarization step count");
  return series_equal(series_p,
                      RationalSeries(series.numerator, series.denom_power + steps));
}

}  // namespace stanpart
