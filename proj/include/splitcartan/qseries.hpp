/*
   Copyright 2026 The splitcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPLITCARTAN_QSERIES_HPP
#define SPLITCARTAN_QSERIES_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "splitcartan/numeric.hpp"

namespace splitcartan {

// Truncated Laurent series in q with exact rational coefficients.
// Coefficients are known for exponents in [val, prec); prec is exclusive.
// Operations propagate precision as min of the operands' adjusted bounds,
// so comparisons are only meaningful up to the stated precision.
class QSeries {
 public:
  QSeries() : val_(0), prec_(0) {}

  // Series sum_{i} coeffs[i] q^(val + i), known below q^prec.
  QSeries(long val, long prec, std::vector<Rat> coeffs)
      : val_(val), prec_(prec), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) > prec_ - val_) c_.resize(static_cast<size_t>(prec_ - val_));
    normalize();
  }

  static QSeries zero(long prec) { return QSeries(prec, prec, {}); }
  static QSeries one(long prec) { return monomial(0, prec); }
  static QSeries monomial(long k, long prec, const Rat& a = Rat(1)) {
    if (k >= prec) return zero(prec);
    return QSeries(k, prec, {a});
  }

  long valuation() const { return val_; }    // exponent of first stored coefficient
  long precision() const { return prec_; }   // exclusive exponent bound
  bool is_zero_to_precision() const { return c_.empty(); }

  Rat coeff(long n) const {
    require(n < prec_, "QSeries::coeff beyond precision");
    if (n < val_ || n >= val_ + static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(n - val_)];
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min(a.val_, b.val_);
    if (lo >= prec) return zero(prec);
    std::vector<Rat> c(static_cast<size_t>(prec - lo), Rat(0));
    a.add_into(c, lo, prec, Rat(1));
    b.add_into(c, lo, prec, Rat(1));
    return QSeries(lo, prec, std::move(c));
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min(a.val_, b.val_);
    if (lo >= prec) return zero(prec);
    std::vector<Rat> c(static_cast<size_t>(prec - lo), Rat(0));
    a.add_into(c, lo, prec, Rat(1));
    b.add_into(c, lo, prec, Rat(-1));
    return QSeries(lo, prec, std::move(c));
  }
  friend QSeries operator*(const QSeries& a, const Rat& s) {
    QSeries r = a;
    if (s == 0) return zero(a.prec_);
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    // Zero-to-precision operands still limit the result's precision.
    long av = a.c_.empty() ? a.prec_ : a.val_;
    long bv = b.c_.empty() ? b.prec_ : b.val_;
    long prec = std::min(a.prec_ + bv, b.prec_ + av);
    if (a.c_.empty() || b.c_.empty()) return zero(prec);
    long lo = av + bv;
    if (lo >= prec) return zero(prec);
    std::vector<Rat> c(static_cast<size_t>(prec - lo), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      long ea = a.val_ + static_cast<long>(i);
      for (size_t j = 0; j < b.c_.size(); ++j) {
        long e = ea + b.val_ + static_cast<long>(j);
        if (e >= prec) break;
        if (b.c_[j] != 0) c[static_cast<size_t>(e - lo)] += a.c_[i] * b.c_[j];
      }
    }
    return QSeries(lo, prec, std::move(c));
  }

  // The operator q d/dq: sum a_n q^n -> sum n a_n q^n.
  QSeries derive() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
      c[i] = c_[i] * Rat(val_ + static_cast<long>(i));
    return QSeries(val_, prec_, std::move(c));
  }

  // Multiplicative inverse; requires a nonzero leading coefficient.
  QSeries inverse() const {
    if (c_.empty())
      throw std::invalid_argument("QSeries::inverse: series is zero to full precision");
    long rel = prec_ - val_;  // relative precision of the unit part
    std::vector<Rat> u(c_.begin(), c_.end());
    u.resize(static_cast<size_t>(rel), Rat(0));
    std::vector<Rat> inv(static_cast<size_t>(rel), Rat(0));
    Rat lead = 1 / u[0];
    inv[0] = lead;
    for (long k = 1; k < rel; ++k) {
      Rat acc(0);
      for (long j = 1; j <= k; ++j)
        if (u[static_cast<size_t>(j)] != 0) acc += u[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
      inv[static_cast<size_t>(k)] = -lead * acc;
    }
    return QSeries(-val_, prec_ - 2 * val_, std::move(inv));
  }

  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

  // Substitute q -> q^k (used for oldform lifts f(q^p)).
  QSeries stretch(long k) const {
    require(k >= 1, "QSeries::stretch: k >= 1");
    if (c_.empty()) return zero(prec_ * k);
    std::vector<Rat> c(static_cast<size_t>((static_cast<long>(c_.size()) - 1) * k) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(k)] = c_[i];
    return QSeries(val_ * k, prec_ * k, std::move(c));
  }

  QSeries truncated(long new_prec) const {
    require(new_prec <= prec_, "QSeries::truncated can only lower precision");
    std::vector<Rat> c;
    for (long n = val_; n < std::min(new_prec, val_ + static_cast<long>(c_.size())); ++n)
      c.push_back(c_[static_cast<size_t>(n - val_)]);
    return QSeries(std::min(val_, new_prec), new_prec, std::move(c));
  }

  // Equality of all coefficients below min(prec_a, prec_b).
  bool agrees_with(const QSeries& b) const {
    long prec = std::min(prec_, b.prec_);
    for (long n = std::min(val_, b.val_); n < prec; ++n)
      if (coeff(n) != b.coeff(n)) return false;
    return true;
  }

  std::string str(long max_terms = 12) const {
    std::ostringstream os;
    bool first = true;
    long shown = 0;
    for (long n = val_; n < prec_ && shown < max_terms; ++n) {
      Rat a = coeff(n);
      if (a == 0) continue;
      Rat abs_a = abs(a);
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (n == 0 || abs_a != 1) os << abs_a.get_str();
      if (n != 0) {
        if (abs_a != 1) os << "*";
        os << "q";
        if (n != 1) os << "^" << n;
      }
      ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << prec_ << ")";
    return os.str();
  }

 private:
  void add_into(std::vector<Rat>& c, long lo, long prec, const Rat& scale) const {
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + static_cast<long>(i);
      if (e >= prec) break;
      c[static_cast<size_t>(e - lo)] += c_[i] * scale;
    }
  }
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = prec_;
  }

  long val_;
  long prec_;
  std::vector<Rat> c_;
};

}  // namespace splitcartan

#endif
