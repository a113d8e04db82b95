#ifndef SUMBOUND_EXTINT_HPP
#define SUMBOUND_EXTINT_HPP

#include <string>

#include "sumbound/errors.hpp"

namespace sumbound {

// Signed integer extended with +infinity. Bound terms that involve the field
// characteristic are +infinity in characteristic 0; everything else stays finite.
class ExtInt {
 public:
  constexpr ExtInt() : inf_(false), v_(0) {}

  static constexpr ExtInt infinity() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }
  static constexpr ExtInt of(long long v) {
    ExtInt e;
    e.v_ = v;
    return e;
  }

  constexpr bool is_infinite() const { return inf_; }

  long long value() const {
    if (inf_) fail(Errc::OutOfRange, "no finite value of +inf");
    return v_;
  }

  // inf - b = inf
  friend constexpr ExtInt operator-(ExtInt a, long long b) {
    return a.inf_ ? a : of(a.v_ - b);
  }

  friend constexpr ExtInt min(ExtInt a, ExtInt b) {
    if (a.inf_) return b;
    if (b.inf_) return a;
    return of(a.v_ < b.v_ ? a.v_ : b.v_);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr bool operator==(ExtInt a, long long b) { return !a.inf_ && a.v_ == b; }
  friend constexpr bool operator<=(long long a, ExtInt b) { return b.inf_ || a <= b.v_; }
  friend constexpr bool operator>=(ExtInt a, long long b) { return a.inf_ || a.v_ >= b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  bool inf_;
  long long v_;
};

}  // namespace sumbound

#endif
