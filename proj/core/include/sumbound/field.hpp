#ifndef SUMBOUND_FIELD_HPP
#define SUMBOUND_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sumbound/errors.hpp"

namespace sumbound {

// Trial division. Inputs are desk scale (< 2^31).
bool is_prime_u64(std::uint64_t n);

// The additive order of 1: a prime, or infinite (characteristic 0).
class Char {
 public:
  static Char finite(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    return Char(p);
  }
  static Char infinite() noexcept { return Char(0); }

  bool is_finite() const noexcept { return p_ != 0; }
  std::uint64_t p() const {
    if (p_ == 0) fail(Errc::OutOfRange, "characteristic is infinite");
    return p_;
  }

  friend bool operator==(const Char&, const Char&) = default;

 private:
  explicit Char(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes infinite
};

// One field element in canonical form:
//   prime field     residue in [0, p)
//   extension field coefficient vector of length n over GF(p), low degree first
//   rationals       reduced fraction with positive denominator
// Two elements of the same context are equal iff their representations are.
class Fe {
 public:
  Fe() : rep_(std::uint64_t{0}) {}

  friend bool operator==(const Fe& a, const Fe& b) { return a.rep_ == b.rep_; }

  // Order within one context: residue order, base-p integer order, rational order.
  friend bool canonical_less(const Fe& a, const Fe& b);

  std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }
  const std::vector<std::uint32_t>& coords() const {
    return std::get<std::vector<std::uint32_t>>(rep_);
  }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

 private:
  friend class FieldCtx;
  explicit Fe(std::uint64_t r) : rep_(r) {}
  explicit Fe(std::vector<std::uint32_t> c) : rep_(std::move(c)) {}
  explicit Fe(mpq_class q) : rep_(std::move(q)) {}

  std::variant<std::uint64_t, std::vector<std::uint32_t>, mpq_class> rep_;
};

// Computation context for GF(p), GF(p^n) or the rationals. Immutable after
// construction; all operations are pure, so contexts are safe to share.
class FieldCtx {
 public:
  enum class Kind { Prime, Extension, Rationals };

  static FieldCtx prime(std::uint64_t p);
  // Omitting the modulus selects the canonical one: the monic irreducible of
  // degree n whose coefficient vector, read as a base-p integer, is minimal.
  static FieldCtx extension(std::uint64_t p, unsigned n);
  // modulus = coefficients c_0..c_n of a monic irreducible of degree n.
  static FieldCtx extension(std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus);
  static FieldCtx rationals();

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != Kind::Rationals; }
  Char characteristic() const {
    return is_finite() ? Char::finite(p_) : Char::infinite();
  }
  std::uint64_t order() const {
    if (!is_finite()) fail(Errc::NotFiniteField, "rationals have no finite order");
    return order_;
  }
  unsigned ext_degree() const noexcept { return n_; }  // 1 unless Extension
  const std::vector<std::uint32_t>& modulus() const;   // Extension only

  // --- element construction --------------------------------------------
  Fe zero() const;
  Fe one() const;
  Fe from_int(long long v) const;  // reduced into the context
  Fe from_fraction(long long num, long long den) const;  // rationals only
  Fe from_mpq(mpq_class v) const;                        // rationals only
  Fe generator() const;  // the class of x in GF(p)[x]/(modulus); Extension only
  Fe from_coords(std::vector<std::uint32_t> coords) const;  // Extension only
  // index in canonical enumeration order, 0 <= index < order
  Fe element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Fe& a) const;

  // --- arithmetic --------------------------------------------------------
  bool is_zero(const Fe& a) const;
  bool is_one(const Fe& a) const;
  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe inv(const Fe& a) const;                 // DivisionByZero on 0
  Fe div(const Fe& a, const Fe& b) const;    // DivisionByZero on b = 0
  Fe pow(const Fe& a, long long e) const;    // negative e requires a != 0
  // Unique c with c^p = a; finite fields are perfect. NotFiniteField over Q.
  Fe pth_root(const Fe& a) const;

  // All elements in canonical order. NotFiniteField over Q.
  std::vector<Fe> elements() const;

  std::string to_string(const Fe& a) const;
  // "7", "2^2/x^2+x+1", "Q" -- accepted back by parse_field_spec.
  std::string spec_string() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  FieldCtx(Kind kind, std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus,
           std::uint64_t order)
      : kind_(kind), p_(p), n_(n), modulus_(std::move(modulus)), order_(order) {}

  void check_element(const Fe& a) const;  // CtxMismatch on foreign representation

  Kind kind_;
  std::uint64_t p_;    // 0 for rationals
  unsigned n_;         // extension degree; 1 for prime, 0 for rationals
  std::vector<std::uint32_t> modulus_;  // monic, length n_+1; Extension only
  std::uint64_t order_;                 // p^n; 0 for rationals
};

}  // namespace sumbound

#endif
