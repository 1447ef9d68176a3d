#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class ErrorCode {
  DivisionByZero,
  DegreeMismatch,
  AmbientMismatch,
  AlgebraMismatch,
  CharThreeNeedsExhaustive,
  NotAnIdeal,
  NotAssociative,
  TooLarge,
  NotInvertible,
  NotUnital,
  NotIdempotent,
  InvalidOctonionSize,
  InvalidField,
  ParseError,
  IndexOutOfRange,
  BadCoefficient,
  DuplicateProduct,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::CharThreeNeedsExhaustive: return "CharThreeNeedsExhaustive";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::InvalidOctonionSize: return "InvalidOctonionSize";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadCoefficient: return "BadCoefficient";
    case ErrorCode::DuplicateProduct: return "DuplicateProduct";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Residue modulo an odd prime. The modulus travels with the value so that
/// ordinary operator syntax works in generic code.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) return;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }

  friend ModP operator+(ModP a, ModP b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    if (s >= p) s -= p;
    return raw(static_cast<std::uint32_t>(s), p);
  }
  friend ModP operator-(ModP a, ModP b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    std::uint32_t r = a.v_ >= b.v_ ? a.v_ - b.v_ : static_cast<std::uint32_t>(std::uint64_t{a.v_} + p - b.v_);
    return raw(r, p);
  }
  friend ModP operator*(ModP a, ModP b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % p), p);
  }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
    return pow(p_ - 2);
  }

  ModP pow(std::uint64_t e) const {
    ModP base = *this;
    ModP acc = raw(1 % p_, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

 private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Coefficient field: the rationals or F_p with p an odd prime.
struct FieldDesc {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldDesc rationals() { return {}; }
  static FieldDesc prime(std::uint32_t p) {
    if (p == 2) throw Error(ErrorCode::InvalidField, "characteristic 2 is excluded");
    if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
  }

  bool is_prime_field() const noexcept { return kind == Kind::PrimeField; }
  std::string name() const { return is_prime_field() ? "F_" + std::to_string(p) : "Q"; }

  template <class S>
  S make(std::int64_t v) const;
  template <class S>
  S zero() const { return make<S>(0); }
  template <class S>
  S one() const { return make<S>(1); }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool ordered = true;
  static Rational from_int(const FieldDesc&, std::int64_t v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational inverse(const Rational& x) {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return Rational(1) / x;
  }
  static std::string format(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
  }
  static std::size_t hash(const Rational& x) { return std::hash<std::string>{}(format(x)); }
  static int sign(const Rational& x) { return x.sign(); }

  /// Exact square root when x is the square of a rational.
  static std::optional<Rational> sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt rn = boost::multiprecision::sqrt(n);
    BigInt rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
  }

  /// Accepts "num/den", "num" (and a leading sign). Canonicalizes.
  static Rational parse(const FieldDesc&, std::string_view text) {
    auto bad = [&] { return Error(ErrorCode::BadCoefficient, "bad rational coefficient '" + std::string(text) + "'"); };
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw bad();
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw bad();
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw bad();
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
};

template <>
struct ScalarTraits<ModP> {
  static constexpr bool ordered = false;
  static ModP from_int(const FieldDesc& f, std::int64_t v) { return ModP(v, f.p); }
  static bool is_zero(const ModP& x) { return x.value() == 0; }
  static ModP inverse(const ModP& x) { return x.inverse(); }
  static std::string format(const ModP& x) { return std::to_string(x.value()); }
  static std::size_t hash(const ModP& x) { return x.value(); }
  static int sign(const ModP& x) { return x.value() == 0 ? 0 : 1; }

  /// One square root (the smaller residue) when x is a quadratic residue.
  static std::optional<ModP> sqrt(const ModP& x) {
    const std::uint32_t p = x.modulus();
    if (x.value() == 0) return x;
    if (x.pow((p - 1) / 2).value() != 1) return std::nullopt;
    // Tonelli-Shanks.
    std::uint32_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    ModP z(2, p);
    while (z.pow((p - 1) / 2).value() == 1) z += ModP(1, p);
    ModP c = z.pow(q), t = x.pow(q), r = x.pow((q + 1) / 2);
    std::uint32_t m = s;
    while (t.value() != 1) {
      std::uint32_t i = 0;
      ModP t2 = t;
      while (t2.value() != 1) {
        t2 *= t2;
        ++i;
      }
      ModP b = c;
      for (std::uint32_t k = 0; k + i + 1 < m; ++k) b *= b;
      r *= b;
      c = b * b;
      t *= c;
      m = i;
    }
    ModP other = -r;
    return other.value() < r.value() ? other : r;
  }

  /// Accepts a decimal integer (reduced mod p) or "num/den" with den invertible.
  static ModP parse(const FieldDesc& f, std::string_view text) {
    Rational q = ScalarTraits<Rational>::parse(f, text);
    auto reduce = [&](const BigInt& v) {
      BigInt r = v % f.p;
      if (r < 0) r += f.p;
      return ModP(static_cast<std::int64_t>(r), f.p);
    };
    ModP den = reduce(boost::multiprecision::denominator(q));
    if (den.value() == 0)
      throw Error(ErrorCode::BadCoefficient, "denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(f.p));
    return reduce(boost::multiprecision::numerator(q)) * den.inverse();
  }
};

template <class S>
concept FieldScalar = requires(const S& a, const S& b, const FieldDesc& f) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { ScalarTraits<S>::from_int(f, 0) } -> std::same_as<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::same_as<bool>;
  { ScalarTraits<S>::inverse(a) } -> std::same_as<S>;
  { ScalarTraits<S>::format(a) } -> std::same_as<std::string>;
};

template <class S>
S FieldDesc::make(std::int64_t v) const {
  return ScalarTraits<S>::from_int(*this, v);
}

template <FieldScalar S>
bool is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

template <FieldScalar S>
S inverse(const S& x) {
  return ScalarTraits<S>::inverse(x);
}

template <FieldScalar S>
std::string format_scalar(const S& x) {
  return ScalarTraits<S>::format(x);
}

/// Short form for messages: integers without the "/1" denominator.
template <FieldScalar S>
std::string display_scalar(const S& x) {
  std::string s = ScalarTraits<S>::format(x);
  if (s.size() > 2 && s.ends_with("/1")) s.resize(s.size() - 2);
  return s;
}

/// Calls fn with a value-initialized tag of the scalar type matching the field.
template <class Fn>
decltype(auto) with_scalar(const FieldDesc& f, Fn&& fn) {
  if (f.is_prime_field()) return fn(ModP{});
  return fn(Rational{});
}

/// p^dim, saturating at UINT64_MAX.
inline std::uint64_t checked_pow(std::uint64_t p, std::size_t dim) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (acc > UINT64_MAX / p) return UINT64_MAX;
    acc *= p;
  }
  return acc;
}

}  // namespace jordan
