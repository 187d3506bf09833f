#pragma once

// Exact arithmetic: rationals, quaternions over an arbitrary scalar, the
// Hurwitz order, the imaginary-quadratic orders Z[omega] and Z[i], and the
// check embedding of complexified quaternions into 2x2 complex matrices.

#include <array>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hmf/types.hpp"

namespace hmf {

// ---------------------------------------------------------------------------
// Rational

/// Reduced fraction with 64-bit numerator and positive denominator.
/// Arithmetic that would overflow throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("Rational: negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Parses "p" or "p/q".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [](std::string_view s) {
      std::int64_t v = 0;
      const auto* first = s.data();
      if (!s.empty() && s.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline double to_double(const Rational& r) { return r.to_double(); }

// ---------------------------------------------------------------------------
// Quaternion

/// x0 + x1 i1 + x2 i2 + x3 i3 with i1^2 = i2^2 = i3^2 = -1 and i1 i2 = i3.
/// T = Rational gives exact arithmetic; T = cplx gives the complexified
/// algebra H (x) C, in which conj() is the C-linear quaternion conjugation.
template <class T>
struct Quaternion {
  std::array<T, 4> c{};

  constexpr Quaternion() = default;
  constexpr Quaternion(T x0, T x1, T x2, T x3) : c{x0, x1, x2, x3} {}
  constexpr explicit Quaternion(T x0) : c{x0, T{}, T{}, T{}} {}

  static Quaternion one() { return Quaternion(T(1)); }
  /// Basis element: 0 -> 1, k -> i_k.
  static Quaternion basis(int k) {
    Quaternion q;
    q.c[static_cast<std::size_t>(k)] = T(1);
    return q;
  }

  const T& operator[](std::size_t k) const { return c[k]; }
  T& operator[](std::size_t k) { return c[k]; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
  }
  Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& [a0, a1, a2, a3] = a.c;
    const auto& [b0, b1, b2, b3] = b.c;
    return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,  //
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,  //
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,  //
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
  }
  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return {s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]};
  }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  [[nodiscard]] Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
  /// Reduced norm x0^2+x1^2+x2^2+x3^2 (bilinear, no complex conjugation).
  [[nodiscard]] T norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

using RationalQuaternion = Quaternion<Rational>;
using ComplexQuaternion = Quaternion<cplx>;

template <class T>
Quaternion<T> qmul(const Quaternion<T>& a, const Quaternion<T>& b) {
  return a * b;
}

/// Returns (conj(x), N(x)); x * conj(x) = N(x).
template <class T>
std::pair<Quaternion<T>, T> qconj_norm(const Quaternion<T>& x) {
  return {x.conj(), x.norm()};
}

inline ComplexQuaternion to_complex(const RationalQuaternion& q) {
  return {q[0].to_double(), q[1].to_double(), q[2].to_double(), q[3].to_double()};
}

inline std::ostream& operator<<(std::ostream& os, const RationalQuaternion& q) {
  return os << "(" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")";
}

/// The check embedding H (x) C -> C^{2x2}, x |-> [[x0+i x1, x2+i x3], [-x2+i x3, x0-i x1]].
inline Mat2 check_embed(const ComplexQuaternion& x) {
  Mat2 m;
  m << x[0] + I * x[1], x[2] + I * x[3],  //
      -x[2] + I * x[3], x[0] - I * x[1];
  return m;
}

inline Mat2 check_embed(const RationalQuaternion& x) { return check_embed(to_complex(x)); }

/// Inverse of check_embed (every 2x2 complex matrix is in the image).
inline ComplexQuaternion check_unembed(const Mat2& m) {
  return {(m(0, 0) + m(1, 1)) / 2.0, (m(0, 0) - m(1, 1)) / (2.0 * I), (m(0, 1) - m(1, 0)) / 2.0,
          (m(0, 1) + m(1, 0)) / (2.0 * I)};
}

/// J2 = [[0,-1],[1,0]]; satisfies check(conj x) = J2 check(x)^T J2^{-1}.
inline Mat2 j2() {
  Mat2 m;
  m << 0.0, -1.0, 1.0, 0.0;
  return m;
}

// ---------------------------------------------------------------------------
// Hurwitz order

/// All coefficients integers, or all coefficients in Z + 1/2.
inline bool is_hurwitz(const RationalQuaternion& q) {
  bool all_int = true;
  bool all_half = true;
  for (const auto& x : q.c) {
    all_int = all_int && x.is_integer();
    all_half = all_half && x.den() == 2;
  }
  return all_int || all_half;
}

/// Element of the Hurwitz order o = Z<1,i1,i2,i3> + Z omega, omega = (1+i1+i2+i3)/2.
class HurwitzInt {
 public:
  HurwitzInt() = default;
  explicit HurwitzInt(const RationalQuaternion& q) : q_(q) {
    if (!is_hurwitz(q)) throw std::domain_error("HurwitzInt: coefficients are not all in Z or all in Z+1/2");
  }
  /// omega = (1+i1+i2+i3)/2.
  static HurwitzInt omega() { return HurwitzInt({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}); }
  /// Generator 1+i1 of the two-sided ideal p.
  static HurwitzInt p_generator() { return HurwitzInt({Rational(1), Rational(1), Rational(0), Rational(0)}); }

  [[nodiscard]] const RationalQuaternion& value() const { return q_; }
  [[nodiscard]] HurwitzInt conj() const { return HurwitzInt(q_.conj()); }
  [[nodiscard]] std::int64_t norm() const { return q_.norm().num(); }

  friend HurwitzInt operator*(const HurwitzInt& a, const HurwitzInt& b) { return HurwitzInt(a.q_ * b.q_); }
  friend HurwitzInt operator+(const HurwitzInt& a, const HurwitzInt& b) { return HurwitzInt(a.q_ + b.q_); }
  friend HurwitzInt operator-(const HurwitzInt& a, const HurwitzInt& b) { return HurwitzInt(a.q_ - b.q_); }
  friend bool operator==(const HurwitzInt&, const HurwitzInt&) = default;

 private:
  RationalQuaternion q_{};
};

/// o/p, the field with four elements. omega_sq is the class of omega^2 = omega - 1,
/// which is also the class of conj(omega).
enum class F4 : std::uint8_t { zero, one, omega, omega_sq };

inline const char* to_string(F4 r) {
  switch (r) {
    case F4::zero: return "0";
    case F4::one: return "1";
    case F4::omega: return "omega";
    case F4::omega_sq: return "omega^2";
  }
  return "?";
}

/// Residue of a Hurwitz integer modulo p = (1+i1).
/// Integral quaternions reduce to the parity of their coefficient sum
/// (i_k = 1 mod p); half-integral ones are omega plus an integral quaternion,
/// and omega + 1 = omega^2 in o/p.
inline F4 hurwitz_residue(const RationalQuaternion& x) {
  if (!is_hurwitz(x)) throw std::domain_error("hurwitz_residue: not a Hurwitz integer");
  if (x[0].is_integer()) {
    const std::int64_t s = x[0].num() + x[1].num() + x[2].num() + x[3].num();
    return (s % 2 == 0) ? F4::zero : F4::one;
  }
  const Rational half(1, 2);
  const std::int64_t s = (x[0] - half).num() + (x[1] - half).num() + (x[2] - half).num() + (x[3] - half).num();
  return (s % 2 == 0) ? F4::omega : F4::omega_sq;
}

inline F4 hurwitz_residue(const HurwitzInt& x) { return hurwitz_residue(x.value()); }

/// x in p  <=>  N(x) even.
inline bool in_hurwitz_prime(const RationalQuaternion& x) {
  return is_hurwitz(x) && x.norm().is_integer() && x.norm().num() % 2 == 0;
}

// ---------------------------------------------------------------------------
// Imaginary-quadratic orders

/// Z[omega], omega = (-1+sqrt(-3))/2, omega^2 + omega + 1 = 0.
struct Eisenstein {
  static constexpr const char* name = "eisenstein";
  static cplx eta() { return {-0.5, std::sqrt(3.0) / 2.0}; }
};

/// Z[i], i^2 = -1.
struct Gauss {
  static constexpr const char* name = "gauss";
  static cplx eta() { return {0.0, 1.0}; }
};

/// a + b*eta in Z[eta]; Ring selects the order, so Eisenstein and Gauss
/// numbers (and the Hurwitz omega) are never mixed.
template <class Ring>
class QuadInt {
 public:
  using ring_type = Ring;
  constexpr QuadInt() = default;
  constexpr QuadInt(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}  // NOLINT(implicit)

  static constexpr QuadInt eta() { return {0, 1}; }

  [[nodiscard]] constexpr std::int64_t a() const { return a_; }
  [[nodiscard]] constexpr std::int64_t b() const { return b_; }
  [[nodiscard]] constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend constexpr QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  constexpr QuadInt operator-() const { return {-a_, -b_}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    auto mul = [](std::int64_t p, std::int64_t q) {
      std::int64_t r = 0;
      if (__builtin_mul_overflow(p, q, &r)) throw std::overflow_error("QuadInt: overflow");
      return r;
    };
    const std::int64_t ac = mul(x.a_, y.a_);
    const std::int64_t bd = mul(x.b_, y.b_);
    const std::int64_t cross = mul(x.a_, y.b_) + mul(x.b_, y.a_);
    if constexpr (std::is_same_v<Ring, Eisenstein>) {
      // omega^2 = -1 - omega
      return {ac - bd, cross - bd};
    } else {
      return {ac - bd, cross};
    }
  }
  QuadInt& operator+=(const QuadInt& o) { return *this = *this + o; }
  QuadInt& operator-=(const QuadInt& o) { return *this = *this - o; }
  QuadInt& operator*=(const QuadInt& o) { return *this = *this * o; }

  /// Complex conjugate; conj(omega) = omega^2 = -1 - omega.
  [[nodiscard]] constexpr QuadInt conj() const {
    if constexpr (std::is_same_v<Ring, Eisenstein>) {
      return {a_ - b_, -b_};
    } else {
      return {a_, -b_};
    }
  }

  [[nodiscard]] constexpr std::int64_t norm() const {
    if constexpr (std::is_same_v<Ring, Eisenstein>) {
      return a_ * a_ - a_ * b_ + b_ * b_;
    } else {
      return a_ * a_ + b_ * b_;
    }
  }

  [[nodiscard]] cplx to_complex() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * Ring::eta();
  }

  friend constexpr bool operator==(const QuadInt&, const QuadInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << "(" << x.a_ << ", " << x.b_ << ")";
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

using EisensteinInt = QuadInt<Eisenstein>;
using GaussInt = QuadInt<Gauss>;

/// Congruence levels used in this library.
enum class Level { sqrt_minus_3, one_plus_i, hurwitz_p };

inline const char* to_string(Level l) {
  switch (l) {
    case Level::sqrt_minus_3: return "sqrt(-3)";
    case Level::one_plus_i: return "1+i";
    case Level::hurwitz_p: return "p";
  }
  return "?";
}

template <class Ring>
constexpr Level natural_level() {
  if constexpr (std::is_same_v<Ring, Eisenstein>) {
    return Level::sqrt_minus_3;
  } else {
    return Level::one_plus_i;
  }
}

/// Generator of the level ideal: sqrt(-3) = 1 + 2 omega, resp. 1 + i.
template <class Ring>
constexpr QuadInt<Ring> level_generator() {
  if constexpr (std::is_same_v<Ring, Eisenstein>) {
    return {1, 2};
  } else {
    return {1, 1};
  }
}

/// Exact membership in the level ideal: x / lambda = x conj(lambda) / N(lambda)
/// must have integral coefficients.
template <class Ring>
bool in_level_ideal(const QuadInt<Ring>& x) {
  const auto lambda = level_generator<Ring>();
  const auto y = x * lambda.conj();
  const std::int64_t n = lambda.norm();
  return y.a() % n == 0 && y.b() % n == 0;
}

/// Residue class modulo the level ideal as an integer in [0, N(lambda)).
/// Z[omega]/(sqrt(-3)) = F_3 with omega = 1; Z[i]/(1+i) = F_2 with i = 1.
template <class Ring>
int quad_residue(const QuadInt<Ring>& x, Level level) {
  if (level != natural_level<Ring>())
    throw std::invalid_argument(std::string("quad_residue: level ") + to_string(level) + " does not belong to " +
                                Ring::name);
  const std::int64_t n = level_generator<Ring>().norm();
  const auto r = static_cast<int>(((x.a() + x.b()) % n + n) % n);
  if ((r == 0) != in_level_ideal(x)) throw std::logic_error("quad_residue: reduction disagrees with exact division");
  return r;
}

/// Units of Z[omega] (sixth roots of unity) resp. Z[i] (fourth roots).
template <class Ring>
std::vector<QuadInt<Ring>> units() {
  if constexpr (std::is_same_v<Ring, Eisenstein>) {
    return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}};
  } else {
    return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  }
}

/// The 24 units of the Hurwitz order.
inline std::vector<RationalQuaternion> hurwitz_units() {
  std::vector<RationalQuaternion> out;
  for (int k = 0; k < 4; ++k) {
    for (int s : {1, -1}) {
      RationalQuaternion q;
      q[static_cast<std::size_t>(k)] = Rational(s);
      out.push_back(q);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    RationalQuaternion q;
    for (std::size_t k = 0; k < 4; ++k) q[k] = Rational((mask >> k) & 1 ? -1 : 1, 2);
    out.push_back(q);
  }
  return out;
}

}  // namespace hmf
