#pragma once

// Exact elements of U(2,2) over Z[omega] or Z[i] and of Sp(2,H) over the
// Hurwitz order, together with generator words, congruence tests, congruence
// samplers and the two maps that generate the S3 quotient of the quaternionic
// level-p group.

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "hmf/arith.hpp"
#include "hmf/errors.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/random.hpp"
#include "hmf/types.hpp"

namespace hmf {

enum class GroupKind { unitary_eisenstein, unitary_gauss, quaternionic };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::unitary_eisenstein: return "unitary-eisenstein";
    case GroupKind::unitary_gauss: return "unitary-gauss";
    case GroupKind::quaternionic: return "quaternionic";
  }
  return "?";
}

/// Ring-dependent operations for matrix entries.
template <class Entry>
struct entry_traits;

template <class Ring>
struct entry_traits<QuadInt<Ring>> {
  using entry = QuadInt<Ring>;
  using point = HermitianPoint;
  static constexpr int block = 1;
  static constexpr GroupKind kind =
      std::is_same_v<Ring, Eisenstein> ? GroupKind::unitary_eisenstein : GroupKind::unitary_gauss;
  static constexpr Level level = natural_level<Ring>();
  static entry zero() { return {}; }
  static entry one() { return {1}; }
  static entry integer(std::int64_t n) { return {n}; }
  static entry conj(const entry& x) { return x.conj(); }
  static bool is_zero(const entry& x) { return x.is_zero(); }
  static bool integral(const entry&) { return true; }
  static bool in_level(const entry& x) { return in_level_ideal(x); }
  static Eigen::Matrix<cplx, 1, 1> image(const entry& x) { return Eigen::Matrix<cplx, 1, 1>(x.to_complex()); }
};

template <>
struct entry_traits<RationalQuaternion> {
  using entry = RationalQuaternion;
  using point = QuaternionicPoint;
  static constexpr int block = 2;
  static constexpr GroupKind kind = GroupKind::quaternionic;
  static constexpr Level level = Level::hurwitz_p;
  static entry zero() { return {}; }
  static entry one() { return entry::one(); }
  static entry integer(std::int64_t n) { return entry(Rational(n)); }
  static entry conj(const entry& x) { return x.conj(); }
  static bool is_zero(const entry& x) { return x == entry{}; }
  static bool integral(const entry& x) { return is_hurwitz(x); }
  static bool in_level(const entry& x) { return in_hurwitz_prime(x); }
  static Mat2 image(const entry& x) { return check_embed(x); }
};

/// Dense N x N matrix over an exact ring, row-major.
template <class Entry, int N>
struct ExactMatrix {
  std::array<Entry, static_cast<std::size_t>(N * N)> e{};

  Entry& operator()(int r, int c) { return e[static_cast<std::size_t>(r * N + c)]; }
  const Entry& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * N + c)]; }

  static ExactMatrix identity() {
    ExactMatrix m;
    for (int k = 0; k < N; ++k) m(k, k) = entry_traits<Entry>::one();
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Entry s = entry_traits<Entry>::zero();
        for (int k = 0; k < N; ++k) s = s + a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r;
    for (std::size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r;
    for (std::size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  ExactMatrix operator-() const {
    ExactMatrix r;
    for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = -e[k];
    return r;
  }
  /// Conjugate transpose.
  [[nodiscard]] ExactMatrix adjoint() const {
    ExactMatrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = entry_traits<Entry>::conj((*this)(j, i));
    return r;
  }
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  /// Complex image; quaternion entries become 2x2 blocks via the check embedding.
  [[nodiscard]] auto complex_image() const {
    constexpr int b = entry_traits<Entry>::block;
    Eigen::Matrix<cplx, N * b, N * b> m;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m.template block<b, b>(i * b, j * b) = entry_traits<Entry>::image((*this)(i, j));
    return m;
  }
};

template <class Entry>
using Matrix2x2 = ExactMatrix<Entry, 2>;
template <class Entry>
using Matrix4x4 = ExactMatrix<Entry, 4>;

/// J = [[0, -E], [E, 0]].
template <class Entry>
Matrix4x4<Entry> symplectic_j() {
  Matrix4x4<Entry> j;
  const auto one = entry_traits<Entry>::one();
  j(0, 2) = -one;
  j(1, 3) = -one;
  j(2, 0) = one;
  j(3, 1) = one;
  return j;
}

template <class Entry>
Matrix4x4<Entry> from_blocks(const Matrix2x2<Entry>& a, const Matrix2x2<Entry>& b, const Matrix2x2<Entry>& c,
                             const Matrix2x2<Entry>& d) {
  Matrix4x4<Entry> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

/// An exact element of U(2,2) (Entry = QuadInt) or Sp(2,H) (Entry =
/// RationalQuaternion), i.e. conj(M)' J M = J. Only validated or
/// generated-by-construction matrices are representable.
template <class Entry>
class GroupElement {
 public:
  using traits = entry_traits<Entry>;
  using Matrix = Matrix4x4<Entry>;
  static constexpr int image_dim = 4 * traits::block;
  static constexpr int block_dim = 2 * traits::block;
  using Image = Eigen::Matrix<cplx, image_dim, image_dim>;
  using Block = Eigen::Matrix<cplx, block_dim, block_dim>;
  using Point = typename traits::point;

  GroupElement() : GroupElement(Matrix::identity(), Trusted{}) {}

  /// Accepts m iff conj(m)' J m = J holds exactly and all entries are integral.
  static GroupElement validate(const Matrix& m) {
    for (const auto& x : m.e)
      if (!traits::integral(x)) throw invalid_element("validate_element: entry is not integral");
    if (!(m.adjoint() * symplectic_j<Entry>() * m == symplectic_j<Entry>()))
      throw invalid_element("validate_element: conj(M)' J M != J");
    return GroupElement(m, Trusted{});
  }
  static bool is_valid(const Matrix& m) {
    try {
      validate(m);
      return true;
    } catch (const invalid_element&) {
      return false;
    }
  }

  static GroupElement identity() { return GroupElement(); }
  static GroupElement j() { return GroupElement(symplectic_j<Entry>(), Trusted{}); }

  [[nodiscard]] static constexpr GroupKind kind() { return traits::kind; }
  [[nodiscard]] const Matrix& entries() const { return m_; }
  [[nodiscard]] const Image& complex_image() const { return image_; }
  [[nodiscard]] Block a() const { return image_.template block<block_dim, block_dim>(0, 0); }
  [[nodiscard]] Block b() const { return image_.template block<block_dim, block_dim>(0, block_dim); }
  [[nodiscard]] Block c() const { return image_.template block<block_dim, block_dim>(block_dim, 0); }
  [[nodiscard]] Block d() const { return image_.template block<block_dim, block_dim>(block_dim, block_dim); }

  /// det M of the complex image (8x8 for quaternionic elements).
  [[nodiscard]] cplx det() const { return image_.determinant(); }

  /// M^{-1} = J^{-1} conj(M)' J.
  [[nodiscard]] GroupElement inverse() const {
    return GroupElement(-symplectic_j<Entry>() * m_.adjoint() * symplectic_j<Entry>(), Trusted{});
  }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.m_ * y.m_, Trusted{});
  }
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.m_ == y.m_; }

  // Generators.

  /// [[E, H], [0, E]], H hermitian.
  static GroupElement translation(const Matrix2x2<Entry>& h) {
    if (!(h.adjoint() == h)) throw invalid_element("translation: H is not hermitian");
    const auto e = Matrix2x2<Entry>::identity();
    return validate(from_blocks(e, h, Matrix2x2<Entry>{}, e));
  }
  /// [[E, 0], [H, E]], H hermitian.
  static GroupElement lower_translation(const Matrix2x2<Entry>& h) {
    if (!(h.adjoint() == h)) throw invalid_element("lower_translation: H is not hermitian");
    const auto e = Matrix2x2<Entry>::identity();
    return validate(from_blocks(e, Matrix2x2<Entry>{}, h, e));
  }
  /// diag(U, conj(U)'^{-1}) given U and its exact inverse.
  static GroupElement rotation(const Matrix2x2<Entry>& u, const Matrix2x2<Entry>& u_inverse) {
    if (!(u * u_inverse == Matrix2x2<Entry>::identity())) throw invalid_element("rotation: U * U^{-1} != E");
    return validate(from_blocks(u, Matrix2x2<Entry>{}, Matrix2x2<Entry>{}, u_inverse.adjoint()));
  }

 private:
  struct Trusted {};
  GroupElement(const Matrix& m, Trusted) : m_(m), image_(m.complex_image()) {}

  Matrix m_;
  Image image_;
};

using EisensteinElement = GroupElement<EisensteinInt>;
using GaussElement = GroupElement<GaussInt>;
using QuaternionicElement = GroupElement<RationalQuaternion>;

/// Candidate matrix -> validated element (throws invalid_element).
template <class Entry>
GroupElement<Entry> validate_element(const Matrix4x4<Entry>& m) {
  return GroupElement<Entry>::validate(m);
}

inline HermitianPoint moebius(const EisensteinElement& m, const HermitianPoint& z) {
  return moebius(m.complex_image(), z);
}
inline HermitianPoint moebius(const GaussElement& m, const HermitianPoint& z) { return moebius(m.complex_image(), z); }
inline QuaternionicPoint moebius(const QuaternionicElement& m, const QuaternionicPoint& z) {
  return moebius(m.complex_image(), z);
}

/// CZ + D (2x2) for the unitary kinds.
template <class Ring>
Mat2 automorphy_block(const GroupElement<QuadInt<Ring>>& m, const HermitianPoint& z) {
  return m.c() * z.z + m.d();
}
/// C^ Z^ + D^ (4x4) for the quaternionic kind.
inline Mat4 automorphy_block(const QuaternionicElement& m, const QuaternionicPoint& z) {
  return m.c() * quat_pack(z) + m.d();
}
/// conj(C) Z' + conj(D) for the unitary kinds.
template <class Ring>
Mat2 conjugate_automorphy_block(const GroupElement<QuadInt<Ring>>& m, const HermitianPoint& z) {
  return m.c().conjugate() * z.z.transpose() + m.d().conjugate();
}

// ---------------------------------------------------------------------------
// Random ring elements

namespace detail {

template <class Ring>
QuadInt<Ring> random_ring_element(Rng& rng, std::int64_t max_norm) {
  for (;;) {
    const QuadInt<Ring> x{rng.integer(-3, 3), rng.integer(-3, 3)};
    if (x.norm() <= max_norm) return x;
  }
}

inline RationalQuaternion random_hurwitz(Rng& rng, std::int64_t max_norm) {
  for (;;) {
    RationalQuaternion q;
    if (rng.integer(0, 1) == 0) {
      for (auto& x : q.c) x = Rational(rng.integer(-2, 2));
    } else {
      for (auto& x : q.c) x = Rational(2 * rng.integer(-2, 1) + 1, 2);
    }
    if (q.norm() <= Rational(max_norm)) return q;
  }
}

template <class Entry>
Entry random_entry(Rng& rng, std::int64_t max_norm) {
  if constexpr (std::is_same_v<Entry, RationalQuaternion>) {
    return random_hurwitz(rng, max_norm);
  } else {
    return random_ring_element<typename Entry::ring_type>(rng, max_norm);
  }
}

template <class Entry>
std::vector<Entry> unit_list() {
  if constexpr (std::is_same_v<Entry, RationalQuaternion>) {
    return hurwitz_units();
  } else {
    return units<typename Entry::ring_type>();
  }
}

template <class Entry>
Entry inverse_unit(const Entry& u) {
  // Units have norm 1, so u^{-1} = conj(u).
  return entry_traits<Entry>::conj(u);
}

/// Hermitian 2x2 matrix with integer diagonal in [-2, 2] and off-diagonal of norm <= 4.
template <class Entry>
Matrix2x2<Entry> random_hermitian(Rng& rng) {
  Matrix2x2<Entry> h;
  h(0, 0) = entry_traits<Entry>::integer(rng.integer(-2, 2));
  h(1, 1) = entry_traits<Entry>::integer(rng.integer(-2, 2));
  h(0, 1) = random_entry<Entry>(rng, 4);
  h(1, 0) = entry_traits<Entry>::conj(h(0, 1));
  return h;
}

}  // namespace detail

/// Random element of the full group: a product of `length` generators drawn
/// from translations T_H, rotations diag(U, conj(U)'^{-1}) with U elementary
/// or a unit diagonal, and J.
template <class Entry>
GroupElement<Entry> random_word(int length, std::uint64_t seed) {
  using G = GroupElement<Entry>;
  Rng rng(seed);
  G word;
  const auto unit_choices = detail::unit_list<Entry>();
  for (int step = 0; step < length; ++step) {
    G gen;
    switch (rng.integer(0, 2)) {
      case 0: gen = G::translation(detail::random_hermitian<Entry>(rng)); break;
      case 1: {
        Matrix2x2<Entry> u = Matrix2x2<Entry>::identity();
        Matrix2x2<Entry> ui = Matrix2x2<Entry>::identity();
        if (rng.integer(0, 1) == 0) {
          const int j = static_cast<int>(rng.integer(0, 1));
          const Entry lambda = detail::random_entry<Entry>(rng, 3);
          u(j, 1 - j) = lambda;
          ui(j, 1 - j) = -lambda;
        } else {
          for (int k = 0; k < 2; ++k) {
            const auto& unit = unit_choices[static_cast<std::size_t>(
                rng.integer(0, static_cast<std::int64_t>(unit_choices.size()) - 1))];
            u(k, k) = unit;
            ui(k, k) = detail::inverse_unit(unit);
          }
        }
        gen = G::rotation(u, ui);
        break;
      }
      default: gen = G::j(); break;
    }
    word = word * gen;
  }
  return word;
}

// ---------------------------------------------------------------------------
// Congruence subgroups

/// M = E (quaternionic: M = +-E) entrywise modulo the level ideal.
template <class Entry>
bool congruence_member(const GroupElement<Entry>& m, Level level) {
  using traits = entry_traits<Entry>;
  if (level != traits::level)
    throw std::invalid_argument(std::string("congruence_member: level ") + to_string(level) +
                                " does not match group kind " + to_string(traits::kind));
  auto reduces_to_zero = [](const Matrix4x4<Entry>& d) {
    for (const auto& x : d.e)
      if (!traits::in_level(x)) return false;
    return true;
  };
  const auto e = Matrix4x4<Entry>::identity();
  if (reduces_to_zero(m.entries() - e)) return true;
  if constexpr (traits::kind == GroupKind::quaternionic) return reduces_to_zero(m.entries() + e);
  return false;
}

namespace detail {

/// Random element of the level ideal with small norm.
template <class Entry>
Entry random_level_element(Rng& rng) {
  if constexpr (std::is_same_v<Entry, RationalQuaternion>) {
    return HurwitzInt::p_generator().value() * random_hurwitz(rng, 2);
  } else {
    using Ring = typename Entry::ring_type;
    return level_generator<Ring>() * random_ring_element<Ring>(rng, 1);
  }
}

/// Smallest positive rational integer in the level ideal: 3, resp. 2.
template <class Entry>
std::int64_t level_integer() {
  if constexpr (std::is_same_v<Entry, EisensteinInt>) return 3;
  return 2;
}

/// Hermitian matrix with all entries in the level ideal.
template <class Entry>
Matrix2x2<Entry> random_level_hermitian(Rng& rng) {
  for (;;) {
    Matrix2x2<Entry> h;
    const std::int64_t n = level_integer<Entry>();
    h(0, 0) = entry_traits<Entry>::integer(n * rng.integer(-1, 1));
    h(1, 1) = entry_traits<Entry>::integer(n * rng.integer(-1, 1));
    h(0, 1) = random_level_element<Entry>(rng);
    h(1, 0) = entry_traits<Entry>::conj(h(0, 1));
    if (!(h == Matrix2x2<Entry>{})) return h;
  }
}

template <class Entry>
std::vector<Entry> units_congruent_to_one() {
  std::vector<Entry> out;
  for (const auto& u : unit_list<Entry>())
    if (entry_traits<Entry>::in_level(u - entry_traits<Entry>::one())) out.push_back(u);
  return out;
}

}  // namespace detail

/// A non-identity element of the principal congruence subgroup of the given
/// level: a short product of level translations (upper and lower), rotations
/// diag(U, conj(U)'^{-1}) with U = E mod level, and conjugates of these by
/// short words of the full group.
template <class Entry>
GroupElement<Entry> congruence_sample(Level level, std::uint64_t seed) {
  using G = GroupElement<Entry>;
  using traits = entry_traits<Entry>;
  if (level != traits::level)
    throw std::invalid_argument(std::string("congruence_sample: level ") + to_string(level) +
                                " does not match group kind " + to_string(traits::kind));
  Rng rng(seed);
  const auto good_units = detail::units_congruent_to_one<Entry>();
  for (;;) {
    G m;
    const int factors = static_cast<int>(rng.integer(1, 2));
    for (int f = 0; f < factors; ++f) {
      G gen;
      switch (rng.integer(0, 2)) {
        case 0: gen = G::translation(detail::random_level_hermitian<Entry>(rng)); break;
        case 1: gen = G::lower_translation(detail::random_level_hermitian<Entry>(rng)); break;
        default: {
          Matrix2x2<Entry> u = Matrix2x2<Entry>::identity();
          Matrix2x2<Entry> ui = Matrix2x2<Entry>::identity();
          if (rng.integer(0, 1) == 0) {
            const int j = static_cast<int>(rng.integer(0, 1));
            const Entry lambda = detail::random_level_element<Entry>(rng);
            u(j, 1 - j) = lambda;
            ui(j, 1 - j) = -lambda;
          } else {
            for (int k = 0; k < 2; ++k) {
              const auto& unit = good_units[static_cast<std::size_t>(
                  rng.integer(0, static_cast<std::int64_t>(good_units.size()) - 1))];
              u(k, k) = unit;
              ui(k, k) = detail::inverse_unit(unit);
            }
          }
          gen = G::rotation(u, ui);
          break;
        }
      }
      if (rng.integer(0, 2) == 0) {
        const G w = random_word<Entry>(static_cast<int>(rng.integer(1, 2)), rng.next());
        gen = w * gen * w.inverse();
      }
      m = m * gen;
    }
    if (congruence_member(m, level) && !(m == G::identity())) return m;
  }
}

// ---------------------------------------------------------------------------
// The S3 quotient of the quaternionic level-p group

/// The two maps generating the quotient of the extended level-p group by its
/// principal congruence subgroup: sigma(x) = omega x conj(omega) and
/// tau(x) = alpha conj(x) conj(alpha), alpha = (1+i1)/sqrt(2). Both act on
/// the half-plane through the off-diagonal quaternion z1.
struct S3QuotientMaps {
  static RationalQuaternion sigma(const RationalQuaternion& x) {
    const auto w = HurwitzInt::omega().value();
    return w * x * w.conj();
  }
  static ComplexQuaternion sigma(const ComplexQuaternion& x) {
    const auto w = to_complex(HurwitzInt::omega().value());
    return w * x * w.conj();
  }
  static ComplexQuaternion alpha() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, 0.0, 0.0};
  }
  static ComplexQuaternion tau(const ComplexQuaternion& x) {
    const auto a = alpha();
    return a * x.conj() * a.conj();
  }
  static QuaternionicPoint sigma(const QuaternionicPoint& p) { return {p.z0(), p.z2(), sigma(p.z1())}; }
  static QuaternionicPoint tau(const QuaternionicPoint& p) { return {p.z0(), p.z2(), tau(p.z1())}; }

  /// tau o tau is x -> i1 x (-i1), induced by the symplectic matrix i1 E4.
  static QuaternionicElement tau_squared_matrix() {
    const auto i1 = RationalQuaternion::basis(1);
    Matrix2x2<RationalQuaternion> u;
    Matrix2x2<RationalQuaternion> ui;
    u(0, 0) = u(1, 1) = i1;
    ui(0, 0) = ui(1, 1) = -i1;
    return QuaternionicElement::rotation(u, ui);
  }
};

inline S3QuotientMaps s3_quotient_maps() { return {}; }

}  // namespace hmf
