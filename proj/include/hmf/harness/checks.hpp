#pragma once

// The verification checks. Each check draws from its own seeded generator and
// reports the largest residual over its samples.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmf/arith.hpp"
#include "hmf/brackets.hpp"
#include "hmf/groups.hpp"
#include "hmf/halfplane.hpp"
#include "hmf/harness/automorphy.hpp"
#include "hmf/harness/oracles.hpp"
#include "hmf/harness/sampling.hpp"
#include "hmf/random.hpp"
#include "hmf/reps.hpp"
#include "hmf/theta.hpp"

namespace hmf::harness {

using nlohmann::json;

struct CheckContext {
  std::uint64_t seed = 0;
  /// Policy for values at freshly sampled points.
  TruncationPolicy policy{};
  /// Policy for images MZ under congruence elements, whose Im-margin can be small.
  TruncationPolicy image_policy{1e-12, 14.0, 0.1};
};

struct Measurement {
  int samples = 0;
  double max_residual = 0.0;
  json details = json::object();

  void add(double r) {
    ++samples;
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    max_residual = std::max(max_residual, r);
  }
};

struct CheckDefinition {
  std::string id;
  int criterion = 0;
  std::string suite;
  std::string anchor;
  double tolerance = 0.0;
  std::function<Measurement(Rng&, const CheckContext&)> run;
};

namespace detail {

inline double rel(cplx a, cplx ref) { return std::abs(a - ref) / std::max(1.0, std::abs(ref)); }

template <class A, class B>
double rel(const A& a, const B& ref) {
  return (a - ref).norm() / std::max(1.0, ref.norm());
}

inline double strict_rel(cplx a, cplx ref) {
  const double d = std::abs(a - ref);
  return d == 0.0 ? 0.0 : d / std::abs(ref);
}

inline double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

inline RationalQuaternion random_hurwitz(Rng& rng) { return hmf::detail::random_hurwitz(rng, 12); }

inline int word_length(Rng& rng) { return static_cast<int>(rng.integer(1, 6)); }

// ---------------------------------------------------------------------------
// Arithmetic

inline Measurement arith_exactness(Rng& rng, const CheckContext&) {
  Measurement m;
  int mismatches = 0;
  // i_a i_b for a, b in {1, 2, 3}: -1 on the diagonal, +-i_c otherwise.
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, -1, 0}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RationalQuaternion expected;
      if (a == 0 || b == 0) {
        expected = RationalQuaternion::basis(a + b);
      } else if (a == b) {
        expected = -RationalQuaternion::one();
      } else {
        expected = Rational(sign[a][b]) * RationalQuaternion::basis(6 - a - b);
      }
      mismatches += qmul(RationalQuaternion::basis(a), RationalQuaternion::basis(b)) == expected ? 0 : 1;
      m.add(0.0);
    }
  const auto w = HurwitzInt::omega().value();
  mismatches += (w * w * w == -RationalQuaternion::one()) ? 0 : 1;
  const EisensteinInt eta = EisensteinInt::eta();
  mismatches += (eta * eta + eta + EisensteinInt(1)).is_zero() ? 0 : 1;
  for (int k = 0; k < 100; ++k) {
    const auto a = random_hurwitz(rng);
    const auto b = random_hurwitz(rng);
    const auto ab = a * b;
    mismatches += is_hurwitz(ab) && is_hurwitz(a.conj()) ? 0 : 1;
    mismatches += ab.norm() == a.norm() * b.norm() ? 0 : 1;
    mismatches += ab.conj() == b.conj() * a.conj() ? 0 : 1;
    mismatches += a * a.conj() == RationalQuaternion(a.norm()) ? 0 : 1;
    mismatches += (a * b) * a == a * (b * a) ? 0 : 1;
    m.add(0.0);
  }
  m.max_residual = mismatches;
  m.details["mismatches"] = mismatches;
  return m;
}

inline Measurement arith_check_embed(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 100; ++k) {
    const ComplexQuaternion a{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    const ComplexQuaternion b{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    const Mat2 prod = check_embed(a * b);
    m.add(rel(Mat2(check_embed(a) * check_embed(b)), prod));
    m.add(rel(Mat2(j2() * check_embed(a).transpose() * j2().inverse()), Mat2(check_embed(a.conj()))));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Unitary group identities

template <class Ring>
void det_ab_samples(Rng& rng, Measurement& m, int words, int points) {
  for (int w = 0; w < words; ++w) {
    const auto g = random_word<QuadInt<Ring>>(word_length(rng), rng.next());
    for (int p = 0; p < points; ++p) {
      const auto z = random_hermitian_point(rng);
      const cplx lhs = automorphy_block(g, z).determinant();
      const cplx rhs = g.det() * conjugate_automorphy_block(g, z).determinant();
      m.add(rel(rhs, lhs));
    }
  }
}

inline Measurement lemma_det_ab(Rng& rng, const CheckContext&) {
  Measurement m;
  det_ab_samples<Eisenstein>(rng, m, 50, 3);
  det_ab_samples<Gauss>(rng, m, 50, 3);
  return m;
}

template <class Ring>
ActionSample<QuadInt<Ring>> unitary_action_sample(Rng& rng, double min_margin) {
  for (;;) {
    const auto g = random_word<QuadInt<Ring>>(word_length(rng), rng.next());
    if (auto s = sample_point_for(g, rng, min_margin, 16)) return *s;
  }
}

template <class Ring>
double jac_fd_residual(const ActionSample<QuadInt<Ring>>& s) {
  return max_abs(jac_hermitian(s.m, s.z).flat() - fd_moebius_jacobian(s.m, s.z));
}

inline Measurement lemma_jac_u_fd(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 10; ++k) {
    m.add(jac_fd_residual(unitary_action_sample<Eisenstein>(rng, 0.05)));
    m.add(jac_fd_residual(unitary_action_sample<Gauss>(rng, 0.05)));
  }
  return m;
}

template <class Ring>
double jac_det_residual(const GroupElement<QuadInt<Ring>>& g, const HermitianPoint& z) {
  const cplx k = automorphy_block(g, z).determinant();
  return strict_rel(jac_hermitian(g, z).det(), g.det() * g.det() / std::pow(k, 4));
}

inline Measurement lemma_jac_u_det(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 25; ++k) {
    const auto e = random_word<EisensteinInt>(word_length(rng), rng.next());
    m.add(jac_det_residual(e, random_hermitian_point(rng)));
    const auto g = random_word<GaussInt>(word_length(rng), rng.next());
    m.add(jac_det_residual(g, random_hermitian_point(rng)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Theta automorphy and symmetry

inline Measurement eisenstein_theta_automorphy(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto table = characteristic_table(ThetaCase::eisenstein);
  const AutomorphyFactorSpec spec(1, CharacterMode::det_r, RepresentationTag::trivial);
  double smallest_margin = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 20; ++s) {
    for (const auto& a :
         congruence_action_samples<EisensteinInt>(Level::sqrt_minus_3, rng, 5, ctx.image_policy.min_margin)) {
      smallest_margin = std::min(smallest_margin, imag_margin(a.image));
      for (const auto& ch : table) {
        auto f = [&](const HermitianPoint& p) { return theta_eval(ch, p, ctx.image_policy); };
        m.add(check_automorphy<Eisenstein>(f, spec, a.m, a.z, 0.0).residual);
      }
    }
  }
  m.details["smallest_image_margin"] = smallest_margin;
  return m;
}

inline Measurement eisenstein_theta_symmetry(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  for (int p = 0; p < 10; ++p) {
    const auto z = random_hermitian_point(rng);
    for (const auto& ch : characteristic_table(ThetaCase::eisenstein))
      m.add(rel(theta_eval(ch, z.transposed(), ctx.policy), theta_eval(ch, z, ctx.policy)));
  }
  return m;
}

inline Measurement gauss_theta_square_automorphy(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto table = characteristic_table(ThetaCase::gauss);
  const AutomorphyFactorSpec spec(2, CharacterMode::det_half_r, RepresentationTag::trivial);
  for (int s = 0; s < 20; ++s) {
    for (const auto& a : congruence_action_samples<GaussInt>(Level::one_plus_i, rng, 3, ctx.image_policy.min_margin)) {
      for (const auto& ch : table) {
        auto f = [&](const HermitianPoint& p) { return std::pow(theta_eval(ch, p, ctx.image_policy), 2); };
        m.add(check_automorphy<Gauss>(f, spec, a.m, a.z, 0.0).residual);
      }
    }
  }
  return m;
}

inline Measurement gauss_phi10_symmetry(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  for (int p = 0; p < 10; ++p) {
    const auto z = random_hermitian_point(rng);
    const cplx a = phi10(z, ctx.policy);
    m.add(strict_rel(phi10(z.transposed(), ctx.policy), a));
  }
  return m;
}

/// Fixed-point sets of Z -> conj(U)' Z' U: U = diag(1, i) gives z12 = i z21,
/// U = diag(i, 1) gives z21 = i z12. The average of Z and its image lies on
/// the set and keeps Im Z positive definite.
inline HermitianPoint project_to_locus(const HermitianPoint& z, bool first) {
  Mat2 u = Mat2::Identity();
  u(first ? 1 : 0, first ? 1 : 0) = I;
  const Mat2 image = u.adjoint() * z.z.transpose() * u;
  return HermitianPoint(0.5 * (z.z + image));
}

inline Measurement gauss_vanishing_locus(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto table = characteristic_table(ThetaCase::gauss);
  std::vector<HermitianPoint> points[2];
  for (int p = 0; p < 20; ++p) {
    const auto z = random_hermitian_point(rng);
    points[0].push_back(project_to_locus(z, true));
    points[1].push_back(project_to_locus(z.transposed(), false));
  }
  int zero_pairs = 0;
  int ambiguous_pairs = 0;
  json rows = json::array();
  for (const auto& ch : table) {
    json row{{"theta", ch.label()}};
    for (int locus = 0; locus < 2; ++locus) {
      double largest = 0.0;
      for (const auto& z : points[locus]) {
        largest = std::max(largest, std::abs(theta_eval(ch, z, ctx.policy)));
        m.add(0.0);
      }
      row[locus == 0 ? "max_abs_on_z12_eq_i_z21" : "max_abs_on_z21_eq_i_z12"] = largest;
      if (largest < 1e-6) {
        ++zero_pairs;
      } else if (largest <= 1e-3) {
        ++ambiguous_pairs;
      }
    }
    rows.push_back(row);
  }
  m.max_residual = std::abs(zero_pairs - 1) + ambiguous_pairs;
  m.details["per_theta"] = rows;
  m.details["zero_pairs"] = zero_pairs;
  m.details["ambiguous_pairs"] = ambiguous_pairs;
  return m;
}

inline Measurement theta_truncation(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  double largest_declared = 0.0;
  for (ThetaCase kind : {ThetaCase::eisenstein, ThetaCase::gauss}) {
    for (int p = 0; p < 10; ++p) {
      const auto z = random_hermitian_point(rng);
      for (const auto& ch : characteristic_table(kind)) {
        const auto jet = theta_jet(ch, z, ctx.policy, false);
        largest_declared = std::max(largest_declared, jet.value_tail);
        m.add(std::abs(jet.value - brute_force_theta(ch, z, jet.radius + 3.0)));
      }
    }
  }
  m.details["largest_declared_tail"] = largest_declared;
  return m;
}

// ---------------------------------------------------------------------------
// Brackets

inline std::vector<HermitianForm> eisenstein_family(const TruncationPolicy& policy) {
  std::vector<HermitianForm> out;
  for (const auto& ch : characteristic_table(ThetaCase::eisenstein)) out.push_back(theta_form(ch, policy));
  return out;
}

inline std::vector<HermitianForm> gauss_square_family(const TruncationPolicy& policy) {
  std::vector<HermitianForm> out;
  for (const auto& ch : gauss_generators()) out.push_back(theta_square_form(ch, policy));
  return out;
}

/// Three-term residual for all unordered triples of distinct family members.
inline void family_relations(Rng& rng, Measurement& m, const std::vector<HermitianForm>& family, int points) {
  int degenerate = 0;
  for (int p = 0; p < points; ++p) {
    const auto z = random_hermitian_point(rng);
    std::vector<FormJet<HermitianPoint>> jets;
    for (const auto& f : family) jets.push_back(f.jet(z));
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        for (std::size_t k = j + 1; k < family.size(); ++k) {
          const auto r = three_term_residual(family[i].weight, jets[i].value, jets[i].gradient, family[j].weight,
                                             jets[j].value, jets[j].gradient, family[k].weight, jets[k].value,
                                             jets[k].gradient);
          degenerate += r.degenerate ? 1 : 0;
          m.add(r.residual);
        }
  }
  m.details["degenerate"] = degenerate;
}

inline Measurement thm_mta_relations(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  family_relations(rng, m, eisenstein_family(ctx.policy), 5);
  return m;
}

inline Measurement thm_mtb_relations(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  family_relations(rng, m, gauss_square_family(ctx.policy), 5);
  return m;
}

inline Measurement lemma_detsym_skew(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto family = eisenstein_family(ctx.policy);
  for (int p = 0; p < 10; ++p) {
    const auto z = random_hermitian_point(rng);
    m.add(strict_rel(-bracket_det(family, 0, z.transposed()), bracket_det(family, 0, z)));
  }
  return m;
}

inline Measurement lemma_detsym_quotient(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto family = eisenstein_family(ctx.policy);
  const auto theta1 = characteristic_table(ThetaCase::eisenstein)[0];
  int skipped = 0;
  while (m.samples < 10) {
    const auto z = random_hermitian_point(rng);
    const cplx t = theta_eval(theta1, z, ctx.policy);
    const cplx tt = theta_eval(theta1, z.transposed(), ctx.policy);
    if (std::abs(t) <= 1e-3 || std::abs(tt) <= 1e-3) {
      ++skipped;
      continue;
    }
    const cplx q = bracket_det(family, 0, z) / (t * t * t);
    const cplx qt = bracket_det(family, 0, z.transposed()) / (tt * tt * tt);
    m.add(strict_rel(-qt, q));
  }
  m.details["skipped_small_theta1"] = skipped;
  return m;
}

inline Measurement lemma_detsymg_skew(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto family = gauss_square_family(ctx.policy);
  const auto first = gauss_generators()[0];
  auto quotient = [&](const HermitianPoint& z) {
    const cplx t = theta_eval(first, z, ctx.policy);
    return bracket_det(family, 0, z) / (std::pow(t, 6) * phi10(z, ctx.policy));
  };
  for (int p = 0; p < 10; ++p) {
    const auto z = random_hermitian_point(rng);
    m.add(strict_rel(-quotient(z.transposed()), quotient(z)));
  }
  return m;
}

/// Transposed bracket {f, g}' of weight-1 thetas: weight 2, character det^2, St (x) St.
inline Measurement bracket_automorphy(Rng& rng, const CheckContext& ctx) {
  Measurement m;
  const auto family = eisenstein_family(ctx.image_policy);
  const AutomorphyFactorSpec spec(2, CharacterMode::det_r, RepresentationTag::st_tensor_st);
  for (int s = 0; s < 10; ++s) {
    const auto a =
        congruence_action_samples<EisensteinInt>(Level::sqrt_minus_3, rng, 1, ctx.image_policy.min_margin)[0];
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        auto f = [&](const HermitianPoint& p) { return Mat2(bracket(family[i], family[j], p).transpose()); };
        m.add(check_automorphy<Eisenstein>(f, spec, a.m, a.z, 0.0).residual);
      }
  }
  return m;
}

// ---------------------------------------------------------------------------
// rho_Jac

inline Measurement rhojac_multiplicative(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 100; ++k) {
    const Mat4 a = random_matrix<4, 4>(rng, 2.0);
    const Mat4 b = random_matrix<4, 4>(rng, 2.0);
    m.add(rel(Mat6(rho_jac(a) * rho_jac(b)), rho_jac(a * b)));
  }
  return m;
}

inline Measurement rhojac_real_form(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 50; ++k) {
    QuaternionMatrix u;
    for (auto& row : u)
      for (auto& x : row) x = random_real_quaternion(rng);
    QuaternionicPoint w;
    for (auto& c : w.coords) c = rng.uniform(-1.0, 1.0);
    const Vec6 expected = coordinates_of(quaternion_congruence(u, as_quaternion_matrix(w)));
    m.add(rel(Vec6(rho_jac(check_embed_matrix(u)) * w.as_vector()), expected));
  }
  return m;
}

inline Measurement rhojac_slice_invariance(Rng& rng, const CheckContext&) {
  Measurement m;
  const Mat4 jt = j_tilde();
  for (int k = 0; k < 100; ++k) {
    const Mat4 a = random_matrix<4, 4>(rng, 2.0);
    for (int b = 0; b < 6; ++b) m.add(slice_residual(a * slice_basis(b) * jt * a.transpose() * jt.inverse()));
  }
  return m;
}

inline Vec6 highest_weight_vector() {
  Vec6 e = Vec6::Zero();
  e(0) = 1.0;
  return e;
}

inline Measurement rhojac_highest_weight_unipotent(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 100; ++k)
    m.add(rel(Vec6(rho_jac(random_unipotent(rng)) * highest_weight_vector()), highest_weight_vector()));
  return m;
}

inline Measurement rhojac_highest_weight_diagonal(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 100; ++k) {
    Mat4 d = Mat4::Zero();
    for (int j = 0; j < 4; ++j) d(j, j) = random_complex(rng, 2.0);
    m.add(rel(Vec6(rho_jac(d) * highest_weight_vector()), Vec6(d(0, 0) * d(1, 1) * highest_weight_vector())));
  }
  return m;
}

inline Measurement rhojac_slice_dimension(Rng&, const CheckContext&) {
  Measurement m;
  const int dim = slice_dimension();
  Eigen::Matrix<cplx, 16, 6> images;
  for (int k = 0; k < 6; ++k) images.col(k) = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(slice_basis(k).data());
  const auto rank = static_cast<int>(Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 6>>(images).rank());
  const int n = 2;
  m.add(std::abs(dim - 6) + std::abs(rank - 6) + std::abs(dim - (2 + 2 * n * (n - 1))));
  m.details["slice_dimension"] = dim;
  m.details["packed_basis_rank"] = rank;
  return m;
}

// ---------------------------------------------------------------------------
// Quaternionic Jacobian

inline ActionSample<RationalQuaternion> quaternionic_action_sample(Rng& rng) {
  for (;;) {
    const auto g = random_word<RationalQuaternion>(word_length(rng), rng.next());
    if (auto s = sample_point_for(g, rng, 0.05, 16)) return *s;
  }
}

inline Measurement lemma_jacrho_fd(Rng& rng, const CheckContext&) {
  Measurement m;
  double unadjoined = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto s = quaternionic_action_sample(rng);
    const Mat6 fd = fd_moebius_jacobian(s.m, s.z);
    m.add(max_abs(jac_quaternionic(s.m, s.z) - fd));
    unadjoined = std::max(unadjoined, max_abs(jac_quaternionic_unadjoined(s.m, s.z) - fd));
  }
  m.details["max_deviation_of_rho_jac_K_inverse_without_adjoint"] = unadjoined;
  return m;
}

inline Measurement lemma_jacrho_det(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 30; ++k) {
    const auto s = quaternionic_action_sample(rng);
    const cplx kdet = automorphy_block(s.m, s.z).determinant();
    m.add(strict_rel(jac_quaternionic(s.m, s.z).determinant(), 1.0 / std::pow(kdet, 3)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// S3 quotient

inline Measurement lemma_normal_s3_sigma(Rng& rng, const CheckContext&) {
  Measurement m;
  int mismatches = 0;
  for (int k = 0; k < 50; ++k) {
    const auto x = random_hurwitz(rng);
    const auto s1 = S3QuotientMaps::sigma(x);
    const auto s3 = S3QuotientMaps::sigma(S3QuotientMaps::sigma(s1));
    mismatches += s3 == x ? 0 : 1;
    mismatches += is_hurwitz(s1) ? 0 : 1;
    m.add(0.0);
  }
  // Order exactly 3: sigma moves i1 (to i2).
  const auto i1 = RationalQuaternion::basis(1);
  mismatches += S3QuotientMaps::sigma(i1) == i1 ? 1 : 0;
  mismatches += S3QuotientMaps::sigma(i1) == RationalQuaternion::basis(2) ? 0 : 1;
  m.max_residual = mismatches;
  m.details["mismatches"] = mismatches;
  return m;
}

inline Measurement lemma_normal_s3_tau(Rng& rng, const CheckContext&) {
  Measurement m;
  const auto i1 = to_complex(RationalQuaternion::basis(1));
  const auto w = to_complex(HurwitzInt::omega().value());
  auto diff = [](const ComplexQuaternion& a, const ComplexQuaternion& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
  };
  for (int k = 0; k < 50; ++k) {
    const ComplexQuaternion x{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    const auto tt = S3QuotientMaps::tau(S3QuotientMaps::tau(x));
    m.add(diff(tt, i1 * x * (-i1)));
    // tau sigma tau = sigma^{-1}, i.e. x -> conj(omega) x omega.
    const auto tst = S3QuotientMaps::tau(S3QuotientMaps::sigma(S3QuotientMaps::tau(x)));
    m.add(diff(tst, w.conj() * x * w));
  }
  m.add(diff(S3QuotientMaps::tau(ComplexQuaternion::one()), ComplexQuaternion::one()));
  m.add(diff(S3QuotientMaps::tau(S3QuotientMaps::tau(to_complex(RationalQuaternion::basis(2)))),
             -to_complex(RationalQuaternion::basis(2))));
  return m;
}

inline Measurement lemma_normal_s3_congruence(Rng&, const CheckContext&) {
  Measurement m;
  int mismatches = 0;
  const auto tau2 = S3QuotientMaps::tau_squared_matrix();
  mismatches += congruence_member(tau2, Level::hurwitz_p) ? 0 : 1;
  // diag(omega, omega, omega, omega) induces sigma and is not in the congruence subgroup.
  const auto w = HurwitzInt::omega().value();
  Matrix2x2<RationalQuaternion> u;
  Matrix2x2<RationalQuaternion> ui;
  u(0, 0) = u(1, 1) = w;
  ui(0, 0) = ui(1, 1) = w.conj();
  const auto sigma_matrix = QuaternionicElement::rotation(u, ui);
  mismatches += congruence_member(sigma_matrix, Level::hurwitz_p) ? 1 : 0;
  const auto sigma3 = sigma_matrix * sigma_matrix * sigma_matrix;
  mismatches += congruence_member(sigma3, Level::hurwitz_p) ? 0 : 1;
  m.add(mismatches);
  m.details["mismatches"] = mismatches;
  return m;
}

// ---------------------------------------------------------------------------
// Generic bracket identities

inline Measurement lemma_jac_reduction(Rng& rng, const CheckContext&) {
  Measurement m;
  int resampled = 0;
  while (m.samples < 20) {
    std::vector<QuaternionicForm> forms;
    for (int k = 0; k < 6; ++k)
      forms.push_back(polynomial_form(Polynomial<6>::random(rng), 1, "f" + std::to_string(k + 1)));
    forms.push_back(polynomial_form(Polynomial<6>::random(rng), 3, "g"));
    const auto z = random_quaternionic_point(rng);
    try {
      m.add(reduction_identity_residual(forms, z));
    } catch (const ill_conditioned&) {
      ++resampled;
    }
  }
  m.details["resampled"] = resampled;
  return m;
}

inline Measurement thm_mtc_three_term(Rng& rng, const CheckContext&) {
  Measurement m;
  for (int k = 0; k < 20; ++k) {
    std::vector<QuaternionicForm> f;
    for (int j = 0; j < 3; ++j)
      f.push_back(polynomial_form(Polynomial<6>::random(rng), static_cast<int>(rng.integer(1, 3)), "f"));
    m.add(three_term_residual(f[0], f[1], f[2], random_quaternionic_point(rng)).residual);
  }
  return m;
}

}  // namespace detail

/// All checks, in criterion order.
inline const std::vector<CheckDefinition>& check_registry() {
  using namespace detail;
  static const std::vector<CheckDefinition> registry{
      {"arith-exactness", 1, "arith", "i₁i₂=−i₂i₁=i₃; ring of Hurwitz integers", 0.0, arith_exactness},
      {"arith-check-embed", 1, "arith", "induces an isomorphism of algebras", 1e-12, arith_check_embed},
      {"lemma-detAB", 2, "groups", "det(CZ+D)=det M det(C̄Z′+D̄)", 1e-9, lemma_det_ab},
      {"lemma-jacU-fd", 3, "reps", "(C̄Z′+D̄)′⁻¹W(CZ+D)⁻¹", 1e-5, lemma_jac_u_fd},
      {"lemma-jacU-det", 3, "reps", "Its determinant is", 1e-9, lemma_jac_u_det},
      {"eisenstein-theta-automorphy", 4, "theta", "f(MZ)=det M^r det(CZ+D)^r f(Z)", 1e-8,
       eisenstein_theta_automorphy},
      {"eisenstein-theta-symmetry", 4, "theta", "subspace of all symmetric forms", 1e-10, eisenstein_theta_symmetry},
      {"thm-MTa-relations", 5, "brackets", "Defining relations are", 1e-8, thm_mta_relations},
      {"lemma-detsym-skew", 6, "brackets", "up to constant factor Θ₁³φ₉", 1e-8, lemma_detsym_skew},
      {"lemma-detsym-quotient", 6, "brackets", "up to constant factor Θ₁³φ₉", 1e-6, lemma_detsym_quotient},
      {"gauss-theta-square-automorphy", 7, "theta", "f(MZ)=det M^{r/2}det(CZ+D)^r f(Z)", 1e-8,
       gauss_theta_square_automorphy},
      {"thm-MTb-relations", 7, "brackets", "Defining relations are", 1e-8, thm_mtb_relations},
      {"lemma-detsymG-skew", 8, "brackets", "constant factor Θ₁⁶φ₄φ₁₀", 1e-6, lemma_detsymg_skew},
      {"gauss-phi10-symmetry", 8, "theta", "product of the ten thetas", 1e-8, gauss_phi10_symmetry},
      {"gauss-vanishing-locus", 9, "theta", "vanishes along the fixed point set", 0.0, gauss_vanishing_locus},
      {"rhojac-multiplicative", 10, "reps", "ϱ_Jac: GL(2n,ℂ)→GL(𝒵_n)", 1e-10, rhojac_multiplicative},
      {"rhojac-real-form", 10, "reps", "unique rational (holomorphic) representation", 1e-12, rhojac_real_form},
      {"rhojac-slice-invariance", 10, "reps", "ϱ_Jac: GL(2n,ℂ)→GL(𝒵_n)", 1e-10, rhojac_slice_invariance},
      {"rhojac-highest-weight-unipotent", 10, "reps", "invariant under all unipotent upper-triangular matrices", 1e-10,
       rhojac_highest_weight_unipotent},
      {"rhojac-highest-weight-diagonal", 10, "reps", "highest weight is (1,1,0,…,0)", 1e-12,
       rhojac_highest_weight_diagonal},
      {"rhojac-slice-dimension", 10, "reps", "Its dimension is 2+2n(n−1)", 0.0, rhojac_slice_dimension},
      {"lemma-jacrho-fd", 11, "reps", "Jac(M,Z)=ϱ_Jac(ČŽ+Ď)⁻¹", 1e-5, lemma_jacrho_fd},
      {"lemma-jacrho-det", 11, "reps", "det Jac(M,Z)=det(ČŽ+Ď)^{−3}", 1e-8, lemma_jacrho_det},
      {"lemma-normal-s3-sigma", 12, "groups", "x↦ωxω̄", 0.0, lemma_normal_s3_sigma},
      {"lemma-normal-s3-tau", 12, "groups", "x↦αx̄ᾱ", 1e-12, lemma_normal_s3_tau},
      {"lemma-normal-s3-congruence", 12, "groups", "normal subgroup of index 6", 0.0, lemma_normal_s3_congruence},
      {"lemma-jac-reduction", 13, "brackets", "ϑ₁⁵D = det({ϑ₁,ϑ₂} … {ϑ₁,G})", 1e-8, lemma_jac_reduction},
      {"thm-MTc-three-term", 13, "brackets", "wt(h)h{f,g}=wt(g)g{f,h}+wt(f)f{h,g}", 1e-10, thm_mtc_three_term},
      {"bracket-automorphy", 14, "brackets", "{f,g} can be considered as element of ℳ(2)", 1e-6, bracket_automorphy},
      {"theta-truncation", 15, "theta", "Σ_{g∈𝔬_F²} e^{2πi (g+p)̄′Z(g+p)}", 1e-12, theta_truncation},
  };
  return registry;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "groups", "theta", "reps", "brackets"};
  return names;
}

}  // namespace hmf::harness
