#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gendouble/doubling.hpp"

namespace gd {

enum class Mode { Exact, Probabilistic };
const char* to_string(Mode m);

/// Composable differentials maps[0], maps[1], ... with maps[i] * maps[i+1] defined.
struct ChainComplex {
  std::string name;
  RingPtr ring;
  std::vector<PolyMatrix> maps;

  static ChainComplex from(const AciResolution& res);
  static ChainComplex from(const DoublingCone& cone);
};

enum class CertificateKind { Complex, Rank, Identity, Membership, Spinor };
const char* to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::Identity;
  std::string target;
  Mode mode = Mode::Exact;
  bool pass = false;
  std::string detail;
  std::size_t trials = 0;
  u64 modulus = 0;
  u64 seed = 0;
  /// Largest degree D of any polynomial tested; the per-point bound is D/p.
  int degree_bound = 0;
  double per_point_bound = 0.0;
  /// log2 of the probability that a false identity passes every trial.
  double log2_failure_bound = 0.0;
  double wall_time_s = 0.0;
  std::vector<std::vector<u64>> points;
};

/// Degree bounds are kept per point; trials are independent.
double log2_failure(int degree, u64 modulus, std::size_t trials);

/// A polynomial vector expression given by its evaluation at points.
struct PitExpression {
  std::string description;
  std::size_t num_vars = 0;
  std::optional<int> degree_bound;
  std::function<std::vector<u64>(std::span<const u64>, const PrimeField&)> eval;
};

/// Passes iff every component vanishes at all `trials` sampled points.
/// Throws MissingDegreeBound when the expression has none.
Certificate pit_zero(const PitExpression& expr, std::size_t trials, const PrimeFieldConfig& cfg);

/// Every consecutive product is zero: exactly, or at sampled points.
Certificate check_complex(const ChainComplex& cx, Mode mode, std::size_t trials = 50,
                          const PrimeFieldConfig& cfg = {});

struct RankProfile {
  std::vector<std::size_t> ranks;
  /// history[k] = ranks after the first k+1 points (monotone in k).
  std::vector<std::vector<std::size_t>> history;
  Certificate certificate;
};

/// Numeric ranks maximised over specializations. The certificate passes iff
/// the ranks meet the exactness count: r_1 = rank F_0, r_i + r_{i+1} = rank F_i
/// and r_k = rank F_k.
RankProfile rank_profile(const ChainComplex& cx, std::size_t points, const PrimeFieldConfig& cfg = {});

struct MembershipResult {
  bool member = false;
  Certificate certificate;
};

/// Decides g in the weighted-degree deg(g) part of (gens) by linear algebra on
/// {monomial * gen}. Exact mode is fraction-free over Z; fast mode works mod p
/// and its non-membership verdicts are only evidence.
MembershipResult graded_membership(const Poly& g, const std::vector<Poly>& gens, bool exact,
                                   u64 modulus = kDefaultModulus);

/// All monomials of the given weighted degree.
std::vector<Monomial> monomials_of_weight(const GenericRing& ring, int weight);

}  // namespace gd
