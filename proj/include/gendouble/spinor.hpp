#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gendouble/verify.hpp"

namespace gd {

/// Choice of i or i-bar for each hyperbolic pair label i = 1..N, N = n+3.
/// Odd n needs an odd number of bars, even n an even number.
class SpinorIndex {
 public:
  SpinorIndex(int n, std::vector<bool> barred);
  /// "1',2,3,4,5,6,7,8": every label once, a trailing apostrophe marks a bar.
  static SpinorIndex parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  int pairs() const noexcept { return n_ + 3; }
  bool barred(int label) const { return barred_.at(label - 1); }
  int bar_count() const noexcept;
  std::string to_string() const;
  /// 1-based columns of delta2. Odd n: label i is pair i, a bar picks column i
  /// and no bar column N+i. Even n: label i is pair N+1-i, a bar picks the
  /// column N + (N+1-i) and no bar the column N+1-i.
  IndexSet columns() const;

  friend bool operator==(const SpinorIndex&, const SpinorIndex&) = default;

 private:
  int n_;
  std::vector<bool> barred_;
};

/// Rows {2..N+1} of delta2.
IndexSet default_spinor_rows(int n);

/// The index sets quoted for g_1..g_n (n = 4 or 5).
std::vector<SpinorIndex> quoted_spinor_indices(int n);

struct SpinorMinor {
  std::optional<Poly> symbolic;
  std::vector<u64> values;
};

/// Symbolic minors with N = 8 or more are refused unless `allow_large` is set.
SpinorMinor spinor_minor(const DoublingCone& cone, const IndexSet& rows, const SpinorIndex& k, Mode mode,
                         std::size_t trials = 50, const PrimeFieldConfig& cfg = {}, bool allow_large = false);

enum class SpinorVerdict { VerifiedSquare, Zero, NonzeroUnclassified };
const char* to_string(SpinorVerdict v);

struct SpinorReport {
  SpinorIndex index;
  std::string candidate_name;
  SpinorVerdict verdict = SpinorVerdict::NonzeroUnclassified;
  /// minor = sign * candidate^2 * x1 when verified.
  int sign = 0;
  std::optional<Poly> minor_value;
  std::optional<Poly> coordinate;
  Certificate certificate;
};

/// Checks minor = +-candidate^2 * x1 with one sign, exactly or at sampled points.
/// Probabilistic mode also needs a point where the candidate is nonzero.
SpinorReport verify_spinor(const DoublingCone& cone, const IndexSet& rows, const SpinorIndex& k, const Poly& candidate,
                           Mode mode, std::size_t trials = 50, const PrimeFieldConfig& cfg = {},
                           bool allow_large = false);

/// s with s^2 * x1 = +-minor and positive leading coefficient.
Poly extract_spinor(const Poly& minor, const Poly& x1);

struct NamedPoly {
  std::string name;
  std::string family;
  Poly value;
};

/// g_j; +-a_i*x_j and +-a_i*x_j +- a_k*x_l; Pf(i^)*x_j for odd n.
std::vector<NamedPoly> default_spinor_candidates(const DoublingCone& cone);

struct SpinorEnumeration {
  std::vector<SpinorReport> reports;  // one per index set, in enumeration order
  std::size_t zero = 0;
  std::size_t nonzero = 0;
  std::size_t matched = 0;
};

/// All 2^(N-1) index sets of the right bar parity, classified at sampled points.
SpinorEnumeration enumerate_spinors(const DoublingCone& cone, const IndexSet& rows,
                                    const std::vector<NamedPoly>& candidates, std::size_t trials = 50,
                                    const PrimeFieldConfig& cfg = {});

}  // namespace gd
