#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hs3/hypergraph.hpp"
#include "hs3/rules.hpp"
#include "hs3/solver.hpp"

namespace hs3 {

/// Largest m with its own row; rows beyond it repeat Psi(8,1).
inline constexpr int kPsiRows = 8;

/// A measure table Psi_dhat(m, c) for m in [0,8], c in [0,m].
///
/// Lookups outside the stored triangle follow fixed conventions: Psi(m,0) = 0,
/// Psi(m,c) = 0 for c > m when m <= 8, and Psi(m,c) = Psi(8,1) for m > 8 and c >= 1.
class PsiTable {
 public:
  /// All-zero table. Throws InputError unless dhat is in [3,6].
  explicit PsiTable(int dhat);

  /// The published table for dhat = 4.
  static PsiTable bundled_psi4();

  int dhat() const { return dhat_; }
  /// Throws InputError unless 0 <= c <= m <= 8.
  void set(int m, int c, double value);
  /// Raw stored cell, no conventions applied.
  double cell(int m, int c) const { return cells_[m][c]; }

 private:
  int dhat_;
  std::array<std::array<double, kPsiRows + 1>, kPsiRows + 1> cells_{};
};

/// Psi(m, c) with the extension and padding conventions. Throws InputError on negatives.
double psi(const PsiTable& t, int m, int c);
/// min over c in [1,m]_0 of Psi(m, c).
double psi_star(const PsiTable& t, int m);
/// Psi(m,c) - Psi(max(0, m - alpha), cp).
double delta(const PsiTable& t, int m, int alpha, int c, int cp);
/// k - Psi(m2(G), c2(G)).
double mu(const PsiTable& t, const Instance& inst);
/// d(G) clamped to [3,6].
int dhat(const Hypergraph& g);

/// [lo,hi] if lo <= hi, otherwise {fallback}.
struct RangeWithDefault {
  int lo;
  int hi;
  int fallback;
  std::vector<int> expand() const;
};

using BranchingVector = std::vector<double>;

/// Unique root x > 1 of sum x^(-a_i) = 1; 1 for a single positive entry.
/// Throws InputError if the vector is empty or has a non-positive entry.
double branching_number(std::span<const double> v);
/// True iff `a` is dominated by `b`: some injection f has a_i >= b_f(i) for all i.
bool dominates(std::span<const double> a, std::span<const double> b);

struct EnumerationLimits {
  /// Largest d2(G) enumerated for the unbounded "d2(G) = d >= 3" family when dhat = 6.
  int d_max = 10;
  /// Parameter indices c, c', c'' are capped here; Psi is constant in c beyond row 8.
  int c_cap = 9;
};

/// One materialized vector with the family and parameters that produced it.
struct FamilyVector {
  std::string family;
  std::string params;
  BranchingVector entries;
};

/// A dominating family of branching vectors for one rule.
struct FamilyInfo {
  std::string name;
  RuleId rule;
  /// Parametrized by m in [m_lo, m_hi]; fixed families have has_m = false.
  bool has_m = false;
  int m_lo = 0;
  int m_hi = 0;
};

/// Families that apply to `rule` at the table's dhat (empty for rules marked NA).
std::vector<FamilyInfo> list_families(const PsiTable& t, RuleId rule, const EnumerationLimits& lim = {});
/// Vectors of one family at one m (m is ignored by fixed families).
std::vector<FamilyVector> enumerate_family(const PsiTable& t, const FamilyInfo& family, int m,
                                           const EnumerationLimits& lim = {});
/// Every vector of every family of `rule`, m running over each family's full range.
std::vector<FamilyVector> enumerate_vectors(const PsiTable& t, RuleId rule, const EnumerationLimits& lim = {});

struct RuleVerification {
  RuleId rule;
  bool applicable = false;
  std::size_t vector_count = 0;
  double max_branching_number = 0.0;
  std::optional<FamilyVector> argmax;
  /// Vectors with a non-positive entry; their branching number is unbounded.
  std::vector<FamilyVector> failures;
};

RuleVerification verify_rule(const PsiTable& t, RuleId rule, const EnumerationLimits& lim = {});

/// B1..B6 and B8, the rules that carry branching vectors.
std::span<const RuleId> measured_rules();

struct PropertyViolation {
  std::string property;
  int m = 0;
  int c = 0;
  int a = 0;
  int cp = 0;
  double value = 0.0;
};

struct PropertyReport {
  std::size_t checks = 0;
  std::vector<PropertyViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Range, zero, monotonicity and bounded-drop properties over m in [0,9].
PropertyReport check_properties(const PsiTable& t, double slack = 1e-6);

struct MonotonicityReport {
  std::size_t steps_checked = 0;
  std::vector<ReductionStep> violations;
};

/// mu must not increase across a reduction step. Only steps whose dhat_before matches the
/// table are checked.
MonotonicityReport check_reduction_monotonicity(const PsiTable& t, std::span<const ReductionStep> trace,
                                                double slack = 1e-6);

/// Table file: header `psi <dhat>`, then `m c value` lines. Blank lines and lines starting
/// with '#' are ignored. Throws ParseError.
PsiTable parse_psi_table(std::string_view text);
std::string serialize_psi_table(const PsiTable& t);
PsiTable read_psi_table(const std::string& path);

}  // namespace hs3
