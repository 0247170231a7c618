#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algdyn/weights.hpp"

namespace algdyn {

/// sum_p q_p log p + arch, in nats. The p-adic part is exact.
struct LogCombination {
  std::map<Int, Rat> padic;
  Interval arch;

  explicit LogCombination(mpfr_prec_t bits = 128) : arch(bits) {}

  bool has_arch() const;
  bool is_exact_zero() const;
  Interval value(mpfr_prec_t bits) const;
  Interval value() const { return value(arch.precision()); }
  LogCombination scaled(const Rat& q) const;
  LogCombination& operator+=(const LogCombination& o);
  friend LogCombination operator+(LogCombination a, const LogCombination& b) { return a += b; }
  /// "1*log(2) + 1*log(3)" followed by the archimedean interval when present.
  std::string str(int digits = 17) const;
};

/// a / b, exact when both are multiples of the same single log p.
struct Ratio {
  Interval value;
  std::optional<Rat> exact;
};
Ratio ratio(const LogCombination& a, const LogCombination& b, mpfr_prec_t bits);

struct ClassEntropy {
  std::size_t cls = 0;
  LogCombination value;
};

struct EntropyReport {
  IntVec n;
  /// Entropy of each flag quotient block, in flag order.
  std::vector<LogCombination> per_block;
  /// Stable classes only, ascending.
  std::vector<ClassEntropy> per_class;
  LogCombination total;
  std::string units = "nats";
};

/// Haar entropy of alpha^n: per block sum of delta * max(0, -chi.n).
EntropyReport haar_entropy(const WeightAnalysis& wa, const IntVec& n);
EntropyReport haar_entropy(const SolenoidAction& action, const IntVec& n, const WeightConfig& cfg = {});

/// Entropy carried by the classes in V that are stable for n.
LogCombination entropy_contribution(const WeightAnalysis& wa, const IntVec& n, const std::vector<std::size_t>& classes);

/// Entropy of the flag quotient blocks [first, last), which is the
/// conditional entropy relative to the factor V_first for Haar measure.
LogCombination flag_range_entropy(const WeightAnalysis& wa, const IntVec& n, std::size_t first, std::size_t last);

struct KappaResult {
  Interval value;
  /// Exactly 0 or 1 when V misses or covers every stable weight of the block.
  std::optional<Rat> exact;
  bool proper = false;
  /// value < 1 strictly, certified.
  bool below_one = false;
};

/// h(alpha^n, V) / h(alpha^n) restricted to one flag block.
/// Throws DomainError when the block has no positive entropy for n.
KappaResult kappa(const WeightAnalysis& wa, const IntVec& n, const std::vector<std::size_t>& classes,
                  std::size_t block = 0);

struct LinearForm {
  std::size_t cls = 0;
  /// h(alpha^n, W) = c * max(0, -chi.n) with chi the representative weight.
  Interval c;
  std::vector<std::pair<IntVec, Interval>> residuals;
  bool consistent = true;
};

/// Sample grid: all nonzero n with |n|_inf <= bound.
std::vector<IntVec> sample_grid(std::size_t d, int bound);

LinearForm entropy_linear_form(const WeightAnalysis& wa, std::size_t cls, int bound = 2);

/// Haar measure on a closed invariant subgroup G of the product solenoid,
/// given dually by its annihilator in Q^m. The dual of G is Q^m / annihilator.
struct HomogeneousMeasure {
  QSubspace annihilator;

  static HomogeneousMeasure full(std::size_t m) { return {QSubspace(m)}; }
  static HomogeneousMeasure from_annihilator(QSubspace s) { return {std::move(s)}; }
};

/// The action induced on G. Throws DomainError when G is not invariant.
std::vector<QMatrix> induced_action(const std::vector<QMatrix>& generators, const HomogeneousMeasure& g);

EntropyReport homogeneous_entropy(const SolenoidAction& action, const HomogeneousMeasure& g, const IntVec& n,
                                  const WeightConfig& cfg = {});

struct ShapeRow {
  IntVec n;
  /// Index of the reference class.
  std::size_t cls = 0;
  LogCombination measure;
  LogCombination reference;
  Ratio value;
};

struct ShapeReport {
  std::vector<ShapeRow> rows;
  /// Hull of every row ratio.
  Interval kappa;
  std::optional<Rat> exact;
  bool constant = false;
  /// Reference classes of the measure that have no counterpart, or vice versa.
  std::vector<std::string> notes;
};

/// Per-class ratio h_G(n, W[chi]) / h_ref(n, W[chi]) over the sample grid.
/// `reference` is the irreducible action the classes are compared against.
ShapeReport shape_identity_report(const SolenoidAction& action, const HomogeneousMeasure& g,
                                  const SolenoidAction& reference, int bound = 3, const WeightConfig& cfg = {});

}  // namespace algdyn
