#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algdyn/action.hpp"
#include "algdyn/interval.hpp"
#include "algdyn/numberfield.hpp"
#include "algdyn/roots.hpp"

namespace algdyn {

struct WeightConfig {
  /// Working precision in bits; entry intervals are narrower than 2^-(bits-28).
  mpfr_prec_t bits = 128;
  /// Ceiling for precision escalation during sign certification.
  mpfr_prec_t max_bits = 4096;
  std::uint64_t seed = 0;
};

enum class PlaceKind { Real, Complex, PAdic };

struct Place {
  PlaceKind kind = PlaceKind::Real;
  /// Archimedean: index into the block's real or upper root list. p-adic: cluster id.
  std::size_t index = 0;
  Int prime;  // p-adic only

  std::string label() const;
};

/// Lyapunov weight n -> sum_j n_j log|zeta_j|_sigma of one place (or one
/// cluster of p-adic embeddings with equal valuation vectors).
struct WeightVector {
  std::size_t block = 0;
  Place place;
  unsigned delta = 1;
  /// p-adic: c_j = -v_p(zeta_j), so entry_j = c_j log p exactly.
  std::vector<Rat> exact;
  /// Entry intervals at the working precision (p-adic ones materialized).
  std::vector<Interval> entries;
  /// Certified zero functional.
  bool zero = false;

  bool is_padic() const { return place.kind == PlaceKind::PAdic; }
};

struct BadPlaceSet {
  std::vector<Int> primes;  // infinity is always included implicitly
};

/// Primes dividing a denominator of some A_j or A_j^{-1}.
BadPlaceSet bad_primes(const SolenoidAction& action);
/// Primes at which some zeta_j of the block fails to be a unit.
std::vector<Int> block_primes(const NumberFieldAction& nf);

std::vector<WeightVector> archimedean_weights(const NumberFieldAction& nf, const IsolatedRoots& roots);
std::vector<WeightVector> archimedean_weights(const NumberFieldAction& nf, const WeightConfig& cfg = {});

/// Exact clusters of embedding valuation vectors at p. Throws SeparationError
/// when no separating direction decodes consistently.
std::vector<WeightVector> padic_weights(const NumberFieldAction& nf, const Int& p, const WeightConfig& cfg = {});

enum class Certainty { Exact, Numeric };

/// Positive proportionality of two weight functionals.
enum class Prop { No, Exact, Numeric, Undecided };
Prop proportional(const WeightVector& a, const WeightVector& b);

struct CoarseClass {
  /// Indices into the pooled weight list, ascending.
  std::vector<std::size_t> members;
  Certainty certainty = Certainty::Exact;
  /// Some pair was merged without a certified proportionality decision.
  bool warning = false;
  unsigned dimension = 0;  // sum of delta

  std::size_t representative() const { return members.front(); }
};

struct ClassPartition {
  std::vector<CoarseClass> classes;
  std::vector<std::size_t> zero_weights;
};

/// Partition of the nonzero weights by positive proportionality.
ClassPartition coarse_classes(const std::vector<WeightVector>& weights);

struct BlockData {
  NumberFieldAction nf;
  IsolatedRoots roots;
  std::vector<Int> primes;
};

/// Flag, per-block number fields and places, pooled weights and classes.
struct WeightAnalysis {
  std::size_t d = 0;
  InvariantFlag flag;
  std::vector<BlockData> blocks;
  std::vector<WeightVector> weights;
  ClassPartition partition;
  WeightConfig config;

  /// Class containing a weight, or nullopt for zero weights.
  std::optional<std::size_t> class_of(std::size_t weight) const;
  /// Prefers a p-adic member, whose sign is exact.
  std::size_t sign_member(std::size_t cls) const;
};

WeightAnalysis analyze_weights(const std::vector<QMatrix>& generators, const WeightConfig& cfg = {});
WeightAnalysis analyze_weights(const SolenoidAction& action, const WeightConfig& cfg = {});

/// chi_w . n as an interval (p-adic: exact rational times log p).
Interval weight_value(const WeightAnalysis& wa, std::size_t weight, const IntVec& n, mpfr_prec_t bits);

/// Certified sign of chi_w . n; 0 only when the functional provably vanishes.
/// Throws CertificationError naming the place when undecidable at max_bits.
int weight_sign(const WeightAnalysis& wa, std::size_t weight, const IntVec& n);
int class_sign(const WeightAnalysis& wa, std::size_t cls, const IntVec& n);

enum class Tri { Yes, No, Unknown };
/// Is |sigma(a)| = 1 at the archimedean root `root` of f? Exact except for
/// the final isolation step, which reports Unknown when too coarse.
Tri unit_modulus(const RatPoly& f, const RatPoly& a, const RootBox& root);

struct HorosphericalReport {
  std::vector<std::size_t> stable;    // classes with chi.n < 0
  std::vector<std::size_t> neutral;   // chi.n = 0 exactly
  std::vector<std::size_t> unstable;  // chi.n > 0
  unsigned dimension = 0;             // sum of delta over stable classes
  /// Stable dimension per place label ("inf" or the prime).
  std::vector<std::pair<std::string, unsigned>> split;
};

HorosphericalReport stable_horospherical(const WeightAnalysis& wa, const IntVec& n);

enum class Exposure { Exposed, NotExposed, Inconclusive };

struct ExposedResult {
  std::size_t cls = 0;
  Exposure verdict = Exposure::Inconclusive;
  Certainty certainty = Certainty::Exact;
  /// n' with chi.n' = 0 and chi'.n' < 0 for the others, when exposed.
  std::optional<RatVec> witness;
};

/// Exposure of each class of `group` relative to the rest of `group`.
std::vector<ExposedResult> exposed_classes(const WeightAnalysis& wa, const std::vector<std::size_t>& group);

/// Sum over all places of delta log|zeta_n|_sigma; the interval must contain 0.
Interval check_product_formula(const NumberFieldAction& nf, const IntVec& n, const WeightConfig& cfg = {});

/// Interval enclosure of log p.
Interval log_prime(const Int& p, mpfr_prec_t bits);

}  // namespace algdyn
