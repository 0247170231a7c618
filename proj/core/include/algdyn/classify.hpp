#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algdyn/weights.hpp"

namespace algdyn {

struct ClassifyConfig {
  std::uint64_t seed = 0;
  mpfr_prec_t bits = 128;
  /// Largest n used in M = lcm{n : phi(n) <= D} and largest allowed index of Lambda.
  unsigned long index_bound = 120;
  /// Cap on the Galois-closure degree bound D = min(k!, cap).
  unsigned long degree_cap = 10080;
};

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct TotalIrreducibility {
  bool irreducible = false;
  bool totally_irreducible = false;
  /// Galois-closure degree bound and M = lcm{n <= index_bound : phi(n) <= D}.
  unsigned long degree_bound = 1;
  Int M = 1;
  /// Some n beyond index_bound also has phi(n) <= D.
  bool truncated = false;
  /// When not totally irreducible: Lambda = diag(orders) Z^d on which the
  /// restriction is reducible, and an invariant subspace of that restriction.
  std::optional<IntVec> sublattice;
  std::optional<QSubspace> witness;
};

TotalIrreducibility total_irreducibility(const SolenoidAction& action, const ClassifyConfig& cfg = {});

/// Integer vectors a for which A^a has finite order.
struct RelationLattice {
  std::vector<IntVec> basis;
  /// Order of A^a for each basis vector.
  std::vector<unsigned long> orders;
  /// d minus the rank of the lattice.
  std::size_t rank = 0;
};

struct VirtualCyclicity {
  Verdict verdict = Verdict::Unknown;
  RelationLattice relations;
  /// Candidate that could be neither certified nor refuted.
  std::optional<IntVec> offending;
};

VirtualCyclicity virtually_cyclic(const std::vector<QMatrix>& generators, const ClassifyConfig& cfg = {});
VirtualCyclicity virtually_cyclic(const SolenoidAction& action, const ClassifyConfig& cfg = {});

struct FactorCheck {
  Verdict verdict = Verdict::Unknown;
  /// Socle irreducible that is virtually cyclic.
  std::optional<QSubspace> witness;
};

FactorCheck has_virtually_cyclic_factor(const SolenoidAction& action, const ClassifyConfig& cfg = {});

/// An embedding of fields realized inside one compositum component, with
/// zeta'_j / phi(zeta_j) of order orders[j].
struct EmbeddingWitness {
  std::size_t block1 = 0, block2 = 0;  // socle component indices
  RatPoly field;                       // component Q[t]/(F)
  RatPoly theta1, theta2;
  std::vector<unsigned long> orders;
};

struct ComparisonReport {
  Verdict disjoint = Verdict::Unknown;
  /// Lambda = diag(lattice) Z^d.
  std::optional<IntVec> lattice;
  std::optional<EmbeddingWitness> embedding;
  /// Both actions irreducible of equal dimension and matched.
  bool weakly_isomorphic = false;
  /// Annihilator of the joining subgroup inside Q^{m1+m2}.
  std::optional<QSubspace> joining;
  /// Restricted product generators the joining is invariant under.
  std::vector<QMatrix> restricted_product;
  bool hypothesis_holds = true;
  std::vector<std::string> notes;
};

ComparisonReport compare(const SolenoidAction& a1, const SolenoidAction& a2, const ClassifyConfig& cfg = {});

/// Re-checks a joining: invariance and trivial intersection with both factors' duals.
bool verify_joining(const ComparisonReport& r, std::size_t m1, std::size_t m2);

struct TorsionGroup {
  /// Finite-order elements of the commutant, identity first.
  std::vector<QMatrix> elements;
  std::vector<unsigned long> orders;
  bool complete = false;
  std::string note;
};

TorsionGroup commutant_torsion(const SolenoidAction& action, const ClassifyConfig& cfg = {});

/// Simplest rational in [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace algdyn
