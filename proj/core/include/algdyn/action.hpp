#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algdyn/subspace.hpp"

namespace algdyn {

/// Z^d-action on Q^m by commuting invertible rational matrices (the dual
/// of a solenoid automorphism action).
struct SolenoidAction {
  std::size_t d = 0;
  std::size_t m = 0;
  std::vector<QMatrix> generators;
  std::string label;

  static SolenoidAction make(std::vector<QMatrix> generators, std::string label = {});

  /// A_1^{n_1} ... A_d^{n_d}.
  QMatrix power(const IntVec& n) const;
};

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> messages;
};

/// Checks shapes, invertibility and pairwise commutation. Never throws.
Diagnostics validate(const SolenoidAction& action);

/// Smallest subalgebra of M_m(Q) containing the identity and the generators,
/// as an echelonized basis.
std::vector<QMatrix> generated_algebra(const std::vector<QMatrix>& generators);

struct IrreducibilityResult {
  bool irreducible = false;
  /// Proper nonzero invariant subspace when reducible.
  std::optional<QSubspace> witness;
};

IrreducibilityResult irreducibility(const std::vector<QMatrix>& generators, std::uint64_t seed = 0);
bool is_irreducible(const SolenoidAction& action, std::uint64_t seed = 0);

/// Restriction to an invariant subspace, in its echelon basis.
std::vector<QMatrix> restrict_all(const std::vector<QMatrix>& generators, const QSubspace& v);
/// Induced action on Q^m / V, in the basis of free-column standard vectors.
std::vector<QMatrix> quotient_all(const std::vector<QMatrix>& generators, const QSubspace& v);

/// A minimal nonzero invariant subspace.
QSubspace minimal_invariant(const std::vector<QMatrix>& generators, std::uint64_t seed = 0);

struct InvariantFlag {
  /// {0} = V_0 < V_1 < ... < V_r = Q^m.
  std::vector<QSubspace> subspaces;
  /// Columns form an adapted basis: the first dim V_i columns span V_i.
  QMatrix basis;
  /// blocks[i][j]: generator j acting on V_{i+1}/V_i in the basis given by
  /// the corresponding columns of `basis`.
  std::vector<std::vector<QMatrix>> blocks;

  std::size_t length() const { return blocks.size(); }
  /// Column offset of block i inside `basis`.
  std::size_t offset(std::size_t i) const { return subspaces[i].dim(); }
};

/// Composition series of the action with A-irreducible quotients; verified exactly.
InvariantFlag invariant_flag(const std::vector<QMatrix>& generators, std::uint64_t seed = 0);
InvariantFlag invariant_flag(const SolenoidAction& action, std::uint64_t seed = 0);

struct SocleComponent {
  /// Isotypic component of the socle.
  QSubspace isotypic;
  /// One minimal invariant subspace inside it.
  QSubspace representative;
  /// Generators restricted to `representative` in its echelon basis.
  std::vector<QMatrix> block;
  std::size_t multiplicity = 1;
};

/// Socle (sum of all minimal invariant subspaces) split into isotypic components.
std::vector<SocleComponent> socle_irreducibles(const std::vector<QMatrix>& generators, std::uint64_t seed = 0);
std::vector<SocleComponent> socle_irreducibles(const SolenoidAction& action, std::uint64_t seed = 0);

/// Deterministic small-integer generator used by every retry ladder.
class SeededInts {
 public:
  explicit SeededInts(std::uint64_t seed);
  /// Uniform-ish integer in [-bound, bound].
  long next(long bound);
  std::uint64_t raw();

 private:
  std::mt19937_64 engine_;
};

}  // namespace algdyn
