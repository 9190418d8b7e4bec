// Resolutions of singular words, alternating sums and the binomial
// extension of an invariant along symmetric stabilizations.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legknot/word.hpp"

namespace legknot {

/// One choice per double point, in word order: +1 gives CrossPos, -1 CrossNeg.
struct Resolution {
  std::vector<int> choices;

  /// +1 iff the number of -1 choices is even.
  int sign() const;
};

/// All 2^n resolutions of n double points, in binary order with +1 first.
std::vector<Resolution> all_resolutions(std::size_t double_points);

DiagramWord resolve(const SingularDiagramWord& sd, const Resolution& r);

struct InvariantFunction {
  std::string name;
  std::function<long long(const DiagramWord&)> evaluate;
};

/// The invariants this library implements: writhe, rotation, v2, v3.
InvariantFunction invariant_function(const std::string& name);
std::vector<std::string> invariant_function_names();

long long alternating_sum(const InvariantFunction& f, const SingularDiagramWord& sd);

struct OrderCheck {
  bool holds = true;
  std::optional<SingularDiagramWord> witness;
  long long witness_sum = 0;
};

/// Every corpus word must carry exactly n + 1 double points.
OrderCheck order_at_most(const InvariantFunction& f, int n,
                         const std::vector<SingularDiagramWord>& corpus);

/// Values of an invariant on K^{q,q} for a fixed base K.
struct StabChain {
  std::map<int, long long> values;
};

/// Value at q + 1 from the values at q, q - 1, ..., q - n:
/// sum over i = 1..n+1 of (-1)^(i+1) C(n+1, i) chain[q+1-i].
long long psi_extend(const StabChain& chain, int n, int q);

/// Fills chain[q] = f(stabilize(d, (q, q))) for q in [lo, hi].
StabChain stab_chain(const InvariantFunction& f, const DiagramWord& d, int lo, int hi);

/// For each q in [q_lo, q_hi], the extension from direct values at q - n..q
/// equals the direct value at q + 1.
bool psi_consistency_check(const InvariantFunction& f, int n, const DiagramWord& d, int q_lo,
                           int q_hi);

}  // namespace legknot
