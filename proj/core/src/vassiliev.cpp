#include "legknot/vassiliev.hpp"

#include "legknot/invariants.hpp"
#include "legknot/moves.hpp"

namespace legknot {

int Resolution::sign() const {
  int s = 1;
  for (const int c : choices) s *= c < 0 ? -1 : 1;
  return s;
}

std::vector<Resolution> all_resolutions(std::size_t double_points) {
  std::vector<Resolution> out;
  const std::size_t total = std::size_t{1} << double_points;
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Resolution r;
    for (std::size_t b = 0; b < double_points; ++b)
      r.choices.push_back((mask >> (double_points - 1 - b)) & 1 ? -1 : 1);
    out.push_back(std::move(r));
  }
  return out;
}

DiagramWord resolve(const SingularDiagramWord& sd, const Resolution& r) {
  if (r.choices.size() != static_cast<std::size_t>(sd.double_point_count()))
    throw ValidationError("resolution has " + std::to_string(r.choices.size()) +
                          " choices for " + std::to_string(sd.double_point_count()) +
                          " double points");
  std::vector<Event> ev = sd.events();
  std::size_t next = 0;
  for (Event& e : ev) {
    if (e.kind != EventKind::DoublePoint) continue;
    const int c = r.choices[next++];
    if (c != 1 && c != -1) throw ValidationError("resolution choices must be +1 or -1");
    e.kind = c > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
  }
  return DiagramWord(std::move(ev));
}

InvariantFunction invariant_function(const std::string& name) {
  if (name == "writhe") return {name, [](const DiagramWord& d) -> long long { return writhe(d); }};
  if (name == "rotation")
    return {name, [](const DiagramWord& d) -> long long { return whitney_rotation(d); }};
  if (name == "v2") return {name, [](const DiagramWord& d) -> long long { return v2(d); }};
  if (name == "v3") return {name, [](const DiagramWord& d) -> long long { return v3(d); }};
  throw Error("unknown invariant '" + name + "'");
}

std::vector<std::string> invariant_function_names() { return {"writhe", "rotation", "v2", "v3"}; }

long long alternating_sum(const InvariantFunction& f, const SingularDiagramWord& sd) {
  long long sum = 0;
  for (const Resolution& r : all_resolutions(static_cast<std::size_t>(sd.double_point_count())))
    sum += r.sign() * f.evaluate(resolve(sd, r));
  return sum;
}

OrderCheck order_at_most(const InvariantFunction& f, int n,
                         const std::vector<SingularDiagramWord>& corpus) {
  OrderCheck out;
  for (const auto& sd : corpus) {
    if (sd.double_point_count() != n + 1)
      throw ValidationError("corpus word '" + to_string(sd) + "' does not have " +
                            std::to_string(n + 1) + " double points");
    const long long s = alternating_sum(f, sd);
    if (s != 0) {
      out.holds = false;
      out.witness = sd;
      out.witness_sum = s;
      return out;
    }
  }
  return out;
}

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long psi_extend(const StabChain& chain, int n, int q) {
  if (n < 0) throw Error("order must be nonnegative");
  long long sum = 0;
  for (int i = 1; i <= n + 1; ++i) {
    const auto it = chain.values.find(q + 1 - i);
    if (it == chain.values.end())
      throw Error("chain has no value at q = " + std::to_string(q + 1 - i));
    sum += (i % 2 == 1 ? 1 : -1) * binomial(n + 1, i) * it->second;
  }
  return sum;
}

StabChain stab_chain(const InvariantFunction& f, const DiagramWord& d, int lo, int hi) {
  StabChain c;
  for (int q = lo; q <= hi; ++q) c.values[q] = f.evaluate(stabilize(d, {q, q}));
  return c;
}

bool psi_consistency_check(const InvariantFunction& f, int n, const DiagramWord& d, int q_lo,
                           int q_hi) {
  const StabChain c = stab_chain(f, d, q_lo - n, q_hi + 1);
  for (int q = q_lo; q <= q_hi; ++q)
    if (psi_extend(c, n, q) != c.values.at(q + 1)) return false;
  return true;
}

}  // namespace legknot
