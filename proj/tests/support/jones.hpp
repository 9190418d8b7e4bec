// Independent oracle: Jones polynomial by a Kauffman bracket state sum taken
// directly on the Morse word, and the order 2 and 3 invariants read off its
// derivatives at t = 1. Shares nothing with the Gauss-diagram code.
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "legknot/word.hpp"
#include "walk.hpp"

namespace oracle {

using Laurent = std::map<int, long long>;  // exponent -> coefficient

inline Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

/// Kauffman bracket in the variable A.
inline Laurent bracket(const legknot::DiagramWord& d) {
  using legknot::EventKind;
  const auto& ev = d.events();
  const auto counts = counts_of(ev);
  const Walk w = walk(ev);
  // node id of strand p (1-based) in gap g
  std::vector<int> base(counts.size() + 1, 0);
  for (std::size_t g = 0; g < counts.size(); ++g) base[g + 1] = base[g] + counts[g];
  const auto node = [&](std::size_t g, int p) { return base[g] + p - 1; };

  std::vector<std::size_t> crossings;
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (legknot::is_crossing(ev[i].kind)) crossings.push_back(i);

  Laurent total;
  const std::size_t states = std::size_t{1} << crossings.size();
  for (std::size_t mask = 0; mask < states; ++mask) {
    Dsu u(base.back());
    int a_minus_b = 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const auto& e = ev[i];
      const int k = e.slot;
      const int n = counts[i];
      for (int p = 1; p <= n; ++p) {
        if (e.kind == EventKind::Birth) {
          u.join(node(i, p), node(i + 1, p < k ? p : p + 2));
        } else if (e.kind == EventKind::Death) {
          if (p != k && p != k + 1) u.join(node(i, p), node(i + 1, p < k ? p : p - 2));
        } else if (p != k && p != k + 1) {
          u.join(node(i, p), node(i + 1, p));
        }
      }
      if (e.kind == EventKind::Birth) {
        u.join(node(i + 1, k), node(i + 1, k + 1));
      } else if (e.kind == EventKind::Death) {
        u.join(node(i, k), node(i, k + 1));
      } else {
        const bool a_choice = (mask >> c++) & 1;
        // With the climbing line over, the A-smoothing turns both strands back.
        const bool turn_back = a_choice == climbing_over(w, i, legknot::crossing_sign(e.kind));
        if (turn_back) {
          u.join(node(i, k), node(i, k + 1));
          u.join(node(i + 1, k), node(i + 1, k + 1));
        } else {
          u.join(node(i, k), node(i + 1, k));
          u.join(node(i, k + 1), node(i + 1, k + 1));
        }
        a_minus_b += a_choice ? 1 : -1;
      }
    }
    int loops = 0;
    for (int x = 0; x < base.back(); ++x) loops += u.find(x) == x;
    Laurent term{{a_minus_b, 1}};
    const Laurent delta{{2, -1}, {-2, -1}};
    for (int l = 1; l < loops; ++l) term = mul(term, delta);
    for (const auto& [e, v] : term) total[e] += v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

/// Jones polynomial in t = A^-4 as exponent -> coefficient.
inline Laurent jones(const legknot::DiagramWord& d) {
  int w = 0;
  for (const auto& e : d.events()) w += legknot::crossing_sign(e.kind);
  // (-A^3)^(-w)
  Laurent norm{{-3 * w, (w % 2 == 0) ? 1 : -1}};
  Laurent out;
  for (const auto& [e, c] : mul(norm, bracket(d))) out[-e / 4] += c;
  return out;
}

/// k-th derivative at t = 1.
inline long long derivative_at_one(const Laurent& v, int k) {
  long long s = 0;
  for (const auto& [e, c] : v) {
    long long f = 1;
    for (int i = 0; i < k; ++i) f *= e - i;
    s += c * f;
  }
  return s;
}

/// Order-2 invariant: -V''(1)/6 (0 on the unknot, 1 on trefoils).
inline long long v2(const legknot::DiagramWord& d) {
  return -derivative_at_one(jones(d), 2) / 6;
}

/// Order-3 invariant: -V'''(1)/36 - V''(1)/12 (1 on the right trefoil).
inline long long v3(const legknot::DiagramWord& d) {
  const auto v = jones(d);
  return (-derivative_at_one(v, 3) - 3 * derivative_at_one(v, 2)) / 36;
}

}  // namespace oracle
