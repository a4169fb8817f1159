#include "ptorus/sequence_spec.hpp"

#include <numeric>

namespace ptorus {

long long IntegerSequenceSpec::term(long long n) const {
  if (n >= 1 && static_cast<size_t>(n) <= prefix.size())
    return prefix[static_cast<size_t>(n - 1)];
  const long long m = static_cast<long long>(offsets.size());
  long long idx = n % m;
  if (idx < 0) idx += m;
  return quad * n * n + lin * n + offsets[static_cast<size_t>(idx)];
}

std::optional<long long> IntegerSequenceSpec::eventually_constant() const {
  if (quad != 0 || lin != 0) return std::nullopt;
  for (long long v : offsets)
    if (v != offsets.front()) return std::nullopt;
  return offsets.front();
}

IntegerSequenceSpec residual_spec(const IntegerSequenceSpec& k,
                                  const IntegerSequenceSpec& l, long long p,
                                  long long q) {
  IntegerSequenceSpec r;
  r.quad = (p + 1) * k.quad - p * l.quad;
  r.lin = (p + 1) * k.lin - p * l.lin;
  const long long mk = static_cast<long long>(k.offsets.size());
  const long long ml = static_cast<long long>(l.offsets.size());
  const long long period = std::lcm(mk, ml);
  r.offsets.assign(static_cast<size_t>(period), 0);
  for (long long j = 0; j < period; ++j)
    r.offsets[static_cast<size_t>(j)] =
        (p + 1) * k.offsets[static_cast<size_t>(j % mk)] -
        p * l.offsets[static_cast<size_t>(j % ml)] + q;
  return r;
}

namespace {

// Candidate p values killing a single tail coefficient:
// (p+1) ck - p cl = p (ck - cl) + ck = 0.
struct PCandidate {
  bool all = false;
  bool none = false;
  long long value = 0;
};

PCandidate p_candidate(long long ck, long long cl) {
  if (ck == 0 && cl == 0) return {.all = true};
  const long long d = ck - cl;
  if (d == 0) return {.none = true};
  if (ck % d != 0) return {.none = true};
  return {.value = -ck / d};
}

std::optional<long long> combine(const PCandidate& a, const PCandidate& b) {
  if (a.none || b.none) return std::nullopt;
  if (!a.all && !b.all) {
    if (a.value != b.value) return std::nullopt;
    return a.value;
  }
  if (!a.all) return a.value;
  if (!b.all) return b.value;
  return std::nullopt;  // both vacuous; caller scans
}

bool offsets_constant(const IntegerSequenceSpec& k,
                      const IntegerSequenceSpec& l, long long p,
                      long long* value) {
  const IntegerSequenceSpec r = residual_spec(k, l, p, 0);
  for (long long v : r.offsets)
    if (v != r.offsets.front()) return false;
  *value = r.offsets.front();
  return true;
}

}  // namespace

std::optional<long long> bounding_p(const IntegerSequenceSpec& k,
                                    const IntegerSequenceSpec& l) {
  const PCandidate cq = p_candidate(k.quad, l.quad);
  const PCandidate cl = p_candidate(k.lin, l.lin);
  if (cq.none || cl.none) return std::nullopt;
  if (!cq.all && !cl.all)
    return cq.value == cl.value ? std::optional<long long>(cq.value)
                                : std::nullopt;
  if (!cq.all) return cq.value;
  if (!cl.all) return cl.value;
  return 0;  // both sequences bounded; every p bounds the residual
}

std::optional<std::pair<long long, long long>> solve_pq(
    const IntegerSequenceSpec& k, const IntegerSequenceSpec& l) {
  const PCandidate cq = p_candidate(k.quad, l.quad);
  const PCandidate cl = p_candidate(k.lin, l.lin);
  if (cq.none || cl.none) return std::nullopt;

  long long value = 0;
  if (cq.all && cl.all) {
    // Both tails bounded; scan small p for offset constancy.
    for (long long ap = 0; ap <= 64; ++ap) {
      for (long long p : {ap, -ap}) {
        if (offsets_constant(k, l, p, &value))
          return std::make_pair(p, -value);
        if (ap == 0) break;
      }
    }
    return std::nullopt;
  }

  const auto p = combine(cq, cl);
  if (!p) return std::nullopt;
  if (!offsets_constant(k, l, *p, &value)) return std::nullopt;
  return std::make_pair(*p, -value);
}

}  // namespace ptorus
