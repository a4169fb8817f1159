#include "ptorus/representation.hpp"

#include <cmath>
#include <map>

#include "ptorus/errors.hpp"
#include "ptorus/tolerances.hpp"

namespace ptorus {

Complex commutator_trace(const Representation& r) {
  const MoebiusMap comm = compose(
      compose(r.A, r.B), compose(r.A.inverse(), r.B.inverse()));
  return comm.trace();
}

TraceTriple trace_triple(const Representation& r) {
  return {r.A.trace(), r.B.trace(),
          compose(r.A.inverse(), r.B).trace()};
}

Complex markov_residual(const TraceTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z;
}

Representation twist_action(const Representation& r, long long k) {
  if (k == 0) return r;
  return {r.A, compose(power(r.A, k), r.B)};
}

bool jorgensen_filter(const Representation& r) {
  std::vector<RiemannPoint> fa, fb;
  try {
    fa = fixed_points(r.A);
    fb = fixed_points(r.B);
  } catch (const IdentityMap&) {
    throw ElementaryPair("jorgensen: a generator is the identity");
  }
  for (const auto& pa : fa)
    for (const auto& pb : fb)
      if (chordal_distance(pa, pb) < 1e-8)
        throw ElementaryPair("jorgensen: generators share a fixed point");
  const Complex ta = r.A.trace();
  const double lhs =
      std::abs(ta * ta - 4.0) + std::abs(commutator_trace(r) - 2.0);
  return lhs >= 1.0;
}

MoebiusMap evaluate(const FareyWord& w, const Representation& r) {
  MoebiusMap acc = MoebiusMap::identity();
  for (int l : w.letters) {
    switch (l) {
      case 1:
        acc = compose(acc, r.A);
        break;
      case -1:
        acc = compose(acc, r.A.inverse());
        break;
      case 2:
        acc = compose(acc, r.B);
        break;
      case -2:
        acc = compose(acc, r.B.inverse());
        break;
      default:
        throw std::invalid_argument("evaluate: bad letter");
    }
  }
  return acc;
}

namespace {

template <class T>
class SlopeTraces {
 public:
  SlopeTraces(T x, T y, T z) : x_(x), y_(y), z_(z) {}

  T get(const FareySlope& s) {
    if (s.q == 0) return x_;
    if (s.q == 1) return integer_chain(s.p);
    auto it = memo_.find({s.p, s.q});
    if (it != memo_.end()) return it->second;
    auto [u, v] = farey_parents(s);
    // The third vertex of the other triangle on the edge (u, v).
    FareySlope co = make_slope(u.p - v.p, u.q - v.q);
    T res = get(u) * get(v) - get(co);
    memo_.emplace(std::pair{s.p, s.q}, res);
    return res;
  }

 private:
  // Integer slopes obey tr_{n+1} = tr_{1/0} tr_n - tr_{n-1}.
  T integer_chain(long long n) {
    if (n == 0) return y_;
    if (n == 1) return z_;
    if (n > 1) {
      T prev = y_, cur = z_;
      for (long long i = 2; i <= n; ++i) {
        T nxt = x_ * cur - prev;
        prev = cur;
        cur = nxt;
      }
      return cur;
    }
    T next = z_, cur = y_;
    for (long long i = -1; i >= n; --i) {
      T prv = x_ * cur - next;
      next = cur;
      cur = prv;
    }
    return cur;
  }

  T x_, y_, z_;
  std::map<std::pair<long long, long long>, T> memo_;
};

}  // namespace

Complex trace_of_slope(const TraceTriple& base, const FareySlope& s) {
  if (std::abs(markov_residual(base)) > 1e-6)
    throw InconsistentBase("trace_of_slope: base triple off the Markov surface");
  SlopeTraces<Complex> tr(base.x, base.y, base.z);
  return tr.get(make_slope(s.p, s.q));
}

TraceDual trace_of_slope(const DualTriple& base, const FareySlope& s) {
  TraceTriple values{base.x.v, base.y.v, base.z.v};
  if (std::abs(markov_residual(values)) > 1e-6)
    throw InconsistentBase("trace_of_slope: base triple off the Markov surface");
  SlopeTraces<TraceDual> tr(base.x, base.y, base.z);
  return tr.get(make_slope(s.p, s.q));
}

}  // namespace ptorus
