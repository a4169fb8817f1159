#include "ptorus/farey.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "ptorus/errors.hpp"

namespace ptorus {

FareySlope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw InvalidSlope("slope 0/0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) return {1, 0};
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return {p, q};
}

bool is_infinity(const FareySlope& s) { return s.q == 0; }

bool slope_less(const FareySlope& a, const FareySlope& b) {
  if (is_infinity(a)) return false;
  if (is_infinity(b)) return true;
  // a.p/a.q < b.p/b.q with positive denominators
  return a.p * b.q < b.p * a.q;
}

std::string to_string(const FareySlope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

FareySlope parse_slope(const std::string& text) {
  try {
    auto pos = text.find('/');
    if (pos == std::string::npos)
      return make_slope(std::stoll(text), 1);
    long long p = std::stoll(text.substr(0, pos));
    long long q = std::stoll(text.substr(pos + 1));
    return make_slope(p, q);
  } catch (const InvalidSlope&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidSlope("cannot parse slope '" + text + "'");
  }
}

long long mod_inverse(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  long long t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    long long qq = r / new_r;
    t = std::exchange(new_t, t - qq * new_t);
    r = std::exchange(new_r, r - qq * new_r);
  }
  if (r != 1) throw InvalidSlope("mod_inverse: arguments not coprime");
  if (t < 0) t += m;
  return t;
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::pair<FareySlope, FareySlope> farey_parents(const FareySlope& s) {
  if (s.q < 2)
    throw InvalidSlope("farey_parents: defined for q >= 2, got " +
                       to_string(s));
  // b = p^{-1} mod q in (0, q); then p b - q a = 1 with a = (p b - 1)/q.
  long long b = mod_inverse(s.p, s.q);
  long long a = (s.p * b - 1) / s.q;
  FareySlope u{a, b};
  FareySlope v{s.p - a, s.q - b};
  return {u, v};
}

FareyWord free_reduce(FareyWord w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

FareyWord cyclic_reduce(FareyWord w) {
  w = free_reduce(std::move(w));
  while (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) {
    w.letters.erase(w.letters.begin());
    w.letters.pop_back();
  }
  return w;
}

bool is_cyclically_reduced(const FareyWord& w) {
  FareyWord r = cyclic_reduce(w);
  return r == w;
}

std::pair<long long, long long> abelianization(const FareyWord& w) {
  long long na = 0, nb = 0;
  for (int l : w.letters) {
    if (l == 1) ++na;
    if (l == -1) --na;
    if (l == 2) ++nb;
    if (l == -2) --nb;
  }
  return {na, nb};
}

namespace {

// Word for p/q in [0, 1], built over the Stern-Brocot tree between the
// base words of 0/1 and 1/1.
FareyWord unit_word(const FareySlope& s) {
  if (s.p == 0 && s.q == 1) return {{2}};
  if (s.p == 1 && s.q == 1) return {{-1, 2}};
  auto [u, v] = farey_parents(s);
  if (slope_less(v, u)) std::swap(u, v);
  FareyWord left = unit_word(u);
  FareyWord right = unit_word(v);
  left.letters.insert(left.letters.end(), right.letters.begin(),
                      right.letters.end());
  return left;
}

// One application of the twist substitution (or its inverse):
// forward: beta -> alpha^{-1} beta; backward: beta -> alpha beta.
FareyWord twist_substitute(const FareyWord& w, bool forward) {
  FareyWord out;
  out.letters.reserve(w.letters.size() * 2);
  for (int l : w.letters) {
    switch (l) {
      case 2:
        out.letters.push_back(forward ? -1 : 1);
        out.letters.push_back(2);
        break;
      case -2:
        out.letters.push_back(-2);
        out.letters.push_back(forward ? 1 : -1);
        break;
      default:
        out.letters.push_back(l);
    }
  }
  return free_reduce(std::move(out));
}

}  // namespace

FareyWord farey_word(const FareySlope& s) {
  FareySlope c = make_slope(s.p, s.q);
  if (is_infinity(c)) return {{1}};
  long long n = floor_div(c.p, c.q);
  FareySlope s0{c.p - n * c.q, c.q};
  FareyWord w = unit_word(s0);
  for (long long i = 0; i < (n > 0 ? n : -n); ++i)
    w = twist_substitute(w, n > 0);
  return cyclic_reduce(std::move(w));
}

}  // namespace ptorus
