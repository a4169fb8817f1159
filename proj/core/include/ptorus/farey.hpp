#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ptorus {

/// A slope p/q in lowest terms labelling a simple closed curve on the
/// once-punctured torus. Canonical form: q > 0, or (p, q) = (1, 0) for the
/// slope infinity.
struct FareySlope {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const FareySlope&, const FareySlope&) = default;
};

/// Canonicalizes (reduces by gcd, forces q >= 0, collapses -1/0 to 1/0).
/// Throws InvalidSlope on 0/0.
FareySlope make_slope(long long p, long long q);

inline FareySlope slope_infinity() { return {1, 0}; }

bool is_infinity(const FareySlope& s);

/// Value order with 1/0 treated as +infinity.
bool slope_less(const FareySlope& a, const FareySlope& b);

std::string to_string(const FareySlope& s);

/// Parses "p/q" or a bare integer "n". Throws InvalidSlope.
FareySlope parse_slope(const std::string& text);

/// The two Farey parents of p/q (the neighbours whose mediant it is),
/// defined for q >= 2. Both parents have denominator in (0, q) and the
/// pair spans a Farey edge (|det| = 1). Throws InvalidSlope for q <= 1.
std::pair<FareySlope, FareySlope> farey_parents(const FareySlope& s);

/// a^{-1} mod m for m >= 1, gcd(a, m) = 1; result in [0, m).
long long mod_inverse(long long a, long long m);

/// Floor division, exact for negative numerators.
long long floor_div(long long a, long long b);

/// A reduced word in the generators: letters +1 = alpha, -1 = alpha^{-1},
/// +2 = beta, -2 = beta^{-1}. Stored freely and cyclically reduced.
struct FareyWord {
  std::vector<int> letters;

  friend bool operator==(const FareyWord&, const FareyWord&) = default;
};

FareyWord free_reduce(FareyWord w);
FareyWord cyclic_reduce(FareyWord w);
bool is_cyclically_reduced(const FareyWord& w);

/// Exponent sums (alpha count, beta count) of the word.
std::pair<long long, long long> abelianization(const FareyWord& w);

/// The word W_s whose curve class has slope s. Convention: W_{1/0} = alpha,
/// W_{0/1} = beta, W_{1/1} = alpha^{-1} beta; mediants inside [0,1]
/// concatenate left parent then right parent; slopes outside [0,1) are
/// reached by the twist substitution beta -> alpha^{-1} beta (and its
/// inverse). The abelianization of W_{p/q} is +-(-p, q), matching the
/// homology dictionary for slopes. The choice among the standard
/// conventions is validated only through that dictionary and the trace
/// recursion; callers must not rely on the exact spelling.
FareyWord farey_word(const FareySlope& s);

}  // namespace ptorus
