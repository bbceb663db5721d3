// Brute-force module theory over A_N: radical, head, socle, projective
// covers, syzygies and isomorphism testing, all by exact linear algebra on
// quiver representations. This is the oracle the closed formulas are
// checked against.
#ifndef EXTLINE_QUIVER_MODULES_HPP_
#define EXTLINE_QUIVER_MODULES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extline/line_algebra.hpp"
#include "extline/quiver_rep.hpp"

namespace extline {

/// Multiplicity of S_v at index v - 1.
using SimpleMultiset = std::vector<std::size_t>;

VertexSubspaces radical_spaces(const QuiverRep& m);
VertexSubspaces socle_spaces(const QuiverRep& m);

/// rad M as a representation. Throws std::invalid_argument if M violates the relations.
QuiverRep radical(const QuiverRep& m);
QuiverRep socle(const QuiverRep& m);

SimpleMultiset head(const QuiverRep& m);
SimpleMultiset socle_multiset(const QuiverRep& m);

/// Dimension vectors of rad^k M / rad^{k+1} M for k = 0, 1, ... until zero.
std::vector<SimpleMultiset> radical_layers(const QuiverRep& m);

struct CoverData {
  /// Vertex of each projective summand, in the order they appear in `cover`.
  std::vector<int> summands;
  QuiverRep cover;
  RepMorphism surjection;
  QuiverRep kernel;
  RepMorphism kernel_inclusion;
};

/// Minimal projective cover. The head section takes, at each vertex in
/// increasing order, the standard basis vectors that are pivot columns
/// when the radical is extended to the whole space.
CoverData projective_cover(const LineAlgebra& alg, const QuiverRep& m);

QuiverRep syzygy(const LineAlgebra& alg, const QuiverRep& m);
QuiverRep syzygy_power(const LineAlgebra& alg, const QuiverRep& m, int times);

QuiverRep simple_module(const LineAlgebra& alg, int i);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undetermined };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undetermined;
  std::optional<RepMorphism> witness;
  std::string reason;
};

/// Looks for an invertible intertwiner M -> N. Small hom spaces over F_p are
/// scanned exhaustively; otherwise up to 64 random combinations are drawn
/// from a generator seeded with `seed`. A failed search is reported as
/// NotIsomorphic only when head, socle or radical layers tell M and N apart.
IsoResult find_isomorphism(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed = 0);

bool is_isomorphic(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed = 0);

}  // namespace extline

#endif  // EXTLINE_QUIVER_MODULES_HPP_
