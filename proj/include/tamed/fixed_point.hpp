#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tamed/characters.hpp"
#include "tamed/taming.hpp"

namespace tamed {

/// One equivariant summand of the module restricted to a fixed component:
/// torus weight, grading sign, fiber rank and (for dim-2 components) the
/// first Chern number of the summand.
struct ModuleSummand {
  Weight weight;
  int parity = +1;  // +1 even, -1 odd
  std::int64_t rank = 1;
  std::int64_t twist_degree = 0;
};

/// A normal line with its torus weight and (dim-2 components) first Chern
/// number of that line bundle over the component.
struct NormalLine {
  Weight weight;
  std::int64_t degree = 0;
};

/// One connected component of the fixed set. dim 0 and 2 have built-in local
/// index formulas; dim >= 4 components are table-driven.
struct FixedComponent {
  std::string label;
  int dim = 0;
  std::int64_t genus = 0;  // dim 2 only; carried for validation/reporting
  std::vector<NormalLine> normal_weights;
  std::vector<ModuleSummand> summands;
};

/// One (parity, rank, degree) term of the weight block E_alpha.
struct BlockPiece {
  int parity;
  std::int64_t rank;
  std::int64_t degree;
};

struct WeightBlock {
  Weight weight;
  std::vector<BlockPiece> pieces;
};

/// Externally supplied local indices for dim >= 4 components.
struct LocalIndexTable {
  std::map<Weight, Int> values;
};

/// Expands W|_F (x) S((N^{1,0})*) into weight blocks over the window:
/// every summand tensored with every symmetric monomial in the oriented
/// normal weights whose total weight lands in the window. Orienting a normal
/// line flips its degree together with its weight (conjugate bundle).
std::vector<WeightBlock> component_blocks(const FixedComponent& c,
                                          const TamingData& taming,
                                          const Window& window);

/// Local Atiyah-Singer index of one block: superdimension for points,
/// sum of parity*degree for surfaces (twisted-spin Riemann-Roch), table
/// lookup for dim >= 4.
Int local_index(const FixedComponent& c, const WeightBlock& block,
                const LocalIndexTable* table);

/// The fixed-point index: mult(alpha) = sum over components of the local
/// index of the alpha block. Window and support bound are attached.
Character topological_index(
    const std::vector<FixedComponent>& components, const TamingData& taming,
    const Window& window,
    const std::map<std::string, LocalIndexTable>& tables = {});

}  // namespace tamed
