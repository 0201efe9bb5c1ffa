#include "tamed/fixed_point.hpp"

#include <algorithm>

namespace tamed {

namespace {

struct OrientedLine {
  Weight weight;
  std::int64_t degree;
  Rat drop;  // <weight, v> > 0
};

// Enumerates symmetric monomials in the duals of the oriented lines whose
// weight shift keeps the pairing drop within [need_lo, need_hi] (both <= 0).
// Each power of line j shifts the weight by -n_j, the pairing by -drop_j and
// the degree by -degree_j. Emits (weight shift, degree shift) per monomial,
// graded by total drop within each branch, then lexicographic in k.
template <typename Fn>
void enumerate_monomials(const std::vector<OrientedLine>& lines, int rank,
                         const Rat& need_lo, const Rat& need_hi, Fn&& emit) {
  Weight shift(rank, 0);
  auto go = [&](auto&& self, std::size_t j, Weight cur, Rat drop,
                std::int64_t degree) -> void {
    if (j == lines.size()) {
      if (drop <= need_hi) emit(cur, degree);
      return;
    }
    while (drop >= need_lo) {
      self(self, j + 1, cur, drop, degree);
      for (std::size_t i = 0; i < cur.size(); ++i)
        cur[i] -= lines[j].weight[i];
      drop -= lines[j].drop;
      degree -= lines[j].degree;
    }
  };
  go(go, 0, shift, Rat(0), 0);
}

}  // namespace

std::vector<WeightBlock> component_blocks(const FixedComponent& c,
                                          const TamingData& taming,
                                          const Window& window) {
  taming.validate();
  if (!window.lo)
    throw TamedError("component_blocks: window must be bounded below");
  const auto& v = taming.v;

  std::vector<Weight> raw;
  raw.reserve(c.normal_weights.size());
  for (const auto& nl : c.normal_weights) raw.push_back(nl.weight);
  std::vector<Weight> oriented = orient_normal_weights(raw, v);

  std::vector<OrientedLine> lines(oriented.size());
  for (std::size_t j = 0; j < oriented.size(); ++j) {
    lines[j].weight = oriented[j];
    // Flipping the complex structure on a line conjugates the bundle: the
    // degree flips sign with the weight.
    bool flipped = oriented[j] != raw[j];
    lines[j].degree =
        flipped ? -c.normal_weights[j].degree : c.normal_weights[j].degree;
    lines[j].drop = pairing(oriented[j], v);
  }

  std::map<Weight, std::vector<BlockPiece>> blocks;
  for (const auto& s : c.summands) {
    if (s.rank < 1) throw TamedError("module summand rank must be positive");
    if (s.parity != 1 && s.parity != -1)
      throw TamedError("module summand parity must be +1 or -1");
    Rat base = pairing(s.weight, v);
    // Need base + drop in [lo, hi] where the drop ranges over (-inf, 0].
    Rat need_lo = *window.lo - base;
    Rat need_hi = window.hi ? *window.hi - base : Rat(0);
    if (need_hi > 0) need_hi = 0;
    if (need_lo > need_hi) continue;
    enumerate_monomials(
        lines, taming.rank, need_lo, need_hi,
        [&](const Weight& shift, std::int64_t deg) {
          Weight alpha(s.weight.size());
          for (std::size_t i = 0; i < alpha.size(); ++i)
            alpha[i] = s.weight[i] + shift[i];
          blocks[alpha].push_back(
              BlockPiece{s.parity, s.rank, s.twist_degree + deg});
        });
  }

  std::vector<WeightBlock> out;
  out.reserve(blocks.size());
  for (auto& [w, pieces] : blocks) out.push_back(WeightBlock{w, std::move(pieces)});
  return out;
}

Int local_index(const FixedComponent& c, const WeightBlock& block,
                const LocalIndexTable* table) {
  if (c.dim == 0) {
    Int acc = 0;
    for (const auto& p : block.pieces) acc += Int(p.parity) * p.rank;
    return acc;
  }
  if (c.dim == 2) {
    // Twisted-spin Riemann-Roch on a closed surface: the index is the degree
    // of the twist; the rank term integrates to zero.
    Int acc = 0;
    for (const auto& p : block.pieces) acc += Int(p.parity) * p.degree;
    return acc;
  }
  if (table == nullptr)
    throw TamedError("component '" + c.label +
                     "': dim >= 4 requires a local index table");
  auto it = table->values.find(block.weight);
  if (it == table->values.end()) {
    std::string ws = "(";
    for (std::size_t i = 0; i < block.weight.size(); ++i) {
      if (i) ws += ',';
      ws += std::to_string(block.weight[i]);
    }
    ws += ')';
    throw TamedError("component '" + c.label + "': table has no entry for " + ws);
  }
  return it->second;
}

Character topological_index(const std::vector<FixedComponent>& components,
                            const TamingData& taming, const Window& window,
                            const std::map<std::string, LocalIndexTable>& tables) {
  taming.validate();
  Character result(taming.rank, window);
  for (const auto& c : components) {
    if (c.dim < 0 || c.dim % 2 != 0)
      throw TamedError("component '" + c.label + "': dim must be even and >= 0");
    const LocalIndexTable* table = nullptr;
    if (auto it = tables.find(c.label); it != tables.end()) table = &it->second;
    for (const auto& block : component_blocks(c, taming, window))
      result.add(block.weight, local_index(c, block, table));
  }
  if (!components.empty()) {
    bool any_summand = false;
    for (const auto& c : components) any_summand |= !c.summands.empty();
    if (any_summand) result.set_support_bound(support_bound(components, taming));
  }
  return result;
}

}  // namespace tamed
