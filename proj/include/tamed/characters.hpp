#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamed/rational.hpp"

namespace tamed {

/// A weight of the torus T^r: a lattice point in Z^r. Ordered
/// lexicographically (std::vector's <), which is also the canonical
/// serialization order.
using Weight = std::vector<std::int64_t>;

/// Pairing <w, v> of a weight with a rational vector of the same length.
Rat pairing(const Weight& w, const std::vector<Rat>& v);

/// Slab { alpha : lo <= <alpha,v> <= hi } in which a Character's entries are
/// known to be complete. Either bound may be absent (unbounded on that side).
/// A window with no direction acts as "complete everywhere".
struct Window {
  std::vector<Rat> direction;
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  static Window all() { return Window{}; }
  static Window slab(std::vector<Rat> v, Rat lo_, Rat hi_);
  /// Complete on [lo, +inf) in the <.,v> pairing.
  static Window above(std::vector<Rat> v, Rat lo_);

  bool is_all() const { return !lo && !hi; }
  bool contains(const Rat& pair_value) const;
  /// True if this window covers the whole of `other`.
  bool covers(const Window& other) const;
};

/// Intersection of completeness windows. Directions must agree unless one
/// side is unconstrained.
Window intersect(const Window& a, const Window& b);

/// Finitely-windowed virtual character of T^r: a finite map Weight -> Z with
/// no zero entries, plus the window on which the entry set is complete and an
/// optional half-space support bound C (every entry has <alpha,v> <= C).
class Character {
 public:
  explicit Character(int rank, Window window = Window::all())
      : rank_(rank), window_(std::move(window)) {}

  int rank() const { return rank_; }
  const Window& window() const { return window_; }
  const std::map<Weight, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  const std::optional<Rat>& support_bound() const { return support_bound_; }
  /// Attaches the bound and checks it against existing entries.
  void set_support_bound(Rat c);

  /// Adds m to the multiplicity at w, dropping the entry if it cancels.
  void add(const Weight& w, const Int& m);
  Int multiplicity(const Weight& w) const;

  /// One line per entry, "(c1,...,cr) mult", sorted lexicographically.
  std::string render() const;

 private:
  int rank_;
  std::map<Weight, Int> entries_;
  Window window_;
  std::optional<Rat> support_bound_;
};

/// Pointwise sum. Result window is the intersection of the input windows.
Character char_add(const Character& a, const Character& b);

/// Convolution of a finite character with a windowed one, truncated to
/// out_window. Errors if b's window cannot guarantee completeness of the
/// requested output window.
Character char_tensor(const Character& a, const Character& b,
                      const Window& out_window);

/// Character of the symmetric algebra on the duals of the given oriented
/// weights (every <n_j,v> > 0), complete on [lo, +inf). Errors on an
/// orientation violation.
Character sym_series(const std::vector<Weight>& oriented_weights,
                     const std::vector<Rat>& v, const Rat& lo);

/// Flips signs so every output weight pairs strictly positively with v;
/// preserves order. A weight orthogonal to v is an error (the linearized
/// taming vector field would vanish off the fixed set).
std::vector<Weight> orient_normal_weights(const std::vector<Weight>& raw,
                                          const std::vector<Rat>& v);

/// Equality of a and b on the intersection of their windows (or on `where`
/// if given, which must be covered by both). Asking about weights outside
/// the common window is an error, never a silent pass.
bool equal_on_common_window(const Character& a, const Character& b,
                            const std::optional<Window>& where = std::nullopt);

}  // namespace tamed
