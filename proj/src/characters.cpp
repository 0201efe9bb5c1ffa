#include "tamed/characters.hpp"

#include <algorithm>
#include <sstream>

namespace tamed {

Rat pairing(const Weight& w, const std::vector<Rat>& v) {
  if (w.size() != v.size())
    throw TamedError("pairing: weight length " + std::to_string(w.size()) +
                     " vs direction length " + std::to_string(v.size()));
  Rat acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += Rat(w[i]) * v[i];
  return acc;
}

Window Window::slab(std::vector<Rat> v, Rat lo_, Rat hi_) {
  if (lo_ > hi_) throw TamedError("window: lo > hi");
  Window w;
  w.direction = std::move(v);
  w.lo = std::move(lo_);
  w.hi = std::move(hi_);
  return w;
}

Window Window::above(std::vector<Rat> v, Rat lo_) {
  Window w;
  w.direction = std::move(v);
  w.lo = std::move(lo_);
  return w;
}

bool Window::contains(const Rat& pv) const {
  if (lo && pv < *lo) return false;
  if (hi && pv > *hi) return false;
  return true;
}

bool Window::covers(const Window& other) const {
  if (is_all()) return true;
  if (other.is_all()) return false;
  if (direction != other.direction)
    throw TamedError("window: mismatched directions");
  if (lo && (!other.lo || *other.lo < *lo)) return false;
  if (hi && (!other.hi || *other.hi > *hi)) return false;
  return true;
}

Window intersect(const Window& a, const Window& b) {
  if (a.is_all()) return b;
  if (b.is_all()) return a;
  if (a.direction != b.direction)
    throw TamedError("window intersection: mismatched directions");
  Window r;
  r.direction = a.direction;
  r.lo = a.lo;
  if (b.lo && (!r.lo || *b.lo > *r.lo)) r.lo = b.lo;
  r.hi = a.hi;
  if (b.hi && (!r.hi || *b.hi < *r.hi)) r.hi = b.hi;
  if (r.lo && r.hi && *r.lo > *r.hi)
    throw TamedError("window intersection is empty");
  return r;
}

void Character::set_support_bound(Rat c) {
  if (!window_.direction.empty()) {
    for (const auto& [w, m] : entries_) {
      if (pairing(w, window_.direction) > c)
        throw TamedError("support bound violated by existing entry");
    }
  }
  support_bound_ = std::move(c);
}

void Character::add(const Weight& w, const Int& m) {
  if (static_cast<int>(w.size()) != rank_)
    throw TamedError("character: weight rank mismatch");
  if (m == 0) return;
  auto it = entries_.find(w);
  if (it == entries_.end()) {
    entries_.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

Int Character::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Int(0) : it->second;
}

std::string Character::render() const {
  std::ostringstream out;
  for (const auto& [w, m] : entries_) {
    out << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ',';
      out << w[i];
    }
    out << ") " << m.str() << '\n';
  }
  return out.str();
}

Character char_add(const Character& a, const Character& b) {
  if (a.rank() != b.rank())
    throw TamedError("char_add: rank mismatch (" + std::to_string(a.rank()) +
                     " vs " + std::to_string(b.rank()) + ")");
  Character r(a.rank(), intersect(a.window(), b.window()));
  for (const auto& [w, m] : a.entries()) r.add(w, m);
  for (const auto& [w, m] : b.entries()) r.add(w, m);
  return r;
}

Character char_tensor(const Character& a, const Character& b,
                      const Window& out_window) {
  if (a.rank() != b.rank()) throw TamedError("char_tensor: rank mismatch");
  if (out_window.direction.empty() || !out_window.lo || !out_window.hi)
    throw TamedError("char_tensor: output window must be a bounded slab");
  const auto& v = out_window.direction;

  // Completeness: for gamma in the output window, beta = gamma - alpha ranges
  // over [lo - max <alpha,v>, hi - min <alpha,v>]; b must be complete there.
  if (!a.entries().empty()) {
    std::optional<Rat> amin, amax;
    for (const auto& [w, m] : a.entries()) {
      Rat p = pairing(w, v);
      if (!amin || p < *amin) amin = p;
      if (!amax || p > *amax) amax = p;
    }
    Window needed = Window::slab(v, *out_window.lo - *amax, *out_window.hi - *amin);
    if (!b.window().covers(needed))
      throw TamedError(
          "char_tensor: factor window too narrow for requested output window");
  }

  Character r(a.rank(), out_window);
  for (const auto& [wa, ma] : a.entries()) {
    for (const auto& [wb, mb] : b.entries()) {
      Weight g(wa.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = wa[i] + wb[i];
      if (out_window.contains(pairing(g, v))) r.add(g, ma * mb);
    }
  }
  return r;
}

Character sym_series(const std::vector<Weight>& oriented_weights,
                     const std::vector<Rat>& v, const Rat& lo) {
  Character r(static_cast<int>(v.size()), Window::above(v, lo));
  Weight zero(v.size(), 0);
  r.add(zero, 1);
  for (const auto& n : oriented_weights) {
    Rat drop = pairing(n, v);
    if (drop <= 0)
      throw TamedError("sym_series: weight does not pair positively with v");
    // Multiply by the geometric series 1 + t^{-n} + t^{-2n} + ...; each term
    // lowers <.,v> by `drop`, so truncation at lo is exact on [lo, +inf).
    Character next(r.rank(), r.window());
    for (const auto& [w, m] : r.entries()) {
      Rat p = pairing(w, v);
      Weight cur = w;
      while (p >= lo) {
        next.add(cur, m);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= n[i];
        p -= drop;
      }
    }
    r = std::move(next);
  }
  return r;
}

std::vector<Weight> orient_normal_weights(const std::vector<Weight>& raw,
                                          const std::vector<Rat>& v) {
  std::vector<Weight> out;
  out.reserve(raw.size());
  for (const auto& w : raw) {
    Rat p = pairing(w, v);
    if (p == 0) {
      std::ostringstream msg;
      msg << "normal weight (";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) msg << ',';
        msg << w[i];
      }
      msg << ") is orthogonal to the taming vector";
      throw TamedError(msg.str());
    }
    if (p > 0) {
      out.push_back(w);
    } else {
      Weight f(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) f[i] = -w[i];
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool equal_on_common_window(const Character& a, const Character& b,
                            const std::optional<Window>& where) {
  if (a.rank() != b.rank()) throw TamedError("equality: rank mismatch");
  Window common = intersect(a.window(), b.window());
  if (where) {
    if (!common.covers(*where))
      throw TamedError("equality asserted outside the common window");
    common = *where;
  }
  auto in = [&](const Weight& w) {
    return common.is_all() || common.contains(pairing(w, common.direction));
  };
  for (const auto& [w, m] : a.entries())
    if (in(w) && b.multiplicity(w) != m) return false;
  for (const auto& [w, m] : b.entries())
    if (in(w) && a.multiplicity(w) != m) return false;
  return true;
}

}  // namespace tamed
