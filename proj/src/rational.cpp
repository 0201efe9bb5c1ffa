#include "tamed/rational.hpp"

namespace tamed {

Rat parse_rational(const std::string& text) {
  auto trim = [](std::string s) {
    const char* ws = " \t";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  if (s.empty()) throw TamedError("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(trim(s.substr(0, slash)));
    Int den(trim(s.substr(slash + 1)));
    if (den == 0) throw TamedError("zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const TamedError&) {
    throw;
  } catch (const std::exception&) {
    throw TamedError("not a rational: '" + text + "'");
  }
}

Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

}  // namespace tamed
