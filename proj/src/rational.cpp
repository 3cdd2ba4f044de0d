#include "lieform/rational.hpp"

#include <cctype>

namespace lieform {

namespace {

bool digits_only(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  auto fail = [&]() -> Rat {
    throw ParseError("invalid rational literal: '" + text + "'");
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits_only(den, 0) || den == "0") return fail();
  }
  std::size_t from = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits_only(num, from)) return fail();
  Rat q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace lieform
