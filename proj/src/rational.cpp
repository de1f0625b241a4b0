#include "cosetcat/rational.hpp"
#include "cosetcat/error.hpp"

#include <cctype>

namespace cosetcat {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) fail(ErrCode::InvalidInput, "empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) fail(ErrCode::InvalidInput, "malformed rational literal: " + s);
  }
  if (s.find('/') != std::string::npos) {
    auto pos = s.find('/');
    if (pos == 0 || pos + 1 == s.size() || s.find('/', pos + 1) != std::string::npos)
      fail(ErrCode::InvalidInput, "malformed rational literal: " + s);
    if (s.substr(pos + 1) == "0" || s.substr(pos + 1) == "-0")
      fail(ErrCode::InvalidInput, "zero denominator: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) fail(ErrCode::InvalidInput, "malformed rational literal: " + s);
  r.canonicalize();
  return r;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

} // namespace cosetcat
