#include "framed/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace framed {

std::string scalar_to_string(const Scalar& s) { return s.str(); }

namespace {

bool parse_int(const std::string& text, std::size_t& pos,
               boost::multiprecision::cpp_int& out) {
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start) return false;
  out = boost::multiprecision::cpp_int(text.substr(start, pos - start));
  if (neg) out = -out;
  return true;
}

} // namespace

Scalar scalar_from_string(const std::string& text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body = text.substr(begin, end - begin);

  std::size_t pos = 0;
  boost::multiprecision::cpp_int num, den = 1;
  if (!parse_int(body, pos, num))
    throw std::invalid_argument("bad rational: '" + text + "'");
  if (pos < body.size()) {
    if (body[pos] != '/')
      throw std::invalid_argument("bad rational: '" + text + "'");
    ++pos;
    if (!parse_int(body, pos, den) || pos != body.size())
      throw std::invalid_argument("bad rational: '" + text + "'");
    if (den == 0)
      throw std::invalid_argument("bad rational (zero denominator): '" + text + "'");
  }
  Scalar out(num);
  out /= Scalar(den);
  return out;
}

} // namespace framed
