#include "dualkern/json_io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace dualkern {

namespace {

// Accepts "re", "imi", "re+imi", "re-imi"; also "i", "-i" for unit imaginary.
Cx parse_complex_literal(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty complex literal");

  auto fail = [&]() -> Cx {
    throw std::invalid_argument("malformed complex literal '" + s + "', expected \"re+imi\"");
  };

  if (t.back() != 'i') {
    char* end = nullptr;
    double re = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) return fail();
    return Cx(re, 0.0);
  }

  t.pop_back();  // strip trailing 'i'
  // Find the sign that splits real and imaginary parts (skip leading sign,
  // ignore exponent signs).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') split = i;
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = t;
  } else {
    re_part = t.substr(0, split);
    im_part = t.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";

  char* end = nullptr;
  double re = std::strtod(re_part.c_str(), &end);
  if (end != re_part.c_str() + re_part.size()) return fail();
  double im = std::strtod(im_part.c_str(), &end);
  if (end != im_part.c_str() + im_part.size()) return fail();
  return Cx(re, im);
}

}  // namespace

Cx complex_from_json(const json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0.0);
  if (j.is_string()) return parse_complex_literal(j.get<std::string>());
  throw std::invalid_argument("expected a number or an \"re+imi\" string, got " +
                              std::string(j.type_name()));
}

json complex_to_json(const Cx& z) {
  if (z.imag() == 0.0) return json(z.real());
  std::ostringstream os;
  os << z.real();
  if (z.imag() >= 0.0) os << "+";
  os << z.imag() << "i";
  return json(os.str());
}

json coords_to_json(const std::vector<Cx>& coords) {
  json arr = json::array();
  for (const Cx& c : coords) arr.push_back(complex_to_json(c));
  return arr;
}

std::vector<Cx> coords_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of scalars");
  std::vector<Cx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace dualkern
