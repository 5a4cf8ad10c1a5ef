#include "jack/serialize.hpp"

#include <cstdint>
#include <cstdio>

#include "jack/errors.hpp"

namespace jack {

namespace {

Json rational_list(const RatPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_string(c));
  return arr;
}

RatPoly parse_list(const Json& arr) {
  if (!arr.is_array()) raise("ParseError", "coefficient list expected");
  std::vector<Rational> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string()) raise("ParseError", "coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return RatPoly(std::move(coeffs));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) raise("ParseError", std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) raise("ParseError", std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& arr) {
  if (!arr.is_array()) raise("ParseError", "integer list expected");
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) raise("ParseError", "integer list expected");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json kfield_to_json(const KField& x) {
  return Json{{"num", rational_list(x.num())}, {"den", rational_list(x.den())}};
}

KField kfield_from_json(const Json& j) {
  return kf_normalize(parse_list(field(j, "num")), parse_list(field(j, "den")));
}

Json fermion_to_json(const FermionPoly& p) {
  Json terms = Json::array();
  for (const auto& [mask, c] : p.terms()) {
    terms.push_back(Json{{"set", SubsetE(p.n(), mask).positions()}, {"coeff", kfield_to_json(c)}});
  }
  return Json{{"N", p.n()}, {"m", p.m()}, {"terms", terms}};
}

FermionPoly fermion_from_json(const Json& j) {
  const int n = int_field(j, "N");
  FermionPoly p(n, int_field(j, "m"));
  for (const auto& t : field(j, "terms")) {
    p.add_term(SubsetE::from_positions(n, int_list(field(t, "set"))), kfield_from_json(field(t, "coeff")));
  }
  return p;
}

Json superpoly_to_json(const SuperPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back(Json{{"alpha", key.alpha.to_vector()},
                         {"set", SubsetE(p.n(), key.mask).positions()},
                         {"coeff", kfield_to_json(c)}});
  }
  return Json{{"N", p.n()}, {"m", p.m()}, {"terms", terms}};
}

SuperPoly superpoly_from_json(const Json& j) {
  const int n = int_field(j, "N");
  SuperPoly p(n, int_field(j, "m"));
  for (const auto& t : field(j, "terms")) {
    const Composition alpha(int_list(field(t, "alpha")));
    const SubsetE e = SubsetE::from_positions(n, int_list(field(t, "set")));
    p.add_term(alpha, e.mask(), kfield_from_json(field(t, "coeff")));
  }
  return p;
}

Json label_to_json(const HookLabel& label) {
  const HookTableau t = tableau_of(label);
  return Json{{"N", label.n()},
              {"m", label.m},
              {"family", family_index(label.family)},
              {"E", label.set.positions()},
              {"content", content_vector(label)},
              {"tableau", Json{{"row", t.row}, {"col", t.col}}},
              {"T_norm_sq", rational_string(T_norm_sq(label))}};
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jack
