#include "nodal/roots.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nodal::rootlat {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
  bool ok = (f == Family::A && r >= 1) || (f == Family::D && r >= 4) ||
            (f == Family::E && (r == 6 || r == 7 || r == 8));
  if (!ok) throw NotADE("invalid simple type " + std::string(1, family_letter(f)) + std::to_string(r));
}

std::string SimpleType::str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

// E before D before A at equal rank
static int family_order(Family f) {
  switch (f) {
    case Family::E: return 0;
    case Family::D: return 1;
    case Family::A: return 2;
  }
  return 3;
}

bool operator<(const SimpleType& a, const SimpleType& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  return family_order(a.family) < family_order(b.family);
}

RootSystemType::RootSystemType(std::vector<SimpleType> comps) : components(std::move(comps)) {
  std::sort(components.begin(), components.end());
}

void RootSystemType::add(Family f, int rank) {
  if (f == Family::D && rank == 3) {
    components.emplace_back(Family::A, 3);
  } else if (f == Family::D && rank == 2) {
    components.emplace_back(Family::A, 1);
    components.emplace_back(Family::A, 1);
  } else {
    components.emplace_back(f, rank);
  }
  std::sort(components.begin(), components.end());
}

void RootSystemType::add(const SimpleType& s) { add(s.family, s.rank); }

void RootSystemType::add(const RootSystemType& other) {
  for (const auto& c : other.components) components.push_back(c);
  std::sort(components.begin(), components.end());
}

int RootSystemType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string RootSystemType::str() const {
  if (components.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << '+';
    os << components[i].str();
  }
  return os.str();
}

RootSystemType RootSystemType::parse(std::string_view s) {
  RootSystemType out;
  if (s == "0" || s.empty()) return out;
  size_t i = 0;
  auto fail = [&](const std::string& what) { throw NotADE("cannot parse type '" + std::string(s) + "': " + what); };
  while (i < s.size()) {
    char fc = s[i++];
    Family f;
    if (fc == 'A') f = Family::A;
    else if (fc == 'D') f = Family::D;
    else if (fc == 'E') f = Family::E;
    else { fail("expected family letter"); return out; }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected rank digits");
    int rank = std::stoi(std::string(s.substr(i, j - i)));
    i = j;
    int count = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == i) fail("expected exponent digits");
      count = std::stoi(std::string(s.substr(i, k - i)));
      i = k;
    }
    for (int c = 0; c < count; ++c) out.add(f, rank);
    if (i < s.size()) {
      if (s[i] != '+') fail("expected '+'");
      ++i;
      if (i == s.size()) fail("trailing '+'");
    }
  }
  return out;
}

AffineType::AffineType(SimpleType b) : base(b) {
  bool ok = (b.family == Family::D && b.rank >= 4 && b.rank <= 8) ||
            (b.family == Family::E && b.rank >= 6 && b.rank <= 8);
  if (!ok) throw UnsupportedType("affine type " + b.str() + "~ is not Painleve-relevant");
}

AffineType AffineType::parse(std::string_view s) {
  std::string_view v = s;
  // accept a trailing tilde
  if (!v.empty() && v.back() == '~') v.remove_suffix(1);
  RootSystemType t = RootSystemType::parse(v);
  if (t.components.size() != 1) throw UnsupportedType("affine type must be a single factor: " + std::string(s));
  return AffineType(t.components[0]);
}

const std::vector<AffineType>& painleve_affine_types() {
  static const std::vector<AffineType> all = {
      AffineType(SimpleType(Family::E, 8)), AffineType(SimpleType(Family::E, 7)),
      AffineType(SimpleType(Family::D, 8)), AffineType(SimpleType(Family::D, 7)),
      AffineType(SimpleType(Family::D, 6)), AffineType(SimpleType(Family::E, 6)),
      AffineType(SimpleType(Family::D, 5)), AffineType(SimpleType(Family::D, 4))};
  return all;
}

}  // namespace nodal::rootlat
