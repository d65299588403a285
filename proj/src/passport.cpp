#include "dessin/passport.hpp"

#include <sstream>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

int side_sum(const std::map<int, int>& side) {
  int sum = 0;
  for (const auto& [deg, mult] : side) sum += deg * mult;
  return sum;
}

int side_count(const std::map<int, int>& side) {
  int count = 0;
  for (const auto& [deg, mult] : side) count += mult;
  return count;
}

std::vector<int> side_degrees(const std::map<int, int>& side) {
  std::vector<int> out;
  for (const auto& [deg, mult] : side)
    for (int i = 0; i < mult; ++i) out.push_back(deg);
  return out;
}

}  // namespace

void Passport::validate() const {
  if (white.empty() || black.empty())
    throw MalformedPassport("passport must have white and black vertices");
  for (const auto& side : {white, black})
    for (const auto& [deg, mult] : side)
      if (deg < 1 || mult < 1)
        throw MalformedPassport("degrees and multiplicities must be positive");
  if (side_sum(white) != side_sum(black))
    throw MalformedPassport("white and black degree sums disagree in " +
                            str());
}

int Passport::edges() const { return side_sum(white); }
int Passport::white_count() const { return side_count(white); }
int Passport::black_count() const { return side_count(black); }
std::vector<int> Passport::white_degrees() const { return side_degrees(white); }
std::vector<int> Passport::black_degrees() const { return side_degrees(black); }

Monomial Passport::monomial() const {
  Monomial m;
  for (const auto& [deg, mult] : white)
    m = m.times(Monomial::var(var_a(deg), mult));
  for (const auto& [deg, mult] : black)
    m = m.times(Monomial::var(var_b(deg), mult));
  int e = edges();
  return m.times(Monomial::var(var_t, e)).times(Monomial::var(var_x, e));
}

Passport Passport::parse(const std::string& text) {
  Passport p;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b'))
      throw MalformedPassport("bad passport token: " + token);
    auto caret = token.find('^');
    int deg, mult = 1;
    try {
      deg = std::stoi(token.substr(1, caret - 1));
      if (caret != std::string::npos) mult = std::stoi(token.substr(caret + 1));
    } catch (const std::exception&) {
      throw MalformedPassport("bad passport token: " + token);
    }
    if (deg < 1 || mult < 1)
      throw MalformedPassport("bad passport token: " + token);
    (token[0] == 'a' ? p.white : p.black)[deg] += mult;
  }
  p.validate();
  return p;
}

std::string Passport::str() const {
  std::string out;
  auto emit = [&out](char letter, const std::map<int, int>& side) {
    for (const auto& [deg, mult] : side) {
      if (!out.empty()) out += " ";
      out += letter + std::to_string(deg);
      if (mult > 1) out += "^" + std::to_string(mult);
    }
  };
  emit('a', white);
  emit('b', black);
  return out;
}

}  // namespace dessin
