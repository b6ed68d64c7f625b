#include "exchar/perm.hpp"

#include <cctype>

#include "exchar/error.hpp"
#include "exchar/intmath.hpp"

namespace exchar {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) {
      fail(ErrorCode::NonBijective, "image list is not a permutation");
    }
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

long Permutation::order() const {
  long result = 1;
  for (const auto& cyc : cycles()) {
    result = lcm_long(result, static_cast<long>(cyc.size()));
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    fail(ErrorCode::GroupMismatch, "composing permutations of different degree");
  }
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::power(long e) const {
  Permutation base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Permutation acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  if (degree() != g.degree()) {
    fail(ErrorCode::GroupMismatch, "conjugating by permutation of different degree");
  }
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[g.img_[i]] = g.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    std::vector<int> cyc;
    int x = start;
    while (!seen[x]) {
      seen[x] = 1;
      cyc.push_back(x);
      x = img_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out.push_back('(');
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(cyc[i] + 1);
    }
    out.push_back(')');
  }
  return out;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      fail(ErrorCode::ParseError, "expected '(' in cycle string: " + text);
    }
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) {
        fail(ErrorCode::ParseError, "expected point number in cycle string: " + text);
      }
      int point = std::stoi(text.substr(start, pos - start));
      if (point < 1 || point > degree) {
        fail(ErrorCode::ParseError, "point " + std::to_string(point) +
                                        " out of range 1.." + std::to_string(degree));
      }
      cyc.push_back(point - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) {
      fail(ErrorCode::ParseError, "unterminated cycle in: " + text);
    }
    ++pos; // ')'
    saw_cycle = true;
    for (int point : cyc) {
      if (used[point]) {
        fail(ErrorCode::ParseError, "point repeated in: " + text);
      }
      used[point] = 1;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    skip_ws();
  }
  if (!saw_cycle) {
    fail(ErrorCode::ParseError, "empty permutation string");
  }
  return Permutation(std::move(img));
}

} // namespace exchar
