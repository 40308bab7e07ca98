#include "mslat/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mslat/error.hpp"

namespace mslat {

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  for (auto e : exps_) degree_ += e;
}

unsigned Monomial::exponent(std::size_t var) const {
  return var >= 1 && var <= exps_.size() ? exps_[var - 1] : 0;
}

std::vector<unsigned> Monomial::exponents(std::size_t vars) const {
  std::vector<unsigned> out(std::max(vars, exps_.size()), 0);
  std::copy(exps_.begin(), exps_.end(), out.begin());
  return out;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > 0) out.push_back(j + 1);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > other.exps_[j]) return false;
  }
  return true;
}

Monomial Monomial::times(std::size_t var, unsigned power) const {
  auto e = exponents(var);
  e[var - 1] += power;
  return Monomial(std::move(e));
}

Monomial Monomial::divided(std::size_t var) const {
  if (exponent(var) == 0) throw Error("x" + std::to_string(var) + " does not divide " + str());
  auto e = exps_;
  --e[var - 1];
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  auto e = exponents(other.exps_.size());
  for (std::size_t j = 0; j < other.exps_.size(); ++j) e[j] += other.exps_[j];
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    out += "x" + std::to_string(j + 1);
    if (exps_[j] > 1) out += "^" + std::to_string(exps_[j]);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t j = 1; j <= n; ++j) {
    unsigned x = a.exponent(j), y = b.exponent(j);
    if (x != y) return y <=> x;
  }
  return std::strong_ordering::equal;
}

Monomial parse_monomial(std::string_view text) {
  auto fail = [&]() -> Monomial { throw Error("cannot parse monomial '" + std::string(text) + "'"); };
  if (text == "1") return Monomial();
  std::vector<unsigned> e;
  std::size_t i = 0;
  auto number = [&](unsigned& out) {
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), out);
    if (ec != std::errc() || ptr == text.data() + i) return false;
    i = static_cast<std::size_t>(ptr - text.data());
    return true;
  };
  if (text.empty()) fail();
  while (i < text.size()) {
    unsigned var = 0;
    char c = text[i++];
    if (c == 'x' && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (!number(var) || var == 0) fail();
    } else if (c == 'x') {
      var = 1;
    } else if (c == 'y') {
      var = 2;
    } else if (c == 'z') {
      var = 3;
    } else if (c == 'w') {
      var = 4;
    } else {
      fail();
    }
    unsigned power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!number(power)) fail();
    }
    if (e.size() < var) e.resize(var, 0);
    e[var - 1] += power;
  }
  return Monomial(std::move(e));
}

MonomialSet parse_monomial_lines(std::string_view text) {
  MonomialSet out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<unsigned> e;
    std::size_t i = 0;
    while (true) {
      while (i < line.size() && line[i] == ' ') ++i;
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || ptr == line.data() + i) {
        throw Error("line " + std::to_string(line_no) + ": expected a comma-separated exponent vector");
      }
      e.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
      while (i < line.size() && line[i] == ' ') ++i;
      if (i == line.size()) break;
      if (line[i] != ',') throw Error("line " + std::to_string(line_no) + ": expected ','");
      ++i;
    }
    out.insert(Monomial(std::move(e)));
  }
  return out;
}

namespace {

void fill_degree(std::size_t vars, std::size_t pos, unsigned left, std::vector<unsigned>& cur,
                 std::vector<Monomial>& out) {
  if (pos + 1 == vars) {
    cur[pos] = left;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[pos] = e;
    fill_degree(vars, pos + 1, left - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t vars, unsigned degree) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(vars, 0);
  fill_degree(vars, 0, degree, cur, out);
  return out;
}

}  // namespace mslat
