#include "windtree/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "windtree/error.hpp"

namespace windtree {
namespace {

std::vector<int> parse_integers(std::string_view text, std::string_view separators) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || separators.find(c) != std::string_view::npos) {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw Error(ErrorKind::kParse, "unexpected character '" + std::string(1, c) + "' in '" +
                                         std::string(text) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size()) {
      throw Error(ErrorKind::kMalformedPermutation, "image " + std::to_string(x + 1) + " out of range");
    }
    if (hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::kMalformedPermutation, "symbol " + std::to_string(x + 1) + " repeated");
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') {
      throw Error(ErrorKind::kParse, "expected '(' in cycle string '" + std::string(text) + "'");
    }
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::kParse, "unbalanced parenthesis in '" + std::string(text) + "'");
    }
    const std::vector<int> cycle = parse_integers(text.substr(pos + 1, close - pos - 1), ",");
    for (int s : cycle) {
      if (s < 1 || s > n) {
        throw Error(ErrorKind::kSizeMismatch,
                    "symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(s - 1)]) {
        throw Error(ErrorKind::kMalformedPermutation, "symbol " + std::to_string(s) + " repeated");
      }
      seen[static_cast<std::size_t>(s - 1)] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()] - 1;
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(int n, std::string_view text) {
  const std::vector<int> values = parse_integers(text, "[],");
  if (static_cast<int>(values.size()) != n) {
    throw Error(ErrorKind::kSizeMismatch, "one-line permutation has " + std::to_string(values.size()) +
                                              " entries, expected " + std::to_string(n));
  }
  std::vector<int> images;
  images.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::kSizeMismatch, "symbol " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    images.push_back(v - 1);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(int n, std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return identity(n);
  if (text[first] == '(') return from_cycles(n, text);
  return from_one_line(n, text);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::conjugate_by(const Permutation& pi) const {
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(pi(i))] = pi((*this)(i));
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::one_line_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string((*this)(i) + 1);
  }
  return out + "]";
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

bool Permutation::has_fixed_point() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) == i) return true;
  return false;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kSizeMismatch, "composing permutations of different degree");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a(b(i));
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

}  // namespace windtree
