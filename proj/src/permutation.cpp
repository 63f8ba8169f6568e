#include "covnum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "covnum/error.hpp"

namespace covnum {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw ArgumentError("degree mismatch: " + std::to_string(p.degree()) +
                        " vs " + std::to_string(q.degree()));
  }
}

int parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw ParseError("number too large in cycle notation");
    ++pos;
  }
  if (pos == start) {
    throw ParseError("expected a number at offset " + std::to_string(start) +
                     " in \"" + std::string(text) + "\"");
  }
  return static_cast<int>(value);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(int degree, std::span<const int> lengths) : degree_(degree) {
  std::map<int, int> counts;
  int total = 0;
  for (int len : lengths) {
    if (len < 1) throw ArgumentError("cycle length must be positive");
    total += len;
    if (len >= 2) ++counts[len];
  }
  if (total > degree) {
    throw ArgumentError("cycle lengths exceed degree " + std::to_string(degree));
  }
  for (auto [len, mult] : counts) parts_.push_back({len, mult});
}

CycleType CycleType::parse(std::string_view text, int degree) {
  std::string s = strip_spaces(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in \"" + s + "\"");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> lengths;
  if (s.empty() || s == "1") return CycleType(degree, lengths);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int len = parse_int(s, pos);
    int mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      mult = parse_int(s, pos);
    }
    if (len < 2) throw ParseError("cycle lengths in a cycle type must be >= 2");
    for (int i = 0; i < mult; ++i) lengths.push_back(len);
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' in cycle type \"" + s + "\"");
      ++pos;
    }
  }
  try {
    return CycleType(degree, lengths);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

int CycleType::moved_points() const noexcept {
  int total = 0;
  for (const auto& p : parts_) total += p.length * p.multiplicity;
  return total;
}

std::uint64_t CycleType::element_order() const noexcept {
  std::uint64_t result = 1;
  for (const auto& p : parts_) result = std::lcm(result, static_cast<std::uint64_t>(p.length));
  return result;
}

bool CycleType::is_even() const noexcept {
  int transpositions = 0;
  for (const auto& p : parts_) transpositions += (p.length - 1) * p.multiplicity;
  return transpositions % 2 == 0;
}

std::vector<int> CycleType::full_partition() const {
  std::vector<int> out;
  for (const auto& p : parts_) {
    for (int i = 0; i < p.multiplicity; ++i) out.push_back(p.length);
  }
  for (int i = 0; i < fixed_points(); ++i) out.push_back(1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string CycleType::to_string() const {
  if (parts_.empty()) return "(1)";
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i].length);
    if (parts_[i].multiplicity > 1) out += "^" + std::to_string(parts_[i].multiplicity);
  }
  return out + ")";
}

std::uint64_t CycleType::code() const {
  std::uint64_t code = 0;
  for (const auto& p : parts_) {
    if (p.length > 16) throw ArgumentError("cycle code needs lengths <= 16");
    code += static_cast<std::uint64_t>(p.multiplicity) << (4 * (p.length - 2));
  }
  return code;
}

// -------------------------------------------------------------- Permutation

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > 65535) throw ArgumentError("degree out of range");
  std::vector<std::uint16_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const auto n = images.size();
  if (n == 0 || n > 65535) throw ArgumentError("degree out of range");
  std::vector<std::uint16_t> out(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Point img = images[i];
    if (img < 1 || static_cast<std::size_t>(img) > n || seen[img - 1]) {
      throw ArgumentError("image sequence is not a bijection of {1.." +
                          std::to_string(n) + "}");
    }
    seen[img - 1] = true;
    out[i] = static_cast<std::uint16_t>(img - 1);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::cycle(int degree, std::span<const Point> points) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (Point x : points) {
    if (x < 1 || x > degree) throw ArgumentError("point " + std::to_string(x) + " exceeds degree");
    if (used[x - 1]) throw ArgumentError("repeated point " + std::to_string(x) + " in cycle");
    used[x - 1] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    p.images_[points[i] - 1] =
        static_cast<std::uint16_t>(points[(i + 1) % points.size()] - 1);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  const std::string s = strip_spaces(text);
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  if (s.empty()) throw ParseError("empty cycle notation");
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }
    ++pos;
    if (pos < s.size() && s[pos] == ')') {  // "()" is the identity
      ++pos;
      continue;
    }
    std::vector<Point> cyc;
    while (true) {
      int x = parse_int(s, pos);
      if (x < 1 || x > degree) {
        throw ParseError("point " + std::to_string(x) + " exceeds degree " +
                         std::to_string(degree));
      }
      if (used[x - 1]) throw ParseError("repeated point " + std::to_string(x));
      used[x - 1] = true;
      cyc.push_back(x);
      if (pos >= s.size()) throw ParseError("unterminated cycle in \"" + s + "\"");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in \"" + s + "\"");
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      p.images_[cyc[i] - 1] = static_cast<std::uint16_t>(cyc[(i + 1) % cyc.size()] - 1);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i + 1);
  }
  return 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cyc;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(static_cast<Point>(x + 1));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(degree(), lengths);
}

std::uint64_t Permutation::order() const { return cycle_type().element_order(); }

bool Permutation::is_even() const { return cycle_type().is_even(); }

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[images_[i]] = static_cast<std::uint16_t>(i);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long exponent) const {
  const auto ord = static_cast<long long>(order());
  long long e = exponent % ord;
  if (e < 0) e += ord;
  // Walk each cycle once: the image of x is e steps along its cycle.
  std::vector<std::uint16_t> out(images_.size());
  for (const auto& cyc : cycles()) {
    const auto len = static_cast<long long>(cyc.size());
    for (long long i = 0; i < len; ++i) {
      out[cyc[i] - 1] = static_cast<std::uint16_t>(cyc[(i + e) % len] - 1);
    }
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) out[i] = static_cast<std::uint16_t>(i);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  require_same_degree(*this, g);
  // x -> g^-1 -> this -> g, i.e. g(x) maps to g(this(x)).
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[g.images_[i]] = g.images_[images_[i]];
  }
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cyc : cs) {
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out << ',';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ images_.size();
  for (auto v : images_) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  // splitmix finaliser
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

std::uint64_t Permutation::cycle_code() const noexcept {
  std::uint32_t seen = 0;
  std::uint64_t code = 0;
  const std::size_t n = images_.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (seen & (1u << start)) continue;
    int len = 0;
    for (std::size_t x = start; !(seen & (1u << x)); x = images_[x]) {
      seen |= 1u << x;
      ++len;
    }
    if (len >= 2) code += std::uint64_t{1} << (4 * (len - 2));
  }
  return code;
}

void Permutation::compose_into(const Permutation& p, const Permutation& q,
                               Permutation& out) {
  const std::size_t n = p.images_.size();
  out.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.images_[i] = q.images_[p.images_[i]];
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<std::uint16_t> out(p.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out));
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
Permutation inverse(const Permutation& p) { return p.inverse(); }
Permutation power(const Permutation& p, long long exponent) { return p.pow(exponent); }
Permutation conjugate(const Permutation& p, const Permutation& by) {
  return p.conjugate_by(by);
}
CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }
std::uint64_t order_of(const Permutation& p) { return p.order(); }
Permutation parse_cycles(std::string_view text, int degree) {
  return Permutation::parse(text, degree);
}

}  // namespace covnum
