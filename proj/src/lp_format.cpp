#include "covnum/lp_format.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "covnum/error.hpp"

namespace covnum {

namespace {

class TermLine {
 public:
  TermLine(std::ostream& out, std::size_t wrap) : out_(out), wrap_(wrap) {}

  void term(std::size_t column) {
    const std::string t = " + r" + std::to_string(column + 1);
    if (wrap_ > 0 && width_ > 0 && width_ + t.size() > wrap_) {
      out_ << '\n';
      width_ = 0;
    }
    out_ << t;
    width_ += t.size();
  }

  void finish(const char* tail) {
    out_ << tail << '\n';
    width_ = 0;
  }

 private:
  std::ostream& out_;
  std::size_t wrap_;
  std::size_t width_ = 0;
};

}  // namespace

LpStats lp_stats(const CoverInstance& instance) {
  return {instance.universe_size, instance.sets.size(), instance.nonzeros()};
}

LpStats write_lp(const CoverInstance& instance, std::ostream& out, const LpOptions& options) {
  const std::size_t m = instance.sets.size();
  TermLine line(out, options.wrap);
  out << "Minimize\n";
  for (std::size_t j = 0; j < m; ++j) line.term(j);
  line.finish("");
  out << " Subject To\n";
  LpStats stats{instance.universe_size, m, 0};
  const auto by_element = instance.element_sets();
  for (const auto& cols : by_element) {
    for (std::size_t j = cols.first(); j < m; j = cols.next(j + 1)) {
      line.term(j);
      ++stats.nonzeros;
    }
    line.finish(" > 1");
  }
  out << "\\ Variables\nBinary\n";
  for (std::size_t j = 0; j < m; ++j) out << 'r' << j + 1 << '\n';
  out << "End\n";
  out.flush();
  if (!out) throw Error("writing LP file for " + instance.name + " failed");
  return stats;
}

std::vector<std::size_t> read_solution(std::istream& in, std::size_t columns) {
  std::set<std::size_t> chosen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(begin, end - begin + 1);
    const auto where = "solution line " + std::to_string(number) + ": '" + body + "'";

    const auto gap = body.find_first_of(" \t");
    const std::string name = body.substr(0, gap);
    if (name.size() < 2 || name[0] != 'r') throw ParseError(where + " does not name a variable r<j>");
    std::size_t j = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), j);
    if (ec != std::errc{} || ptr != name.data() + name.size()) throw ParseError(where + " has a bad index");
    if (j < 1 || j > columns) {
      throw ArgumentError(where + " is outside r1..r" + std::to_string(columns));
    }

    bool on = true;
    if (gap != std::string::npos) {
      const std::string value = body.substr(body.find_first_not_of(" \t", gap));
      if (value.find_first_of(" \t") != std::string::npos) throw ParseError(where + " has extra fields");
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        throw ParseError(where + " has a non-numeric value");
      }
      if (used != value.size()) throw ParseError(where + " has a non-numeric value");
      const double r = std::round(v);
      if ((r != 0.0 && r != 1.0) || std::abs(v - r) > 1e-4) throw ParseError(where + " is not binary");
      on = r == 1.0;
    }
    if (on) chosen.insert(j - 1);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace covnum
