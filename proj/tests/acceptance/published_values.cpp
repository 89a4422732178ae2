#include "published_values.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace acceptance {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Text between the first occurrence of `from` (after `start`) and the next
// occurrence of `to`.
std::string between(const std::string& text, const std::string& from, const std::string& to,
                    std::size_t start = 0) {
  const auto a = text.find(from, start);
  if (a == std::string::npos) throw std::runtime_error("missing '" + from + "'");
  const auto b = text.find(to, a + from.size());
  if (b == std::string::npos) throw std::runtime_error("missing '" + to + "' after '" + from + "'");
  return text.substr(a + from.size(), b - a - from.size());
}

std::int64_t to_int(const std::string& s) { return std::stoll(s); }

void read_table(const std::string& text, PublishedValues& v) {
  const auto table = between(text, "\\cline{1-3}", "\\end{tabular}");
  const std::regex triple(R"((\d+)\s*&\s*(\d+)\s*&\s*(\d+))");
  for (std::sregex_iterator it(table.begin(), table.end(), triple), end; it != end; ++it) {
    v.first_levels[to_int((*it)[1])] = {to_int((*it)[2]), to_int((*it)[3])};
  }
  if (v.first_levels.empty()) throw std::runtime_error("no table rows");
}

void read_periodic(const std::string& text, PublishedValues& v) {
  const auto block = between(text, "\\label{thm:periodicity}", "\\end{theorem}");
  std::smatch m;
  if (!std::regex_search(block, m, std::regex(R"(\[(\d+),\s*(\d+)\])"))) {
    throw std::runtime_error("no periodic range");
  }
  v.periodic_lo = to_int(m[1]);
  v.periodic_hi = to_int(m[2]);
  const std::regex split(
      R"(\{cc\}(\d+)\s*&\s*\\text\{if \}\s*2k \\equiv (\d) \\mod\{6\}\\\\\s*(\d+)\s*&\s*\\text\{otherwise\})");
  std::vector<std::array<std::int64_t, 3>> cases;
  for (std::sregex_iterator it(block.begin(), block.end(), split), end; it != end; ++it) {
    cases.push_back({to_int((*it)[1]), to_int((*it)[2]), to_int((*it)[3])});
  }
  if (cases.size() != 2 || cases[0][1] != 0 || cases[1][1] != 2) {
    throw std::runtime_error("periodic cases not in the expected shape");
  }
  v.minnorm_if_zero_mod6 = cases[0][0];
  v.minnorm_otherwise = cases[0][2];
  v.mult_if_two_mod6 = cases[1][0];
  v.mult_otherwise = cases[1][2];
}

void read_family(const std::string& text, PublishedValues& v) {
  const auto block = between(text, "\\label{exmample:minnormfamily}", "\\end{example}");
  std::smatch m;
  std::array<std::int64_t, 5> base{}, step{};
  const char* names[] = {"w_0", "w_1", "w_2", "w_3", "w_{14}"};
  for (int i = 0; i < 5; ++i) {
    const std::regex weight(std::regex_replace(std::string(names[i]), std::regex(R"([{}])"), R"(\$&)") +
                            R"(\s*=\s*(\d+)\s*\+\s*(\d+)m)");
    if (!std::regex_search(block, m, weight)) throw std::runtime_error(std::string("no weight ") + names[i]);
    base[i] = to_int(m[1]);
    step[i] = to_int(m[2]);
  }
  v.family_base = {base[0], base[1], base[2], base[3], base[4]};
  v.family_step = {step[0], step[1], step[2], step[3], step[4]};
  if (!std::regex_search(block, m, std::regex(R"(m = \\frac\{2k - (\d+)\}\{(\d+)\})"))) {
    throw std::runtime_error("no level for the family index");
  }
  v.family_first_level = to_int(m[1]);
  v.family_level_step = to_int(m[2]);

  const auto poly = between(block, "p_{\\beta_m}(t) =", "$$");
  const std::regex term(R"(([+-])\s*(\d*)t\^\{(-?\d+)(\+(\d+)m)?\})");
  for (std::sregex_iterator it(poly.begin(), poly.end(), term), end; it != end; ++it) {
    const auto& t = *it;
    std::int64_t c = t[2].length() ? to_int(t[2]) : 1;
    if (t[1] == "-") c = -c;
    v.family_terms.push_back({c, to_int(t[3]), t[5].matched ? to_int(t[5]) : 0});
  }
  if (v.family_terms.empty()) throw std::runtime_error("no family polynomial");

  if (!std::regex_search(text, m, std::regex(R"(fall into \$(\d+)\+(\d+)\+(\d+)\$ families)"))) {
    throw std::runtime_error("no family count");
  }
  v.family_count = to_int(m[1]) + to_int(m[2]) + to_int(m[3]);
}

void read_records(const std::string& text, PublishedValues& v) {
  const std::string anchor = "The records of the first three members of this family are as follows.";
  const auto at = text.find(anchor);
  if (at == std::string::npos) throw std::runtime_error("no record list");
  const auto stop = text.find("\\/*", at);
  const auto part = text.substr(at, stop - at);
  std::vector<std::string> records;
  const std::regex display(R"(\$\$(.*?)\$\$)");
  for (std::sregex_iterator it(part.begin(), part.end(), display), end; it != end; ++it) {
    auto r = (*it)[1].str();
    r = std::regex_replace(r, std::regex(R"(\\fbox\{|\\left|\\right|\}|\s)"), "");
    records.push_back(r);
  }
  if (records.size() != 6) throw std::runtime_error("expected six records, found " + std::to_string(records.size()));
  v.record_families = {{records[0], records[1], records[2]}, {records[3], records[4], records[5]}};
}

}  // namespace

burau4::LaurentPolynomial PublishedValues::family_polynomial(std::int64_t m) const {
  burau4::LaurentPolynomial p;
  for (const auto& [c, e, grow] : family_terms) p += burau4::LaurentPolynomial::monomial(c, e + grow * m);
  return p;
}

std::int64_t PublishedValues::periodic_minnorm(std::int64_t level) const {
  return level % 6 == 0 ? minnorm_if_zero_mod6 : minnorm_otherwise;
}

std::int64_t PublishedValues::periodic_mult(std::int64_t level) const {
  return level % 6 == 2 ? mult_if_two_mod6 : mult_otherwise;
}

PublishedValues read_published_values(const std::string& path) {
  const auto text = slurp(path);
  PublishedValues v;
  read_table(text, v);
  read_periodic(text, v);
  read_family(text, v);
  read_records(text, v);
  return v;
}

}  // namespace acceptance
