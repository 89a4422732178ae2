#include "burau4/transition_table.hpp"

#include <sstream>

namespace burau4 {

namespace {

// Generated by derive_transition_table over every genuine arc with at most
// 24 crossings; the tracer tests re-derive it and compare.
constexpr PathRule kTable[] = {
    {Side::Left, 1, false, 9,
     {{{9, -1}, {5, -1}, {1, 1}, {5, 1}, {8, -1}, {4, -1}, {0, 1}, {4, 1}, {10, 1}}},
     1, {-2, -2, 0, 0, 2, 2, 0, 0, -2, -2, -2, 0, 0, 0, 1}, 0, 2, 0, {{}}},
    {Side::Left, 2, false, 5,
     {{{9, -1}, {5, -1}, {1, 1}, {5, 1}, {9, 1}}},
     1, {0, -2, 0, 0, 0, 2, 0, 0, -2, -2, 0, 0, 0, 0, 1}, 0, 1, 1, {{{1, 1}}}},
    {Side::Left, 3, false, 5,
     {{{9, -1}, {5, -1}, {1, -1}, {5, 1}, {9, 1}}},
     1, {0, -2, 0, 0, 0, 2, 0, 0, -2, -2, 0, 0, 0, 0, 1}, 0, -1, 1, {{{-1, 0}}}},
    {Side::Left, 4, false, 5,
     {{{10, -1}, {4, -1}, {0, 1}, {4, 1}, {10, 1}}},
     1, {-2, 0, 0, 0, 2, 0, 0, 0, 0, -2, -2, 0, 0, 0, 1}, 0, 1, 1, {{{-1, 0}}}},
    {Side::Left, 5, false, 5,
     {{{10, -1}, {4, -1}, {0, -1}, {4, 1}, {10, 1}}},
     1, {-2, 0, 0, 0, 2, 0, 0, 0, 0, -2, -2, 0, 0, 0, 1}, 0, -1, 1, {{{1, -1}}}},
    {Side::Left, 6, false, 13,
     {{{10, -1}, {4, -1}, {0, -1}, {4, 1}, {8, 1}, {5, -1}, {1, 1}, {5, 1}, {8, -1}, {4, -1}, {0, 1}, {4, 1}, {10, 1}}},
     1, {-4, -2, 0, 0, 4, 2, 0, 0, -2, -2, -4, 0, 0, 0, 1}, 0, 1, 1, {{{1, -1}}}},
    {Side::Left, 8, false, 13,
     {{{10, -1}, {4, -1}, {0, -1}, {4, 1}, {8, 1}, {5, -1}, {1, -1}, {5, 1}, {8, -1}, {4, -1}, {0, 1}, {4, 1}, {10, 1}}},
     1, {-4, -2, 0, 0, 4, 2, 0, 0, -2, -2, -4, 0, 0, 0, 1}, 0, -1, 1, {{{-1, -2}}}},
    {Side::Left, 9, false, 9,
     {{{10, -1}, {4, -1}, {0, -1}, {4, 1}, {8, 1}, {5, -1}, {1, -1}, {5, 1}, {9, 1}}},
     1, {-2, -2, 0, 0, 2, 2, 0, 0, -2, -2, -2, 0, 0, 0, 1}, 0, -2, 0, {{}}},
    {Side::Right, 1, false, 9,
     {{{13, 1}, {7, -1}, {3, 1}, {7, 1}, {12, -1}, {6, -1}, {2, 1}, {6, 1}, {11, 1}}},
     1, {0, 0, -2, -2, 0, 0, 2, 2, 0, 0, 0, -2, -2, -2, 1}, 0, 2, 0, {{}}},
    {Side::Right, 2, false, 5,
     {{{13, 1}, {7, -1}, {3, 1}, {7, 1}, {13, -1}}},
     1, {0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 0, -2, -2, 1}, 0, 1, 0, {{}}},
    {Side::Right, 3, false, 5,
     {{{13, 1}, {7, -1}, {3, -1}, {7, 1}, {13, -1}}},
     1, {0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 0, -2, -2, 1}, 0, -1, 0, {{}}},
    {Side::Right, 4, false, 5,
     {{{11, -1}, {6, -1}, {2, 1}, {6, 1}, {11, 1}}},
     1, {0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, -2, 1}, 0, 1, 0, {{}}},
    {Side::Right, 5, false, 5,
     {{{11, -1}, {6, -1}, {2, -1}, {6, 1}, {11, 1}}},
     1, {0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, -2, 1}, 0, -1, 0, {{}}},
    {Side::Right, 6, false, 9,
     {{{11, -1}, {6, -1}, {2, -1}, {6, 1}, {12, 1}, {7, -1}, {3, -1}, {7, 1}, {13, -1}}},
     1, {0, 0, -2, -2, 0, 0, 2, 2, 0, 0, 0, -2, -2, -2, 1}, 0, -2, 0, {{}}},
    {Side::Right, 3, true, 2,
     {{{13, 1}, {7, -1}}},
     0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 0, 0, 0, {{}}},
};

}  // namespace

std::span<const PathRule> transition_table() noexcept { return kTable; }

std::string format_table_source(std::span<const PathRule> rules) {
  std::ostringstream os;
  for (const auto& r : rules) {
    os << "    {Side::" << (r.side == Side::Left ? "Left" : "Right") << ", " << int(r.symbol) << ", "
       << (r.terminal ? "true" : "false") << ", " << int(r.path_length) << ",\n     {{";
    for (std::size_t i = 0; i < r.path_length; ++i) {
      os << (i ? ", " : "") << '{' << int(r.path[i].rail) << ", " << int(r.path[i].dir) << '}';
    }
    os << "}},\n     " << int(r.ell_sign) << ", {";
    for (std::size_t i = 0; i < r.weight_coefficients.size(); ++i) {
      os << (i ? ", " : "") << int(r.weight_coefficients[i]);
    }
    os << "}, " << int(r.constant) << ", " << int(r.level_delta) << ", " << int(r.crossing_terms)
       << ", {{";
    for (std::size_t i = 0; i < r.crossing_terms; ++i) {
      os << (i ? ", " : "") << '{' << int(r.crossings[i].sign) << ", " << int(r.crossings[i].level)
         << '}';
    }
    os << "}}},\n";
  }
  return os.str();
}

}  // namespace burau4
