#ifndef RUNSLAB_TESTS_HELPERS_HPP
#define RUNSLAB_TESTS_HELPERS_HPP

#include <vector>

#include "runslab/core.hpp"

namespace runslab::testing {

inline Word W(const char* s) { return Word::parse(s); }

inline std::vector<Pos> P(std::initializer_list<Pos> ps) { return ps; }

} // namespace runslab::testing

#endif
