// Small helpers shared by the unit tests.
#pragma once

#include <initializer_list>
#include <vector>

#include "ppring/grp.hpp"

namespace testing {

using Cycles = std::vector<std::vector<int>>;

inline ppring::Elem elem(const ppring::FiniteGroup& G, const Cycles& cycles) {
  return G.index_of(ppring::Permutation::from_cycles(G.degree(), cycles));
}

inline ppring::Subgroup gen_sub(const ppring::FiniteGroup& G, std::initializer_list<Cycles> gens) {
  std::vector<ppring::Elem> xs;
  for (const auto& c : gens) xs.push_back(elem(G, c));
  return ppring::generate(G, xs);
}

inline bool has_code(const ppring::Error& e, ppring::ErrorCode c) { return e.code() == c; }

}  // namespace testing

// Checks that expr throws ppring::Error with the given code.
#define CHECK_THROWS_CODE(expr, ecode)                                 \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ppring::Error& e_) {                                \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (ecode), ppring::to_string(e_.code())); \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected ppring::Error");                  \
  } while (0)
