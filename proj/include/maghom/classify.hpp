#pragma once

#include <string>
#include <vector>

#include "maghom/fibration.hpp"

namespace maghom {

// step type of an ordered pair of distinct points:
//   h  the projection preserves the distance
//   v  both points lie in the same fiber
//   t  the projection strictly shrinks the distance without collapsing it
char classify_step(const fibration& fib, int x, int y);

// letters of the consecutive steps of a tuple, e.g. "hv" for a 3-point tuple
std::string t_word(const fibration& fib, const std::vector<int>& tuple);

// position of a tuple relative to the distinguished subcomplex:
//   tilted_first  word matches v^m h^m' t ...
//   hv_first      word matches v^m h^(m'+1) v ...
//   outside       everything else, i.e. words of shape v^m h^k
enum class d_kind { outside, tilted_first, hv_first };

d_kind d_membership(const std::string& word);

// fills the first tilted gap of a tilted_first tuple with a lift, producing an
// hv_first tuple one degree up with the same total length
std::vector<int> fill_hv(const fibration& fib, const std::vector<int>& tuple);

// sum of the positions carrying a v letter
int weight(const fibration& fib, const std::vector<int>& tuple);

}  // namespace maghom
