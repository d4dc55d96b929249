#pragma once

// Text, JSON-lines and CSV renderings of solutions and Gray listings.

#include <string>
#include <vector>

#include "hanoifib/graycode.hpp"
#include "hanoifib/solver.hpp"

namespace hanoifib {

enum class Format { kText, kJson, kCsv };

/// text: "0 <start>" then "i kind k X->Y <state after>" per move.
/// json: one object per move {index, kind, k, from, to, state_after}.
/// csv: header "index,kind,k,from,to,A,B,C", radii space separated.
std::string format_solution(const Solution& solution, Format format);

/// text: one word per line. csv: header "index,word", index from 1.
/// Throws Error(kUnsupported) for json.
std::string format_words(const std::vector<Word>& words, Format format);

}  // namespace hanoifib
