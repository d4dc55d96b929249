#include "hanoifib/format.hpp"

#include <nlohmann/json.hpp>

#include "hanoifib/error.hpp"

namespace hanoifib {

namespace {

std::string joined(const DiskSet& disks) {
  std::string out;
  for (int r : disks.radii()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(r);
  }
  return out;
}

std::string text_line(std::size_t index, const Move& m, const State& after) {
  return std::to_string(index) + " " + to_string(m) + " " + to_string(after) + "\n";
}

std::string json_line(std::size_t index, const Move& m, const State& after) {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["kind"] = kind_name(m.kind);
  j["k"] = m.disk;
  j["from"] = std::string(1, peg_name(m.from));
  j["to"] = std::string(1, peg_name(m.to));
  nlohmann::ordered_json pegs;
  for (Peg p : kPegs) pegs[std::string(1, peg_name(p))] = after.on(p).radii();
  j["state_after"] = pegs;
  return j.dump() + "\n";
}

std::string csv_line(std::size_t index, const Move& m, const State& after) {
  std::string out = std::to_string(index) + "," + kind_name(m.kind) + "," + std::to_string(m.disk) + "," +
                    peg_name(m.from) + "," + peg_name(m.to);
  for (Peg p : kPegs) out += "," + joined(after.on(p));
  return out + "\n";
}

}  // namespace

std::string format_solution(const Solution& solution, Format format) {
  std::string out;
  switch (format) {
    case Format::kText:
      out = "0 " + to_string(solution.states.front()) + "\n";
      break;
    case Format::kCsv:
      out = "index,kind,k,from,to,A,B,C\n";
      break;
    case Format::kJson:
      break;
  }
  for (std::size_t i = 0; i < solution.moves.size(); ++i) {
    const Move& m = solution.moves[i];
    const State& after = solution.states[i + 1];
    switch (format) {
      case Format::kText: out += text_line(i + 1, m, after); break;
      case Format::kJson: out += json_line(i + 1, m, after); break;
      case Format::kCsv: out += csv_line(i + 1, m, after); break;
    }
  }
  return out;
}

std::string format_words(const std::vector<Word>& words, Format format) {
  if (format == Format::kJson) fail(Errc::kUnsupported, "word lists have text and csv formats only");
  std::string out = format == Format::kCsv ? "index,word\n" : "";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (format == Format::kCsv) out += std::to_string(i + 1) + ",";
    out += words[i] + "\n";
  }
  return out;
}

}  // namespace hanoifib
