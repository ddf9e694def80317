#include "colog/model.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "colog/errors.hpp"
#include "colog/parser.hpp"

namespace colog {

RankedModel::RankedModel(Vocabulary vocabulary, std::vector<World> worlds)
    : vocabulary_(std::move(vocabulary)), worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw InputError("a model needs at least one world");
  if (vocabulary_.size() > 31) throw InputError("vocabulary too large");
  const std::uint64_t valuation_count = std::uint64_t{1} << vocabulary_.size();
  std::vector<bool> used;
  for (const World& w : worlds_) {
    if (w.valuation.bits >= valuation_count) throw InputError("valuation outside the vocabulary");
    if (w.rank == kInfiniteRank) throw InputError("worlds cannot carry the infinite rank");
    max_rank_ = std::max(max_rank_, w.rank);
  }
  used.assign(max_rank_ + 1, false);
  for (const World& w : worlds_) used[w.rank] = true;
  for (Rank r = 0; r <= max_rank_; ++r) {
    if (!used[r]) throw InputError("rank " + std::to_string(r) + " is empty; ranks must be 0..k");
  }
}

std::vector<Rank> RankedModel::valuation_ranks() const {
  std::vector<Rank> out(std::size_t{1} << vocabulary_.size(), kInfiniteRank);
  for (const World& w : worlds_) out[w.valuation.bits] = std::min(out[w.valuation.bits], w.rank);
  return out;
}

bool RankedModel::is_co_star() const {
  const auto ranks = valuation_ranks();
  return std::none_of(ranks.begin(), ranks.end(), [](Rank r) { return r == kInfiniteRank; });
}

bool is_co_star(const RankedModel& m) { return m.is_co_star(); }

bool same_worlds(const RankedModel& a, const RankedModel& b) {
  if (a.vocabulary() != b.vocabulary() || a.size() != b.size()) return false;
  auto sorted = [](const RankedModel& m) {
    std::vector<std::pair<Rank, std::uint32_t>> out;
    for (const World& w : m.worlds()) out.emplace_back(w.rank, w.valuation.bits);
    std::sort(out.begin(), out.end());
    return out;
  };
  return sorted(a) == sorted(b);
}

std::string to_text(const RankedModel& m) {
  std::string out = "atoms:";
  for (const auto& a : m.vocabulary()) out += " " + a;
  out += '\n';
  for (Rank r = 0; r <= m.max_rank(); ++r) {
    out += "rank " + std::to_string(r) + ":";
    for (const World& w : m.worlds()) {
      if (w.rank == r) out += " " + to_bitstring(w.valuation, m.vocabulary().size());
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

RankedModel parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Vocabulary> vocab;
  std::vector<World> worlds;
  std::size_t lineno = 0;
  Rank expected_rank = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(lineno) + ": " + msg, 0, lineno);
    };
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'atoms:' or 'rank N:'");
    const auto head = split_words(std::string_view(line).substr(0, colon));
    const auto body = split_words(std::string_view(line).substr(colon + 1));
    if (head.size() == 1 && head[0] == "atoms") {
      if (vocab) throw fail("duplicate atoms line");
      vocab.emplace();
      for (const auto& a : body) {
        if (!is_valid_atom_name(a)) throw fail("invalid or reserved atom name '" + a + "'");
        if (std::find(vocab->begin(), vocab->end(), a) != vocab->end()) {
          throw fail("duplicate atom '" + a + "'");
        }
        vocab->push_back(a);
      }
      continue;
    }
    if (head.size() != 2 || head[0] != "rank") throw fail("expected 'atoms:' or 'rank N:'");
    if (!vocab) throw fail("rank line before the atoms line");
    Rank r = 0;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(head[1], &used);
      if (used != head[1].size()) throw std::invalid_argument("trailing");
      r = static_cast<Rank>(v);
    } catch (const std::logic_error&) {
      throw fail("bad rank '" + head[1] + "'");
    }
    if (r != expected_rank) {
      throw fail("expected rank " + std::to_string(expected_rank) + ", found " + head[1]);
    }
    if (body.empty()) throw fail("rank " + head[1] + " has no worlds");
    ++expected_rank;
    for (const auto& b : body) {
      try {
        worlds.push_back(World{parse_bitstring(b, vocab->size()), r});
      } catch (const InputError& e) {
        throw fail(e.what());
      }
    }
  }
  if (!vocab) throw ParseError("missing 'atoms:' line", 0, lineno);
  if (worlds.empty()) throw ParseError("model has no worlds", 0, lineno);
  return RankedModel(std::move(*vocab), std::move(worlds));
}

}  // namespace colog
