#include "autseq/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "autseq/errors.hpp"

namespace autseq {
namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::uint64_t number(const std::string& s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

struct Block {
  std::size_t line = 0;
  std::string out;
  std::vector<std::optional<std::uint64_t>> next;
};

}  // namespace

Dfao parse_dfao(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  std::optional<unsigned> base;
  std::optional<std::vector<std::string>> outputs;
  std::optional<std::uint64_t> initial;
  std::map<std::uint64_t, Block> blocks;
  Block* current = nullptr;
  std::uint64_t current_id = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split(raw);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 2 || words[0] != "seqdec-dfao" || words[1] != "v1")
        throw ParseError(lineno, "expected header 'seqdec-dfao v1'");
      header = true;
      continue;
    }
    const std::string& key = words[0];
    if (key == "base") {
      if (base || words.size() != 2) throw ParseError(lineno, "expected one 'base K' line");
      const auto k = number(words[1], lineno, "base");
      if (k < 2 || k > 1024) throw ParseError(lineno, "base must be between 2 and 1024");
      base = static_cast<unsigned>(k);
    } else if (key == "outputs") {
      if (outputs || words.size() < 2) throw ParseError(lineno, "expected one 'outputs l1 l2 ...' line");
      outputs.emplace(words.begin() + 1, words.end());
    } else if (key == "initial") {
      if (initial || words.size() != 2) throw ParseError(lineno, "expected one 'initial SID' line");
      initial = number(words[1], lineno, "state id");
    } else if (key == "state") {
      if (!base || !outputs) throw ParseError(lineno, "'base' and 'outputs' must precede the first state");
      if (words.size() != 3 || words[2].rfind("out=", 0) != 0) throw ParseError(lineno, "expected 'state SID out=LETTER'");
      current_id = number(words[1], lineno, "state id");
      auto [it, inserted] = blocks.try_emplace(current_id);
      if (!inserted) throw ParseError(lineno, "state " + words[1] + " declared twice");
      current = &it->second;
      current->line = lineno;
      current->out = words[2].substr(4);
      current->next.assign(*base, std::nullopt);
    } else if (key == "on") {
      if (!current) throw ParseError(lineno, "transition outside a state block");
      if (words.size() != 4 || words[2] != "->") throw ParseError(lineno, "expected 'on D -> SID'");
      const auto d = number(words[1], lineno, "digit");
      if (d >= *base) throw ParseError(lineno, "digit " + words[1] + " out of range for base " + std::to_string(*base));
      if (current->next[d]) throw ParseError(lineno, "state " + std::to_string(current_id) + " repeats digit " + words[1]);
      current->next[d] = number(words[3], lineno, "state id");
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!header) throw ParseError(lineno, "empty automaton file");
  if (!base) throw ParseError(lineno, "missing 'base' line");
  if (!outputs) throw ParseError(lineno, "missing 'outputs' line");
  if (!initial) throw ParseError(lineno, "missing 'initial' line");
  if (blocks.empty()) throw ParseError(lineno, "no states declared");
  const std::uint64_t n = blocks.size();
  if (blocks.rbegin()->first != n - 1)
    throw ParseError(lineno, "state ids must be 0.." + std::to_string(n - 1));
  if (*initial >= n) throw ParseError(lineno, "initial state " + std::to_string(*initial) + " is not declared");
  std::vector<State> delta;
  std::vector<Letter> out;
  for (const auto& [id, block] : blocks) {
    auto it = std::find(outputs->begin(), outputs->end(), block.out);
    if (it == outputs->end()) throw ParseError(block.line, "state " + std::to_string(id) + " outputs unknown letter '" + block.out + "'");
    out.push_back(static_cast<Letter>(it - outputs->begin()));
    for (unsigned d = 0; d < *base; ++d) {
      if (!block.next[d])
        throw ParseError(block.line, "state " + std::to_string(id) + " has no transition on digit " + std::to_string(d));
      if (*block.next[d] >= n)
        throw ParseError(block.line, "state " + std::to_string(id) + " digit " + std::to_string(d) + " targets undeclared state");
      delta.push_back(static_cast<State>(*block.next[d]));
    }
  }
  return Dfao(*base, std::move(*outputs), std::move(delta), static_cast<State>(*initial), std::move(out));
}

std::string serialize_dfao(const Dfao& m) {
  std::ostringstream out;
  out << "seqdec-dfao v1\nbase " << m.base() << "\noutputs";
  for (const auto& t : m.alphabet()) out << ' ' << t;
  out << "\ninitial " << m.initial() << '\n';
  for (State q = 0; q < m.num_states(); ++q) {
    out << "state " << q << " out=" << m.alphabet()[m.output(q)] << '\n';
    for (Digit d = 0; d < m.base(); ++d) out << "  on " << d << " -> " << m.next(q, d) << '\n';
  }
  return out.str();
}

Dfao load_dfao(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_dfao(text.str());
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_dfao(const std::filesystem::path& path, const Dfao& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << serialize_dfao(m);
}

PermutationSequence parse_psi(std::string_view text, const std::vector<std::string>& alphabet) {
  const Dfao selector = parse_dfao(text);
  std::vector<std::vector<unsigned>> ranks;
  for (const auto& token : selector.alphabet()) {
    std::vector<unsigned> table(alphabet.size(), UINT32_MAX);
    std::istringstream in(token);
    unsigned r = 0;
    for (std::string letter; std::getline(in, letter, ',');) {
      auto it = std::find(alphabet.begin(), alphabet.end(), letter);
      if (it == alphabet.end()) throw InputError("order token '" + token + "' names unknown letter '" + letter + "'");
      auto& slot = table[static_cast<std::size_t>(it - alphabet.begin())];
      if (slot != UINT32_MAX) throw InputError("order token '" + token + "' repeats letter '" + letter + "'");
      slot = r++;
    }
    if (r != alphabet.size()) throw InputError("order token '" + token + "' does not list every letter");
    ranks.push_back(std::move(table));
  }
  PermutationSequence psi{selector, std::move(ranks)};
  validate(psi, alphabet.size());
  return psi;
}

std::string verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["decision"] = v.label;
  if (v.witness) {
    j["witness"] = nlohmann::ordered_json::array();
    for (const auto& x : v.witness->values) {
      if (x <= std::numeric_limits<std::uint64_t>::max())
        j["witness"].push_back(static_cast<std::uint64_t>(x));
      else
        j["witness"].push_back(x.str());
    }
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = nlohmann::ordered_json::object();
  for (const auto& [k, x] : v.stats) j["stats"][k] = x;
  return j.dump();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << v.label << '\n';
  if (v.witness) out << "witness " << to_string(*v.witness) << '\n';
  for (const auto& [k, x] : v.stats) out << "  " << k << ' ' << x << '\n';
  return out.str();
}

}  // namespace autseq
