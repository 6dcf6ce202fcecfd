#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "autseq/deciders.hpp"
#include "autseq/dfao.hpp"
#include "autseq/orbit.hpp"

namespace autseq {

/// Line-oriented automaton text:
///
///   seqdec-dfao v1
///   base 2
///   outputs 0 1
///   initial 0
///   state 0 out=0
///     on 0 -> 0
///     on 1 -> 1
///   ...
///
/// '#' starts a comment. State ids are 0..n-1 in any block order.
/// Throws ParseError with the line number on malformed input.
Dfao parse_dfao(std::string_view text);
std::string serialize_dfao(const Dfao& m);

Dfao load_dfao(const std::filesystem::path& path);
void save_dfao(const std::filesystem::path& path, const Dfao& m);

/// A Dfao file whose output tokens are comma-separated letter lists, each
/// ordering `alphabet` from smallest to largest.
PermutationSequence parse_psi(std::string_view text, const std::vector<std::string>& alphabet);

/// {"decision": label, "witness": [...] or null, "stats": {...}}. Witness
/// values beyond 64 bits are written as decimal strings.
std::string verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);

}  // namespace autseq
