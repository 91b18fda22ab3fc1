#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "chu/chain.hpp"
#include "chu/morphism.hpp"
#include "chu/space.hpp"

namespace chu {
namespace io {

/// Resolves a referenced file to its contents; used by the morphism parser
/// when `source`/`target` name a path instead of an inline payload.
using FileReader = std::function<std::string(const std::string&)>;

/// Bit-exact space format (LF line endings, single spaces):
///   chu v1
///   sigma <sym> ...
///   objects <label> ...
///   attributes <label> ...
///   matrix
///   <|X| symbols per object line>
/// Labels and symbols must be whitespace-free.
std::string emit_space_text(const Space& space);
Space parse_space_text(std::string_view text);

/// {"format":"chu-v1","sigma":[...],"objects":[...],"attributes":[...],
///  "matrix":[[...],...]} with symbols as their alphabet strings.
std::string emit_space_json(const Space& space);
Space parse_space_json(std::string_view text);

/// Auto-detects text vs JSON payloads (JSON starts with '{').
Space parse_space(std::string_view text);

/// Morphism format:
///   chumorph v1
///   source inline|<path>     (inline: a chu v1 payload follows)
///   target inline|<path>
///   forward <obj>-><obj> ...
///   backward <attr>-><attr> ...
/// The morphism is emitted with inline endpoints. Inside chain files the
/// endpoints are `-`, bound to the surrounding space blocks.
std::string emit_morphism_text(const Morphism& m);
Morphism parse_morphism_text(std::string_view text, const FileReader& read_file = {});

std::string emit_morphism_json(const Morphism& m);
Morphism parse_morphism_json(std::string_view text, const FileReader& read_file = {});

/// Explicit chain file: `chuchain v1`, `category iC|iE|iB`, then alternating
/// `space` blocks (inline chu v1 payload) and `morphism` blocks (inline
/// chumorph v1 payload with `-` endpoints). Generated chains round-trip as
/// `chugen v1` / `rule <id>` / `param <key> <value>` instead.
std::string emit_chain_text(const Chain& chain);
Chain parse_chain_text(std::string_view text);

}  // namespace io
}  // namespace chu
