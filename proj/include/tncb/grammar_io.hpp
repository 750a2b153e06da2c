#pragma once

#include <string>

#include "tncb/signs.hpp"

namespace tncb {

/// Parses the line-oriented grammar format:
///
///   ; comment
///   feature <name>
///   rule <name>: <Cat>[f=v,...] -> <Cat>[f=v,...] <Cat>[f=v,...] [fuse]
///   morph <left-orth> + <right-orth> = <fused-orth>
///
/// Uppercase-initial tokens in value position are variables, digit tokens
/// are indices, anything else is an atomic constant. Rules keep file order.
/// Throws ParseError (with line number) on syntax errors, undeclared
/// features, duplicate rule names, or mother variables missing from the
/// daughters.
Grammar parse_grammar(const std::string& text);

Grammar load_grammar_file(const std::string& path);

}  // namespace tncb
