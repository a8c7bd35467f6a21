#pragma once

#include <string>

#include "hpfold/core.hpp"

namespace hpfold {

enum class RenderFormat : std::uint8_t { ascii, svg };

RenderFormat render_format_from_name(std::string_view name);

/// Deterministic drawing of an embedded chain. ASCII puts nodes on a
/// half-spaced character grid ('H'/'P' glyphs, '-'/'|' chain edges,
/// '='/':' bond edges). SVG is a self-contained document with one circle
/// per node and one line per chain edge and per bond.
std::string render(const Chain& chain, const Folding& folding, RenderFormat format);

}  // namespace hpfold
