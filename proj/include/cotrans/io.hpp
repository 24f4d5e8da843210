#pragma once

#include <istream>
#include <string>
#include <variant>

#include "cotrans/gammoid.hpp"
#include "cotrans/transversal.hpp"

namespace cotrans {

struct DigraphInput {
  WeightedDigraph digraph;
  SinkSet sinks;
};

using Input = std::variant<Presentation, DigraphInput>;

// Line-oriented text formats; '#' starts a comment.
//
//   presentation            digraph
//   ground <n>              vertices <n>
//   set <e1> <e2> ...       sinks <a1> <a2> ...
//                           edge <u> <v> [<num>/<den>]
//
// Throws ParseError with 1-based line and column.
Input parse_input(std::istream& in);
Input parse_input_file(const std::string& path);

// Canonical renderings; parse_input reads them back to equal objects.
std::string render(const Presentation& p);
std::string render(const WeightedDigraph& g, const SinkSet& a);

}  // namespace cotrans
