#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lved/graph.hpp"

namespace lved {

/// B = unconstrained, R = must be in the dominating set.
enum class Tag : std::uint8_t { kB, kR };

/// Tree with a demand k(e) ∈ {0,1,2} per edge and a tag per vertex.
struct LabelledTree {
  Graph tree;
  std::vector<std::uint8_t> demand;  // indexed by edge id
  std::vector<Tag> tag;              // indexed by vertex id

  /// Throws StructureError for non-trees, InputError for bad labels.
  void validate() const;
};

/// k ≡ 2 and t ≡ B, under which l(k,t)-domination is liar's ve-domination.
LabelledTree init_labels(const Graph& tree);

// Text format: "n", then n-1 lines "u v k", then a line with n tags from
// {B,R} (whitespace between tags optional).
LabelledTree parse_labelled_tree(std::istream& in);
LabelledTree parse_labelled_tree(const std::string& text);
std::string emit_labelled_tree(const LabelledTree& t);

}  // namespace lved
