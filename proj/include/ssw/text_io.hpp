// Copyright 2026-present the ssw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "ssw/elementary.hpp"
#include "ssw/shift_space.hpp"
#include "ssw/splitting.hpp"
#include "ssw/transpose_free.hpp"

namespace ssw::io {

// Matrix files: first line "rows cols", then one line per row. '#' starts a
// comment. All parse errors are ErrorKind::MalformedInput.

IntMatrix
parse_matrix(std::istream& in, const std::string& origin = "<input>");
IntMatrix
read_matrix(const std::filesystem::path& path);
TransitionMatrix
read_transition_matrix(const std::filesystem::path& path);
std::string
format_matrix(const IntMatrix& m);

/// "i->j#k" (1-based) to the edge id of `g`.
std::size_t
parse_edge_label(const DirectedMultigraph& g, const std::string& label);

/// Lines "I: e e|e ..." with '|' between blocks; unlisted vertices get one
/// block (or none when they have no incident edges). Blocks are given in
/// the caller's order and normalized by EdgePartition.
template <SplitKind K>
EdgePartition<K>
parse_partition(std::istream& in, const DirectedMultigraph& g, const std::string& origin = "<input>");

template <SplitKind K>
EdgePartition<K>
read_partition(const std::filesystem::path& path, const DirectedMultigraph& g);

template <SplitKind K>
std::string
format_partition(const EdgePartition<K>& p, const DirectedMultigraph& g);

/// "step <C-file> <D-file>" per line; paths relative to the manifest.
SSEChain
read_chain_manifest(const std::filesystem::path& path);

/// "tf <side> <move> <matrix-file> <partition-file>" per line. The matrix
/// file holds the unsplit chain matrix; the partition is an out-partition
/// of it (direct) or an in-partition of it (transposed).
std::vector<TFStep>
read_tf_manifest(const std::filesystem::path& path);

/// "depth k" then "word : value" lines, words as edge labels.
CylinderFunction
parse_cylinder_function(std::istream& in, const TransitionMatrix& a, const std::string& origin = "<input>");
std::string
format_cylinder_function(const CylinderFunction& f, const TransitionMatrix& a);

}  // namespace ssw::io
