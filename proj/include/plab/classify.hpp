//------------------------------------------------------------------------------
//
//   Copyright 2026 The plab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plab/model.hpp"

namespace plab {

/// Components connected to the seeds in the undirected graph restricted to
/// required edges. Seeds must name existing components.
std::set<std::string> required_closure(const ProductGraph& product,
                                       const std::set<std::string>& seeds);

/// Partitions a product's components into required and optional.
///
/// Required components are those connected to the effective start set
/// (start_set plus every component declared required) through required
/// edges, traversed in either direction; everything else is optional. When
/// the start set is empty and the declared classification covers every
/// component, the declaration is returned as-is. Isolated components are
/// never reached by the traversal and are reported alongside the partition.
///
/// Throws Error(no_classification_basis) when neither basis is usable and
/// Error(start_not_found) when a start name does not exist.
Classification classify_components(const ProductGraph& product);

/// Same, with the product's start set replaced by `start_override`.
Classification classify_components(const ProductGraph& product,
                                   const std::optional<std::vector<std::string>>& start_override);

/// Components with no incident edge in either direction.
std::set<std::string> find_isolated(const ProductGraph& product);

}  // namespace plab
