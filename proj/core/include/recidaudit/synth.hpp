// Copyright 2026 The recidaudit Authors
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

#ifndef RECIDAUDIT_SYNTH_HPP_
#define RECIDAUDIT_SYNTH_HPP_

#include <cstdint>
#include <vector>

#include "recidaudit/records.hpp"

namespace recidaudit {

/// Deterministic synthetic two-year-schema records shaped like the flaw
/// under audit: screen dates span 2013-01-01..2014-12-31, exactly
/// post_cutoff_positive_excess recidivist records fall after the cutoff,
/// and no non-recidivist does. Identical (seed, n, cutoff, excess) calls
/// return identical records. Throws std::domain_error on invalid counts.
std::vector<PersonRecord> synth_fixture(std::uint64_t seed, int n, Date cutoff,
                                        int post_cutoff_positive_excess);

}  // namespace recidaudit

#endif  // RECIDAUDIT_SYNTH_HPP_
