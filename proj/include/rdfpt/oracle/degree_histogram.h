// Copyright 2026 The rdfpt Authors.
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

#include <cstdint>
#include <map>

#include "rdfpt/storage/property_table.h"

namespace rdfpt::oracle {

// degree (objects per subject) -> number of subjects. Job 1 counts the
// cells of each row, job 2 counts subjects per degree.
std::map<std::uint64_t, std::uint64_t> degree_histogram(const storage::PropertyTable& table,
                                                        std::size_t parallelism = 1);

}  // namespace rdfpt::oracle
