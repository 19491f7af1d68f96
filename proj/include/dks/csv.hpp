// Copyright 2026 The dks Authors.
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

#ifndef DKS_CSV_HPP_
#define DKS_CSV_HPP_

#include <string>

#include "dks/point_set.hpp"

namespace dks {

// Strict CSV reader: UTF-8, LF or CRLF, exactly `dim` decimal fields per row,
// no NaN/infinity/empty fields. A non-numeric first row is treated as a
// header and skipped. Errors name the offending 1-based line.
PointSet load_csv(const std::string& path, int dim);

// Writes one row per point with 17 significant digits, so a load round-trips
// coordinates bit-exactly.
void save_csv(const std::string& path, const PointSet& ps);

}  // namespace dks

#endif  // DKS_CSV_HPP_
