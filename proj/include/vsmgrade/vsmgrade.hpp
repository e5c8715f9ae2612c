// Copyright 2026 The vsmgrade Authors
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

#ifndef VSMGRADE_VSMGRADE_HPP
#define VSMGRADE_VSMGRADE_HPP

#include "vsmgrade/error.hpp"
#include "vsmgrade/types.hpp"
#include "vsmgrade/csv.hpp"
#include "vsmgrade/ingest.hpp"
#include "vsmgrade/preprocess.hpp"
#include "vsmgrade/ngram.hpp"
#include "vsmgrade/vsm.hpp"
#include "vsmgrade/similarity.hpp"
#include "vsmgrade/scoring.hpp"
#include "vsmgrade/evaluation.hpp"
#include "vsmgrade/report.hpp"

#endif  // VSMGRADE_VSMGRADE_HPP
