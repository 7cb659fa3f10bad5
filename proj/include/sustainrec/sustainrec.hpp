/*
 * Copyright 2026 The sustainrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "sustainrec/crosscut_metrics.hpp"
#include "sustainrec/csv.hpp"
#include "sustainrec/econ_metrics.hpp"
#include "sustainrec/env_metrics.hpp"
#include "sustainrec/ingest.hpp"
#include "sustainrec/kernels.hpp"
#include "sustainrec/manifest.hpp"
#include "sustainrec/report.hpp"
#include "sustainrec/rerank.hpp"
#include "sustainrec/social_metrics.hpp"
#include "sustainrec/synth.hpp"
#include "sustainrec/types.hpp"
#include "sustainrec/validate.hpp"
#include "sustainrec/version.hpp"
