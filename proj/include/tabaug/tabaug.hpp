// Copyright 2026 The tabaug Authors. All Rights Reserved.
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

#include "tabaug/geometry.hpp"
#include "tabaug/image.hpp"
#include "tabaug/rng.hpp"
#include "tabaug/table.hpp"
#include "tabaug/augment.hpp"
#include "tabaug/standard_augment.hpp"
#include "tabaug/categories.hpp"
#include "tabaug/tree.hpp"
#include "tabaug/sampling.hpp"
#include "tabaug/pixel_gt.hpp"
#include "tabaug/metrics.hpp"
#include "tabaug/annotation_io.hpp"
#include "tabaug/png_io.hpp"
#include "tabaug/dataset.hpp"
#include "tabaug/node_cache.hpp"
#include "tabaug/report_io.hpp"
