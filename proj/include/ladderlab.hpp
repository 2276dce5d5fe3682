/*
 *   Copyright 2026 The ladderlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LADDERLAB_LADDERLAB_HPP
#define LADDERLAB_LADDERLAB_HPP

#include "ladderlab/builtin_models.hpp"
#include "ladderlab/component_form.hpp"
#include "ladderlab/conditions.hpp"
#include "ladderlab/correspondence.hpp"
#include "ladderlab/enumerate.hpp"
#include "ladderlab/families.hpp"
#include "ladderlab/hasse.hpp"
#include "ladderlab/kernel_model.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/ladder_io.hpp"
#include "ladderlab/model_io.hpp"
#include "ladderlab/theta.hpp"

#endif  // LADDERLAB_LADDERLAB_HPP
