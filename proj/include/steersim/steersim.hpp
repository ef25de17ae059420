// SPDX-License-Identifier: Apache-2.0
//
// steersim: link-level simulation of transmitter-side interference steering
// for multi-BSS MIMO WLANs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef STEERSIM_STEERSIM_HPP
#define STEERSIM_STEERSIM_HPP

#include "steersim/baselines.hpp"
#include "steersim/controller.hpp"
#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"
#include "steersim/netgraph.hpp"
#include "steersim/rng.hpp"
#include "steersim/scenario.hpp"
#include "steersim/steering.hpp"
#include "steersim/sweep.hpp"

#endif
