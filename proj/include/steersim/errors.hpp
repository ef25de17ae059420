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

#ifndef STEERSIM_ERRORS_HPP
#define STEERSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace steersim {

/// Base class for all library errors.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Incompatible or out-of-contract matrix/vector dimensions.
class dimension_error : public error {
  public:
    using error::error;
};

/// All-zero channel where a nontrivial decomposition is required.
class degenerate_channel_error : public error {
  public:
    using error::error;
};

/// A vector that must be unit-norm is not.
class normalization_error : public error {
  public:
    using error::error;
};

/// Requested transmit power is negative (overhead exceeds the budget).
class infeasible_power_error : public error {
  public:
    using error::error;
};

/// Steering channel is rank deficient or numerically near-singular.
class singular_channel_error : public error {
  public:
    using error::error;
};

/// Quadrature choice has a component along the desired direction.
class invalid_quadrature_error : public error {
  public:
    using error::error;
};

/// Scalar argument outside the mathematical domain of an operation.
class domain_error : public error {
  public:
    using error::error;
};

/// Topological ordering requested on a graph that contains a cycle.
class not_a_dag_error : public error {
  public:
    using error::error;
};

/// Exact cycle-breaking search refused: vertex count above the budget.
class budget_exceeded_error : public error {
  public:
    using error::error;
};

/// Network state lacks a channel realization required by the planner.
class incomplete_state_error : public error {
  public:
    using error::error;
};

/// Malformed scenario/sweep configuration or input file.
class config_error : public error {
  public:
    using error::error;
};

} // namespace steersim

#endif
