// Copyright 2026 The arrowkit Authors
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

#ifndef ARROWKIT_VERSION_HPP_
#define ARROWKIT_VERSION_HPP_

namespace arrowkit {

inline constexpr const char* kToolVersion = "arrowkit 1.0.0";

}  // namespace arrowkit

#endif  // ARROWKIT_VERSION_HPP_
