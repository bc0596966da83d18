// Copyright 2026 The ella Authors
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

#ifndef ELLA_CHECK_HPP_
#define ELLA_CHECK_HPP_

#include <stdexcept>
#include <string>

// Internal consistency checks. Failures throw std::logic_error so tests can
// observe them. Compiled out unless ELLA_DCHECKS is defined.
#define ELLA_CHECK(cond, msg)                                                   \
  do {                                                                          \
    if (!(cond)) throw std::logic_error(std::string("check failed: ") + (msg)); \
  } while (0)

#ifdef ELLA_DCHECKS
#define ELLA_DCHECK(cond, msg) ELLA_CHECK(cond, msg)
#else
#define ELLA_DCHECK(cond, msg) \
  do {                         \
  } while (0)
#endif

#endif  // ELLA_CHECK_HPP_
