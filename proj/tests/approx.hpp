/*
 * Copyright 2026 The atomwall developers
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

#ifndef ATOMWALL_TESTS_APPROX_HPP
#define ATOMWALL_TESTS_APPROX_HPP

#include <limits>

#include "doctest.h"

// doctest::Approx adds an absolute floor of epsilon * 1.0 by default, which
// swallows every quantity of atomic size. This variant is relative, with a
// floor of the smallest normal double so that exact zeros still compare.
inline doctest::Approx approx(double value) {
  return doctest::Approx(value).scale(std::numeric_limits<double>::min());
}

#endif
