/*
 *   Copyright 2026 The sbawb Authors
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

// Fixture loading shared by the suites.

#pragma once

#include <memory>
#include <string>

#include "sba/presentation.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(SBAWB_FIXTURES) + "/" + name; }

inline sba::PresentationRef load(const std::string& name) {
  return std::make_shared<const sba::Presentation>(sba::load_presentation(path(name + ".sba")));
}

inline sba::PresentationRef parse(const std::string& text) {
  return std::make_shared<const sba::Presentation>(sba::parse_presentation(text));
}

inline sba::PresentationRef over(const sba::PresentationRef& p, std::uint32_t q) {
  return std::make_shared<const sba::Presentation>(p->with_field(sba::PrimeField(q)));
}

}  // namespace fixture
