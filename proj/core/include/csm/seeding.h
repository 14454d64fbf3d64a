// Copyright 2026 The CSM Authors.
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

#ifndef CSM_SEEDING_H_
#define CSM_SEEDING_H_

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace csm {

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent sub-stream seed from a base seed, a stream name and
// a list of integer coordinates (round, epoch, target id, ...). The result
// depends only on its arguments, never on call order, so draws are identical
// no matter which algorithm or thread asks for them.
constexpr uint64_t DeriveSeed(uint64_t base, std::string_view stream,
                              std::initializer_list<uint64_t> coords = {}) {
  uint64_t h = Mix64(base);
  for (char c : stream) h = Mix64(h ^ static_cast<unsigned char>(c));
  for (uint64_t c : coords) h = Mix64(h ^ c);
  return h;
}

}  // namespace csm

#endif  // CSM_SEEDING_H_
