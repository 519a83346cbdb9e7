// Copyright 2026 The loe-page Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace loe::detail {

/// Process-wide memo table. Each key is built exactly once even under
/// concurrent first use; distinct keys build concurrently.
template <class Key, class Value>
class OnceCache {
  public:
    template <class Build>
    std::shared_ptr<const Value> get(const Key &key, Build &&build) {
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto &entry = slots_[key];
            if (!entry) {
                entry = std::make_shared<Slot>();
            }
            slot = entry;
        }
        std::call_once(slot->once, [&] { slot->value = std::make_shared<const Value>(build()); });
        return slot->value;
    }

  private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const Value> value;
    };
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<Slot>> slots_;
};

}  // namespace loe::detail
