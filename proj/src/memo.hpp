#pragma once

#include <map>
#include <mutex>

namespace qtk::detail {

// Mutex-guarded memo table. The value is computed outside the lock, so two
// threads may race to fill the same key; both compute the same value.
template <class Key, class Value>
class Memo {
public:
    template <class F>
    Value get(const Key& key, F&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard lock(mutex_);
        return table_.emplace(key, std::move(v)).first->second;
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

private:
    std::mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace qtk::detail
