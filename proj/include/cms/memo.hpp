#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace cms {

// Thread-safe memo table with stable references. The value is computed
// outside the lock; if two threads race, the first insertion wins and both
// see semantically equal results.
template <class Key, class Value>
class Memo {
public:
    template <class Compute>
    const Value& get(const Key& key, Compute&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(compute());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

    const Value* find(const Key& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second.get();
    }

    void put(const Key& key, Value value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.try_emplace(key, std::make_unique<Value>(std::move(value)));
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

    std::size_t size() {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

private:
    std::mutex mu_;
    std::map<Key, std::unique_ptr<Value>> map_;
};

}  // namespace cms
