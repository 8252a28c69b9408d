#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <utility>

namespace digitree::detail {

/// A thunk evaluated at most once; concurrent forcers all observe the same value.
template <class T>
class Lazy {
public:
    explicit Lazy(std::function<T()> thunk) : thunk_(std::move(thunk)) {}
    explicit Lazy(T value) : value_(std::move(value)) { std::call_once(once_, [] {}); }

    Lazy(const Lazy&) = delete;
    Lazy& operator=(const Lazy&) = delete;

    const T& force() const {
        std::call_once(once_, [this] {
            value_.emplace(thunk_());
            thunk_ = nullptr;  // release captured state once evaluated
        });
        return *value_;
    }

private:
    mutable std::once_flag once_;
    mutable std::function<T()> thunk_;
    mutable std::optional<T> value_;
};

}  // namespace digitree::detail
