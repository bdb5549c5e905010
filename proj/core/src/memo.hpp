#ifndef GPM_SRC_MEMO_HPP
#define GPM_SRC_MEMO_HPP

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace gpm::detail
{

// Grow-only prefix cache. Readers share the lock; a miss extends the
// prefix under the exclusive lock. fill(i, prefix) must be pure and must
// not re-enter the same table.
template <typename T>
class MemoTable
{
public:
    template <typename Fill>
    T get(std::size_t n, Fill &&fill) const
    {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size()) {
                return values_[n];
            }
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= n) {
            T next = fill(values_.size(), static_cast<const std::vector<T> &>(values_));
            values_.push_back(std::move(next));
        }
        return values_[n];
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::vector<T> values_;
};

} // namespace gpm::detail

#endif
