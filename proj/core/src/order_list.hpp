#ifndef FLOWCERT_SRC_ORDER_LIST_HPP
#define FLOWCERT_SRC_ORDER_LIST_HPP

#include <cstdint>
#include <vector>

namespace flowcert::detail {

// Linked list with integer tags supporting O(1) order queries; tags are
// respread over a growing neighbourhood when an insertion finds no gap.
class OrderList {
public:
    explicit OrderList(std::size_t capacity)
        : tag_(capacity, 0), prev_(capacity, none), next_(capacity, none) {}

    // Appends `id` at the end of the list.
    void push_back(std::uint32_t id) {
        if (tail_ == none) {
            head_ = tail_ = id;
            tag_[id] = std::uint64_t(1) << 61;
            return;
        }
        link_after(tail_, id);
    }

    void insert_after(std::uint32_t at, std::uint32_t id) { link_after(at, id); }

    void insert_before(std::uint32_t at, std::uint32_t id) {
        // Every caller keeps a sentinel in front, so `at` is never the head.
        link_after(prev_[at], id);
    }

    bool less(std::uint32_t a, std::uint32_t b) const { return tag_[a] < tag_[b]; }

    std::uint32_t next(std::uint32_t id) const { return next_[id]; }
    std::uint32_t head() const { return head_; }

    static constexpr std::uint32_t none = 0xFFFFFFFFu;

private:
    static constexpr std::uint64_t top = std::uint64_t(1) << 62;

    void link_after(std::uint32_t at, std::uint32_t id) {
        std::uint64_t hi = next_[at] == none ? top : tag_[next_[at]];
        if (hi - tag_[at] < 2) {
            respread(at);
            hi = next_[at] == none ? top : tag_[next_[at]];
        }
        tag_[id] = tag_[at] + (hi - tag_[at]) / 2;
        prev_[id] = at;
        next_[id] = next_[at];
        if (next_[at] != none)
            prev_[next_[at]] = id;
        else
            tail_ = id;
        next_[at] = id;
    }

    // Finds the smallest aligned tag range around `at` that is sparse enough
    // and spaces its members evenly.
    void respread(std::uint32_t at) {
        std::uint32_t lo = at, hi = at;
        std::uint64_t count = 1;
        for (int bits = 1; bits < 62; ++bits) {
            const std::uint64_t width = std::uint64_t(1) << bits;
            const std::uint64_t base = tag_[at] & ~(width - 1);
            while (prev_[lo] != none && tag_[prev_[lo]] >= base) {
                lo = prev_[lo];
                ++count;
            }
            while (next_[hi] != none && tag_[next_[hi]] < base + width) {
                hi = next_[hi];
                ++count;
            }
            // Density threshold shrinks geometrically with the range size.
            if ((count + 1) * (count + 1) * 4 < width) {
                const std::uint64_t step = width / (count + 1);
                std::uint64_t t = base;
                for (std::uint32_t x = lo;; x = next_[x]) {
                    t += step;
                    tag_[x] = t;
                    if (x == hi)
                        break;
                }
                return;
            }
        }
        // Whole tag space: spread everything.
        std::uint64_t total = 0;
        for (std::uint32_t x = head_; x != none; x = next_[x])
            ++total;
        const std::uint64_t step = top / (total + 1);
        std::uint64_t t = 0;
        for (std::uint32_t x = head_; x != none; x = next_[x]) {
            t += step;
            tag_[x] = t;
        }
    }

    std::vector<std::uint64_t> tag_;
    std::vector<std::uint32_t> prev_, next_;
    std::uint32_t head_ = none, tail_ = none;
};

} // namespace flowcert::detail

#endif
