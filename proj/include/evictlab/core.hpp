#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace evictlab {

// Hard cap so a configuration of guards always fits one machine word.
inline constexpr int max_vertices = 64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input larger than a solver or format supports (n > 64, desk-scale caps).
struct CapacityError : Error {
    using Error::Error;
};

// A caller violated an operation's precondition.
struct ContractError : Error {
    using Error::Error;
};

struct TimeoutError : Error {
    using Error::Error;
};

class ParseError : public Error {
public:
    enum class Kind { bad_header, bad_char, too_large, truncated, bad_format };

    ParseError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A set of vertex indices 0..63, one word wide.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    // The n lowest vertices.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool test(int v) const { return bits_ >> v & 1; }
    VertexSet& set(int v) { bits_ |= std::uint64_t{1} << v; return *this; }
    VertexSet& reset(int v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains_all(VertexSet s) const { return (s.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet s) const { return (bits_ & s.bits_) != 0; }

    // Lowest member, or -1.
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | std::uint64_t{1} << v); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on configurations viewed as sorted vertex lists:
/// the set owning the smallest element of the symmetric difference is smaller.
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    return (a.bits() & (d & ~(d - 1))) != 0;
}

/// Cooperative deadline threaded through long-running solvers.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_ms(long ms) {
        Deadline d;
        d.enabled_ = true;
        d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return d;
    }

    bool expired() const {
        return enabled_ && std::chrono::steady_clock::now() >= at_;
    }

    void check(const char* what) const {
        if (expired()) throw TimeoutError(std::string("timeout in ") + what);
    }

private:
    std::chrono::steady_clock::time_point at_{};
    bool enabled_ = false;
};

}  // namespace evictlab
