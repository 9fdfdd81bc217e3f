#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Sign : std::int8_t { negative = -1, positive = 1 };

inline Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::positive : Sign::negative;
}

inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

inline int to_int(Sign s) { return static_cast<int>(s); }

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
bool contains(const EdgeSet& s, EdgeId e);
bool disjoint(const EdgeSet& a, const EdgeSet& b);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration or search budget was exhausted.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace sigcover
