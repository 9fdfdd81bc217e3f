#include "sigcover/types.hpp"

#include <algorithm>
#include <iterator>

namespace sigcover {

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const EdgeSet& s, EdgeId e) { return std::binary_search(s.begin(), s.end(), e); }

bool disjoint(const EdgeSet& a, const EdgeSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i;
        else ++j;
    }
    return true;
}

}  // namespace sigcover
