#include "bn/ring.hpp"

#include "bn/errors.hpp"

namespace bn {

int Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::pair<std::string, int>> vars_with_weights) {
    auto r = std::make_shared<Ring>();
    for (auto& [name, w] : vars_with_weights) {
        if (w <= 0) throw UsageError("Ring: weights must be positive");
        if (r->index_of(name) >= 0) throw UsageError("Ring: duplicate variable " + name);
        r->vars.push_back(std::move(name));
        r->weights.push_back(w);
    }
    return r;
}

bool same_ring(const RingPtr& x, const RingPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
}

const RingPtr& abg_ring() {
    static const RingPtr ring = make_ring({{"a", 1}, {"b", 2}, {"g", 3}});
    return ring;
}

}  // namespace bn
