#include <chrono>

#include "sigcover/construct.hpp"
#include "sigcover/parallel.hpp"

namespace sigcover {

std::vector<CorpusCover> cover_corpus(const std::vector<SignedGraph>& graphs, bool parallel, const OracleCaps& caps) {
    std::vector<CorpusCover> out(graphs.size());
    for_each_index(graphs.size(), parallel, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        CorpusCover& c = out[i];
        try {
            c.result = construct_six_cover(graphs[i], caps);
            c.verified = static_cast<bool>(verify_k_cover(graphs[i], c.result->family, 6));
        } catch (const Error& e) {
            c.error = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return out;
}

}  // namespace sigcover
