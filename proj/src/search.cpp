#include "affsub/search.hpp"

#include "affsub/errors.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace affsub {

namespace {

constexpr std::uint64_t kStopFirstBlock = 1 << 14;

void scan(const TupleEnumerator& tuples, const AlphaCoordinates& alpha, std::uint64_t begin, std::uint64_t end,
          std::uint64_t stride, std::vector<TupleWitness>& found) {
    for (std::uint64_t i = begin; i < end; i += stride) {
        SubtransInstance inst{alpha, tuples.at(i)};
        SubtransDecision decision = decide(inst);
        if (!decision.is_witness()) continue;
        if (!verify_witness(inst, decision.b, decision.a))
            throw std::logic_error("search_tuples: decide produced a witness that fails verification");
        found.push_back(TupleWitness{i, std::move(inst.tuple), std::move(decision)});
    }
}

} // namespace

SearchResult search_tuples(const AlphaCoordinates& alpha, const FiniteMatrixGroup& group,
                           const SearchOptions& options) {
    if (alpha.size() == 0) throw InputError("search_tuples: alpha must be nonempty");
    const TupleEnumerator tuples(group, alpha.size() + 1, options.mode);
    const unsigned workers = std::max(1u, options.workers);
    const std::uint64_t block = options.stop_on_first ? kStopFirstBlock : std::max<std::uint64_t>(tuples.size(), 1);

    SearchResult result{alpha, {}, 0};
    for (std::uint64_t start = 0; start < tuples.size(); start += block) {
        const std::uint64_t end = std::min(tuples.size(), start + block);
        std::vector<TupleWitness> found;
        if (workers == 1) {
            scan(tuples, alpha, start, end, 1, found);
        } else {
            std::vector<std::vector<TupleWitness>> partial(workers);
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        scan(tuples, alpha, start + w, end, workers, partial[w]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
            for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(found));
            std::sort(found.begin(), found.end(),
                      [](const TupleWitness& a, const TupleWitness& b) { return a.tuple_index < b.tuple_index; });
        }
        if (options.stop_on_first && !found.empty()) {
            result.tuples_examined = found.front().tuple_index + 1;
            result.witnesses.push_back(std::move(found.front()));
            return result;
        }
        result.tuples_examined = end;
        std::move(found.begin(), found.end(), std::back_inserter(result.witnesses));
    }
    return result;
}

SearchResult search_tuples(const PointConfiguration& config, const FiniteMatrixGroup& group,
                           const SearchOptions& options) {
    auto alpha = phi(config);
    if (!alpha)
        throw InputError("not applicable: x_" + std::to_string(config.intrinsic_dim() + 1) +
                         " lies outside the affine hull of x_0..x_" + std::to_string(config.intrinsic_dim()));
    return search_tuples(*alpha, group, options);
}

} // namespace affsub
