#ifndef AFFSUB_SEARCH_HPP
#define AFFSUB_SEARCH_HPP

#include "affsub/subtrans.hpp"

#include <cstdint>
#include <vector>

namespace affsub {

struct SearchOptions {
    TupleMode mode = TupleMode::exhaustive();
    bool stop_on_first = false;
    unsigned workers = 1;
};

struct TupleWitness {
    std::uint64_t tuple_index = 0;
    ElementTuple tuple;
    SubtransDecision decision;
};

struct SearchResult {
    AlphaCoordinates alpha;
    std::vector<TupleWitness> witnesses;  // ascending tuple_index
    std::uint64_t tuples_examined = 0;
};

/// Decides every tuple of arity |alpha| + 1 for a fixed alpha. Output is
/// identical for any worker count; with stop_on_first it is the witness of
/// lowest tuple index.
SearchResult search_tuples(const AlphaCoordinates& alpha, const FiniteMatrixGroup& group,
                           const SearchOptions& options = {});

/// phi once, then the alpha search. Throws InputError if x_{d+1} is outside
/// the affine hull of the prefix (the reduction does not apply).
SearchResult search_tuples(const PointConfiguration& config, const FiniteMatrixGroup& group,
                           const SearchOptions& options = {});

} // namespace affsub

#endif
