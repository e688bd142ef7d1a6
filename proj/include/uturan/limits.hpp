#pragma once

namespace uturan {

/// Bounds for the exhaustive searches. The defaults match the sizes the
/// project's searches are exercised at; callers may relax or tighten them.
struct SearchLimits {
    int max_vanishing_n = 12;          // exhaustive ordering search
    int max_palette_n = 12;            // palette embedding search
    int max_palette_colors = 4;
    int max_certify_n = 10;            // full bipartition + ordering search
    int max_certify_edges = 20;        // 2^m bipartitions enumerated
    long max_digraph_branches = 46656; // 6^(components-1) symmetry choices
    int max_canonical_n = 10;
    int max_subiso_pattern_n = 8;
    int max_subiso_host_n = 16;
};

} // namespace uturan
