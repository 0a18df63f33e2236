#pragma once

#include <string>

#include "qorder/graph.hpp"

namespace qorder {

// Canonical byte string identifying the isomorphism class: the graph6
// encoding of the lexicographically minimal relabeling.  Two graphs have
// equal certificates iff they are isomorphic.
using Certificate = std::string;

inline constexpr int kDefaultCertificateLimit = 16;

// Throws std::invalid_argument when g.order() exceeds the limit.
Certificate canonical_certificate(const Graph& g, int limit = kDefaultCertificateLimit);

// The relabeling realizing the certificate (new_label = perm[old_label]).
std::vector<int> canonical_labeling(const Graph& g, int limit = kDefaultCertificateLimit);

bool isomorphic(const Graph& a, const Graph& b, int limit = kDefaultCertificateLimit);

}  // namespace qorder
