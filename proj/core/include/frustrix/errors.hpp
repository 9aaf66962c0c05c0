#pragma once

#include <stdexcept>
#include <string>

namespace frustrix {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a hard size limit (model n > 64, solver n > cap, ...).
struct capacity_error : error {
    explicit capacity_error(const std::string& what) : error(what) {}
};

// Operation requires a connected graph.
struct connectivity_error : error {
    explicit connectivity_error(const std::string& what) : error(what) {}
};

// Vector length does not match the graph (switch states, signature bits).
struct dimension_error : error {
    explicit dimension_error(const std::string& what) : error(what) {}
};

// Cut side is empty or the whole vertex set.
struct invalid_cut_error : error {
    explicit invalid_cut_error(const std::string& what) : error(what) {}
};

// Edge or vertex index out of range.
struct index_error : error {
    explicit index_error(const std::string& what) : error(what) {}
};

// Graph would violate a model invariant, or a family generator got bad parameters.
struct construction_error : error {
    explicit construction_error(const std::string& what) : error(what) {}
};

// girth() on a forest.
struct no_cycle_error : error {
    explicit no_cycle_error(const std::string& what) : error(what) {}
};

// Two graphs expected to share an underlying graph do not.
struct mismatch_error : error {
    explicit mismatch_error(const std::string& what) : error(what) {}
};

// A reduction rule's side conditions do not hold for the given match.
struct rule_inapplicable_error : error {
    explicit rule_inapplicable_error(const std::string& what) : error(what) {}
};

// Malformed graph6 / signature input.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace frustrix
