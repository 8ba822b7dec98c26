#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicircle/surface.hpp"

namespace bicircle {

/// Named fixtures reachable from the CLI. Most are surfaces; the
/// Beauregard polynomial ships as a plain polynomial because its point of
/// interest is the factorization behaviour, not an image in space.
struct NamedExample {
    std::string name;
    std::string description;
    std::optional<SurfaceSpec> spec;
    std::optional<QPoly2> poly;
};

const std::vector<NamedExample>& builtin_examples();
const NamedExample& find_example(const std::string& name);

/// The examples that are surfaces (five of them).
std::vector<const NamedExample*> surface_examples();

} // namespace bicircle
