#ifndef SPRAYLAB_TOOLS_FIXTURES_HPP
#define SPRAYLAB_TOOLS_FIXTURES_HPP

#include <spraylab/json_io.hpp>

#include <map>
#include <string>

namespace spraylab::fixtures {

/// Regenerates every worked example shipped as a golden file, keyed by
/// fixture name (file name is <name>.json). Fully deterministic.
std::map<std::string, json> generate();

}  // namespace spraylab::fixtures

#endif
