#pragma once

#include <random>
#include <string>
#include <string_view>

#include "paqa/dsl.hpp"
#include "paqa/oracle.hpp"

namespace paqa::testing {

std::string fixture_path(std::string_view name);
std::string read_file(const std::string& path);
SpecDocument load_fixture(std::string_view name);
SpecDocument parse(std::string_view text);

/// "a c b" -> arrow ids.
Word word(const Quiver& q, std::string_view names);

/// Random spec text: one or two vertices, at most four loops, at most two
/// arrows between the vertices, both flavors, characteristics 0, 2 and 3.
std::string random_spec_text(std::mt19937& rng);

/// z commutes with every arrow (sign-twisted by degree when graded).
/// The algebra must be truncated at least at deg z + 1.
bool oracle_is_central(TruncatedAlgebra& alg, const Word& z, bool graded = false);

}  // namespace paqa::testing
