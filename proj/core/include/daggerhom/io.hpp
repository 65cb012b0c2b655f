#pragma once

#include <string>

#include "daggerhom/algebra.hpp"
#include "daggerhom/barcomplex.hpp"
#include "daggerhom/forms.hpp"

namespace daggerhom {

// Element files:
//   {"group": "<spec>", "lambda": "num/den" (optional),
//    "terms": [{"g": <word string | int array | int>, "coeff": "num/den"}]}
AlgebraElement parse_element_json(const std::string& text);
AlgebraElement load_element_file(const std::string& path);
std::string element_to_json(const AlgebraElement& e);

// Chain files:
//   {"group": "<spec>", "degree": n, "reduced": bool,
//    "terms": [{"tuple": [<elements>], "coeff": "num/den"}]}
BarChain parse_chain_json(const std::string& text);
BarChain load_chain_file(const std::string& path);
std::string chain_to_json(const BarChain& ch);

// Tower files: [{"group": "<spec>"},
//               {"group": "<spec>", "generator_images": [..]}, ...]
TowerSpec parse_tower_json(const std::string& text);
TowerSpec load_tower_file(const std::string& path);

}  // namespace daggerhom
