// Everything: parsing, polynomial algebra, constraint preparation,
// projection, lifting, the engine, dumps and bounds.

#ifndef ECCAD_ECCAD_HPP
#define ECCAD_ECCAD_HPP

#include "eccad/bounds.hpp"
#include "eccad/engine.hpp"
#include "eccad/json_io.hpp"

#endif  // ECCAD_ECCAD_HPP
