#ifndef INTERTWINE_INTERTWINE_HPP
#define INTERTWINE_INTERTWINE_HPP

#include "intertwine/error.hpp"
#include "intertwine/gf.hpp"
#include "intertwine/poly.hpp"
#include "intertwine/field_create.hpp"
#include "intertwine/matrix.hpp"
#include "intertwine/partitions.hpp"
#include "intertwine/canonical.hpp"
#include "intertwine/code.hpp"
#include "intertwine/construct.hpp"

#endif  // INTERTWINE_INTERTWINE_HPP
