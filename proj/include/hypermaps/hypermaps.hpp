#ifndef HYPERMAPS_HYPERMAPS_HPP
#define HYPERMAPS_HYPERMAPS_HPP

#include "catalog.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "hypermap.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "quotients.hpp"
#include "theta.hpp"
#include "todd_coxeter.hpp"

#endif  // HYPERMAPS_HYPERMAPS_HPP
