#ifndef STMOP_STMOP_HPP
#define STMOP_STMOP_HPP

#include "configuration.hpp"
#include "construct.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "mop.hpp"
#include "subdivision.hpp"
#include "sweep.hpp"
#include "vertex_set.hpp"

#endif // STMOP_STMOP_HPP
