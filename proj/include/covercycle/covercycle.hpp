#pragma once

#include "covercycle/bigint.hpp"
#include "covercycle/catalog.hpp"
#include "covercycle/census.hpp"
#include "covercycle/edge_space.hpp"
#include "covercycle/errors.hpp"
#include "covercycle/identity.hpp"
#include "covercycle/matrix.hpp"
#include "covercycle/multigraph.hpp"
#include "covercycle/oracle.hpp"
#include "covercycle/series.hpp"
