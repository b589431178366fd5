#pragma once

#include "linsat/audit.hpp"
#include "linsat/berge.hpp"
#include "linsat/bounds.hpp"
#include "linsat/candidates.hpp"
#include "linsat/canonical.hpp"
#include "linsat/constructions.hpp"
#include "linsat/enumerate.hpp"
#include "linsat/errors.hpp"
#include "linsat/export.hpp"
#include "linsat/hypergraph.hpp"
#include "linsat/io.hpp"
#include "linsat/saturation.hpp"
#include "linsat/search.hpp"
#include "linsat/shadow.hpp"
