#pragma once

#include "scmkit/field.hpp"
#include "scmkit/monomial.hpp"
#include "scmkit/ring.hpp"
#include "scmkit/poly.hpp"
#include "scmkit/module.hpp"
#include "scmkit/groebner.hpp"
#include "scmkit/linalg.hpp"
#include "scmkit/resolution.hpp"
#include "scmkit/deficiency.hpp"
#include "scmkit/graph.hpp"
#include "scmkit/decomposition.hpp"
#include "scmkit/filter.hpp"
#include "scmkit/session.hpp"
#include "scmkit/commands.hpp"
