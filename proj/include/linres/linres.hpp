#pragma once

#include "linres/analyze.hpp"
#include "linres/betti.hpp"
#include "linres/binomial.hpp"
#include "linres/chordal.hpp"
#include "linres/errors.hpp"
#include "linres/graph.hpp"
#include "linres/hochster.hpp"
#include "linres/io.hpp"
#include "linres/linalg.hpp"
#include "linres/monomial.hpp"
#include "linres/quotients.hpp"
#include "linres/rees.hpp"
