#pragma once

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/laurent_parse.hpp"
#include "talex/multipoly.hpp"
#include "talex/matrix.hpp"
#include "talex/resultant.hpp"
#include "talex/roots.hpp"
#include "talex/words.hpp"
#include "talex/presentation.hpp"
#include "talex/sl2.hpp"
#include "talex/twisted.hpp"
#include "talex/representations.hpp"
#include "talex/solver.hpp"
#include "talex/signature.hpp"
#include "talex/parallel.hpp"
#include "talex/charcurves.hpp"
