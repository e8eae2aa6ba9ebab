#pragma once

#include "negabase/rational.hpp"
#include "negabase/poly.hpp"
#include "negabase/root_isolation.hpp"
#include "negabase/complex_roots.hpp"
#include "negabase/field.hpp"
#include "negabase/words.hpp"
#include "negabase/expansion.hpp"
#include "negabase/ispoly.hpp"
#include "negabase/classify.hpp"
#include "negabase/lattice.hpp"
#include "negabase/parse.hpp"
#include "negabase/scan.hpp"
