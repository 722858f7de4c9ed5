#pragma once

#include "mwb/catalog.hpp"
#include "mwb/commands.hpp"
#include "mwb/constructions.hpp"
#include "mwb/corpus.hpp"
#include "mwb/coverage.hpp"
#include "mwb/enumerate.hpp"
#include "mwb/errors.hpp"
#include "mwb/expr.hpp"
#include "mwb/io.hpp"
#include "mwb/monoid.hpp"
#include "mwb/parallel.hpp"
#include "mwb/points.hpp"
#include "mwb/verify.hpp"
