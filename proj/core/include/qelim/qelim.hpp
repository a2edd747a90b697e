#pragma once

#include "qelim/analysis.hpp"
#include "qelim/bounds.hpp"
#include "qelim/decision_tree.hpp"
#include "qelim/distribution.hpp"
#include "qelim/elimination.hpp"
#include "qelim/errors.hpp"
#include "qelim/exact_optimal.hpp"
#include "qelim/function.hpp"
#include "qelim/generators.hpp"
#include "qelim/io.hpp"
#include "qelim/rational.hpp"
#include "qelim/restriction.hpp"
#include "qelim/verify.hpp"
