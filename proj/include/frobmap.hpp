#pragma once

#include "frobmap/cli.hpp"
#include "frobmap/errors.hpp"
#include "frobmap/field.hpp"
#include "frobmap/frobenius.hpp"
#include "frobmap/ideal.hpp"
#include "frobmap/monomial.hpp"
#include "frobmap/monomial_ideal.hpp"
#include "frobmap/parse.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/presets.hpp"
#include "frobmap/problem.hpp"
#include "frobmap/report.hpp"
#include "frobmap/ring.hpp"
#include "frobmap/version.hpp"
