#pragma once

#include "katzcyc/norm_value.hpp"
#include "katzcyc/rational.hpp"
#include "katzcyc/polynomial.hpp"
#include "katzcyc/finite_field.hpp"
#include "katzcyc/rational_function.hpp"
#include "katzcyc/rings.hpp"
#include "katzcyc/parser.hpp"
#include "katzcyc/matrix.hpp"
#include "katzcyc/poly_x.hpp"
#include "katzcyc/diffmod.hpp"
#include "katzcyc/katz.hpp"
#include "katzcyc/ultranorm.hpp"
