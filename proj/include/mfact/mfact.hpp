#ifndef MFACT_MFACT_HPP
#define MFACT_MFACT_HPP

#include "correspondence.hpp"
#include "error.hpp"
#include "factorization.hpp"
#include "field.hpp"
#include "graded.hpp"
#include "groebner.hpp"
#include "homological.hpp"
#include "matrix.hpp"
#include "parse.hpp"
#include "periodic.hpp"
#include "polynomial.hpp"
#include "presentation.hpp"
#include "ring.hpp"
#include "session.hpp"

#endif
