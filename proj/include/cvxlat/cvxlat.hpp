#ifndef CVXLAT_CVXLAT_HPP
#define CVXLAT_CVXLAT_HPP

#include "cvxlat/affine_map.hpp"
#include "cvxlat/body.hpp"
#include "cvxlat/classify.hpp"
#include "cvxlat/convex_function.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/generate.hpp"
#include "cvxlat/homomorphism.hpp"
#include "cvxlat/json_io.hpp"
#include "cvxlat/linalg.hpp"
#include "cvxlat/lp.hpp"
#include "cvxlat/radon.hpp"
#include "cvxlat/rational.hpp"
#include "cvxlat/transversal.hpp"

#endif
