#ifndef GSPLINE_GSPLINE_HPP
#define GSPLINE_GSPLINE_HPP

#include "gspline/basis.hpp"
#include "gspline/determinant.hpp"
#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/graph_io.hpp"
#include "gspline/hnf.hpp"
#include "gspline/linear_solve.hpp"
#include "gspline/matrix.hpp"
#include "gspline/obstruction.hpp"
#include "gspline/poly_gcd.hpp"
#include "gspline/poly_parser.hpp"
#include "gspline/polynomial.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/ring.hpp"
#include "gspline/ring_element.hpp"
#include "gspline/search.hpp"
#include "gspline/spline.hpp"
#include "gspline/zlattice.hpp"

#endif  // GSPLINE_GSPLINE_HPP
